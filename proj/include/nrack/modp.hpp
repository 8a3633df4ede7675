#pragma once

#include <cstdint>
#include <vector>

namespace nrack {

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
std::uint32_t pow_mod(std::uint32_t b, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

bool is_prime_u32(std::uint32_t n);

// Largest primes p < bound with p = 1 (mod n), in decreasing order. bound <= 2^26 keeps
// the SIMD kernels exact.
std::vector<std::uint32_t> primes_one_mod(int n, std::size_t count, std::uint32_t bound = 1u << 26);

// A primitive n-th root of unity mod p; requires n | p-1.
std::uint32_t primitive_root_of_unity(std::uint32_t p, int n);

}  // namespace nrack
