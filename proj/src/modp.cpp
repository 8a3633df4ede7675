#include "nrack/modp.hpp"

#include "nrack/error.hpp"

namespace nrack {

std::uint32_t pow_mod(std::uint32_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw verification_error("inverse of 0 mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_one_mod(int n, std::size_t count, std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (n < 1) throw usage_error("primes_one_mod: n must be positive");
  std::uint64_t step = static_cast<std::uint64_t>(n % 2 ? 2 * n : n);
  // Largest value below bound that is 1 mod step.
  std::uint64_t p = (bound - 2) / step * step + 1;
  for (; p > step && out.size() < count; p -= step)
    if (is_prime_u32(static_cast<std::uint32_t>(p))) out.push_back(static_cast<std::uint32_t>(p));
  if (out.size() < count) throw Error(ErrorKind::Internal, "not enough primes 1 mod " + std::to_string(n));
  return out;
}

std::uint32_t primitive_root_of_unity(std::uint32_t p, int n) {
  if ((p - 1) % static_cast<std::uint32_t>(n)) throw usage_error("n does not divide p-1");
  std::vector<std::uint32_t> factors;
  {
    std::uint32_t m = static_cast<std::uint32_t>(n);
    for (std::uint32_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) factors.push_back(m);
  }
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t w = pow_mod(g, (p - 1) / static_cast<std::uint32_t>(n), p);
    bool ok = true;
    for (std::uint32_t f : factors) ok = ok && pow_mod(w, static_cast<std::uint32_t>(n) / f, p) != 1;
    if (ok) return w;
  }
  throw Error(ErrorKind::Internal, "no primitive root found");
}

}  // namespace nrack
