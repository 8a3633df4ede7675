#include <doctest.h>

#include <random>

#include "nrack/kernels/axpy.hpp"
#include "nrack/modp.hpp"
#include "nrack/rank.hpp"

using namespace nrack;
using kernels::Isa;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> v{Isa::Scalar};
  if (kernels::best_isa() == Isa::Avx2) v.push_back(Isa::Avx2);
  return v;
}

}  // namespace

TEST_CASE("axpy variants agree on every length and prime") {
  MESSAGE("best isa: " << std::string(kernels::isa_name(kernels::best_isa())));
  std::mt19937 rng(21);
  for (std::uint32_t p : {3u, 13u, 65537u, (1u << 26) - 5u, primes_one_mod(12, 1)[0]}) {
    for (std::size_t len : {0, 1, 7, 8, 9, 15, 16, 17, 33, 100, 1000}) {
      std::vector<std::uint32_t> dst(len), src(len);
      for (auto& x : dst) x = rng() % p;
      for (auto& x : src) x = rng() % p;
      std::uint32_t f = rng() % p;
      std::vector<std::uint32_t> want = dst;
      for (std::size_t k = 0; k < len; ++k) want[k] = static_cast<std::uint32_t>((want[k] + std::uint64_t(f) * src[k]) % p);
      for (Isa isa : available()) {
        std::vector<std::uint32_t> got = dst;
        kernels::axpy_mod(isa, got.data(), src.data(), f, p, len);
        CHECK(got == want);
      }
      // extreme values
      std::vector<std::uint32_t> hi(len, p - 1), top = hi;
      std::vector<std::uint32_t> expect(len, static_cast<std::uint32_t>((p - 1 + std::uint64_t(p - 1) * (p - 1)) % p));
      for (Isa isa : available()) {
        std::vector<std::uint32_t> got = top;
        kernels::axpy_mod(isa, got.data(), hi.data(), p - 1, p, len);
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("dense rank is the same under every variant") {
  std::mt19937 rng(5);
  std::uint32_t p = primes_one_mod(6, 1)[0];
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40, k = 1 + rng() % 20;
    // product of r x k and k x c has rank <= k
    std::vector<std::uint32_t> a(r * k), b(k * c), m(r * c, 0);
    for (auto& x : a) x = rng() % p;
    for (auto& x : b) x = rng() % p;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        std::uint64_t s = 0;
        for (std::size_t l = 0; l < k; ++l) s = (s + std::uint64_t(a[i * k + l]) * b[l * c + j]) % p;
        m[i * c + j] = static_cast<std::uint32_t>(s);
      }
    std::size_t ranks[2] = {0, 0}, n = 0;
    for (Isa isa : available()) {
      auto copy = m;
      ranks[n++] = rank_mod_dense(copy, r, c, p, isa);
    }
    CHECK(ranks[0] <= std::min({r, c, k}));
    if (n == 2) CHECK(ranks[0] == ranks[1]);
  }
}

TEST_CASE("modular helpers") {
  CHECK(is_prime_u32(65537));
  CHECK(!is_prime_u32(65535));
  auto ps = primes_one_mod(10, 5);
  REQUIRE(ps.size() == 5);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(ps[i] % 10 == 1);
    CHECK(ps[i] < (1u << 26));
    if (i) CHECK(ps[i] < ps[i - 1]);
    std::uint32_t w = primitive_root_of_unity(ps[i], 10);
    CHECK(pow_mod(w, 10, ps[i]) == 1);
    CHECK(pow_mod(w, 5, ps[i]) != 1);
    CHECK(pow_mod(w, 2, ps[i]) != 1);
    CHECK(mul_mod(w, inv_mod(w, ps[i]), ps[i]) == 1);
  }
}
