#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nrack {

// Element of Q(zeta_N) in the power basis 1, z, .., z^(phi(N)-1), z = exp(2 pi i / N).
// Binary operations on different N lift both operands to Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(long v) : n_(1), c_(1, mpq_class(v)) {}  // NOLINT(implicit)
  Cyclotomic(const mpq_class& v) : n_(1), c_(1, v) {}  // NOLINT(implicit)
  Cyclotomic(int n, std::vector<mpq_class> coeffs);

  static Cyclotomic root_of_unity(int n, long k);

  int field() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational() const;  // throws unless is_rational()

  // Same element expressed in Q(zeta_m); requires N | m.
  Cyclotomic lift(int m) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  // Order if this is a root of unity, 0 otherwise.
  int root_order() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Sum of q*E(n)^k terms; roots of unity print as [-]E(n)^k.
  std::string str() const;

  // Image under zeta_N -> omega in F_p; omega must be a primitive N-th root mod p.
  // Returns false if some denominator vanishes mod p.
  bool mod_image(std::uint32_t p, std::uint32_t omega, std::uint32_t& out) const;

 private:
  int n_;
  std::vector<mpq_class> c_;
};

Cyclotomic cyc_root_of_unity(int n, long k);
bool is_primitive_root(const Cyclotomic& x, int m);

// Accepts integers, fractions, E(n), E(n)^k, zetaN, zetaN^k, sums, products and unary minus.
Cyclotomic parse_cyclotomic(std::string_view text);

int euler_phi(int n);
// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

}  // namespace nrack
