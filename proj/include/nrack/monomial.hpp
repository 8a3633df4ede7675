#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nrack/cyclotomic.hpp"

namespace nrack {

// Orders names so that x2 < x10.
struct NaturalLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

// Torsion symbols and their orders; every other symbol is a free nonzero parameter.
using SymbolTable = std::map<std::string, int, NaturalLess>;

// c * prod p^(a_p) * prod t^(e_t) with c = exp(2 pi i r), r in [0,1),
// parameters p with rational exponents, torsion symbols t (t^d = 1) with exponents in [0,d).
// A fractional power of a symbol names a fixed compatible choice of root.
class Monomial {
 public:
  struct Torsion {
    int order;
    mpq_class exp;
    friend bool operator==(const Torsion&, const Torsion&) = default;
  };

  Monomial() = default;
  static Monomial param(const std::string& name, const mpq_class& e = 1);
  static Monomial torsion(const std::string& name, int order, const mpq_class& e = 1);
  // exp(2 pi i r)
  static Monomial root_of_unity(const mpq_class& r);

  const mpq_class& constant() const { return c_; }
  const std::map<std::string, mpq_class, NaturalLess>& params() const { return p_; }
  const std::map<std::string, Torsion, NaturalLess>& torsion_part() const { return t_; }

  bool is_one() const { return sgn(c_) == 0 && p_.empty() && t_.empty(); }
  bool is_constant() const { return p_.empty() && t_.empty(); }
  mpq_class param_exp(const std::string& name) const;

  Monomial inverse() const;
  Monomial pow(const mpq_class& e) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  Monomial& operator*=(const Monomial& b) { return *this = *this * b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Order of the torsion and constant part; 0 if parameters are present.
  long torsion_order() const;
  // Largest exponent denominator over parameters and torsion symbols.
  mpz_class max_denominator() const;

  // Replaces parameter/torsion symbols by monomials (fractional exponents use Monomial::pow).
  Monomial substitute(const std::map<std::string, Monomial, NaturalLess>& subs) const;

  std::string str() const;

 private:
  mpq_class c_;
  std::map<std::string, mpq_class, NaturalLess> p_;
  std::map<std::string, Torsion, NaturalLess> t_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, const mpq_class& e);

// Grammar: products/quotients of factors, factor = atom [^ exponent], atom = symbol | integer
// | -1 | E(n) | ( product ); exponent = int | (a/b). Symbols in `decl` are torsion symbols.
Monomial parse_monomial(std::string_view text, const SymbolTable& decl = {});

// Value of symbol^(1/root) for every symbol that appears.
struct RootValue {
  Cyclotomic value;
  long root = 1;
};
using Assignment = std::map<std::string, RootValue, NaturalLess>;

Cyclotomic evaluate(const Monomial& m, const Assignment& a);

}  // namespace nrack
