#include "nrack/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "nrack/error.hpp"

namespace nrack {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw usage_error("cyclotomic polynomial of order < 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const std::vector<long>& den = cyclotomic_polynomial(d);
    std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
      long c = num[k];  // den is monic
      q[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
      if (k == dd) break;
    }
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, num).first->second;
}

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// Reduce in place modulo Phi_n, leaving exactly phi(n) coefficients.
void reduce_mod(Poly& a, int n) {
  const std::vector<long>& phi = cyclotomic_polynomial(n);
  std::size_t d = phi.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    if (sgn(a[k]) == 0) continue;
    mpq_class c = a[k];
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j]) a[k - d + j] -= c * phi[j];
  }
  a.resize(d);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j])) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a = q*b + r over Q.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (sgn(a[k]) == 0) {
      if (k == 0) break;
      continue;
    }
    mpq_class c = a[k] / b.back();
    q[k - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    if (k == 0) break;
  }
  trim(a);
  r = a;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint32_t mpz_mod_u32(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (sgn(r) < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Cyclotomic::Cyclotomic(int n, std::vector<mpq_class> coeffs) : n_(n), c_(std::move(coeffs)) {
  if (n < 1) throw usage_error("cyclotomic field order must be >= 1");
  for (auto& c : c_) c.canonicalize();
  reduce_mod(c_, n_);
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw usage_error("root of unity of order < 1");
  long kk = ((k % n) + n) % n;
  Poly p(static_cast<std::size_t>(kk) + 1, 0);
  p[static_cast<std::size_t>(kk)] = 1;
  return Cyclotomic(n, std::move(p));
}

Cyclotomic cyc_root_of_unity(int n, long k) { return Cyclotomic::root_of_unity(n, k); }

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c)) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i])) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

mpq_class Cyclotomic::rational() const {
  if (!is_rational()) throw usage_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m == n_) return *this;
  if (m % n_) throw usage_error("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(m) + ")");
  int s = m / n_;
  Poly p(c_.empty() ? 1 : (c_.size() - 1) * static_cast<std::size_t>(s) + 1, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) p[k * static_cast<std::size_t>(s)] = c_[k];
  return Cyclotomic(m, std::move(p));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) + b.lift(m);
  }
  Cyclotomic r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) - b.lift(m);
  }
  Cyclotomic r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) * b.lift(m);
  }
  if (a.n_ <= 2) {
    Cyclotomic r = a;
    r.c_[0] *= b.c_[0];
    return r;
  }
  Poly p = poly_mul(a.c_, b.c_);
  if (p.empty()) return Cyclotomic(a.n_, {});
  Cyclotomic r;
  r.n_ = a.n_;
  reduce_mod(p, a.n_);
  r.c_ = std::move(p);
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) == b.lift(m);
  }
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw verification_error("division by zero in Q(zeta_" + std::to_string(n_) + ")");
  if (is_rational()) return Cyclotomic(n_, {1 / c_[0]});
  // Extended Euclid: track s with s*a = r (mod Phi).
  const std::vector<long>& phi = cyclotomic_polynomial(n_);
  Poly r0(phi.begin(), phi.end()), r1 = c_;
  trim(r1);
  Poly s0, s1{1};
  while (r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant.
  for (auto& c : s1) c /= r1[0];
  return Cyclotomic(n_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r(n_, {1});
  Cyclotomic b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int Cyclotomic::root_order() const {
  // Roots of unity in Q(zeta_N) are +-zeta_N^k.
  int n = n_;
  if (n <= 2) {
    if (c_[0] == 1) return 1;
    if (c_[0] == -1) return 2;
    return 0;
  }
  // A root of unity has exactly one nonzero coordinate in some lift; test directly.
  for (long k = 0; k < n; ++k) {
    Cyclotomic z = root_of_unity(n, k);
    if (z == *this) return n / std::gcd(n, static_cast<int>(k));
    if (-z == *this) {
      int num = static_cast<int>(2 * k + n), den = 2 * n;
      return den / std::gcd(num, den);
    }
  }
  return 0;
}

namespace {

std::string root_str(int num, int den) {
  int g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return "1";
  if (den == 2) return "-1";
  std::string s = "E(" + std::to_string(den) + ")";
  if (num != 1) s += "^" + std::to_string(num);
  return s;
}

}  // namespace

std::string Cyclotomic::str() const {
  if (is_rational()) return c_[0].get_str();
  int ord = root_order();
  if (ord) {
    for (long k = 0; k < ord; ++k)
      if (root_of_unity(ord, k) == *this) return root_str(static_cast<int>(k), ord);
  }
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    mpq_class a = abs(c_[k]);
    bool neg = sgn(c_[k]) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "E(" + std::to_string(n_) + ")";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool Cyclotomic::mod_image(std::uint32_t p, std::uint32_t omega, std::uint32_t& out) const {
  std::uint64_t acc = 0, w = 1;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k])) {
      std::uint32_t den = mpz_mod_u32(c_[k].get_den(), p);
      if (den == 0) return false;
      std::uint64_t num = mpz_mod_u32(c_[k].get_num(), p);
      std::uint64_t v = num * powmod(den, p - 2, p) % p;
      acc = (acc + v * w) % p;
    }
    w = w * omega % p;
  }
  out = static_cast<std::uint32_t>(acc);
  return true;
}

bool is_primitive_root(const Cyclotomic& x, int m) { return m >= 1 && x.root_order() == m; }

namespace {

class CycParser {
 public:
  explicit CycParser(std::string_view s) : s_(s) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw usage_error("cannot parse cyclotomic \"" + std::string(s_) + "\": " + why);
  }
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    ws();
    std::size_t st = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_ || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected integer");
    return std::stol(std::string(s_.substr(st, pos_ - st)));
  }
  Cyclotomic expr() {
    Cyclotomic v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Cyclotomic term() {
    Cyclotomic v = factor();
    while (true) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }
  Cyclotomic factor() {
    if (eat('-')) return -factor();
    Cyclotomic b = base();
    if (eat('^')) b = b.pow(integer());
    return b;
  }
  Cyclotomic base() {
    ws();
    if (eat('(')) {
      Cyclotomic v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Cyclotomic(mpq_class(mpz_class(std::string(s_.substr(st, pos_ - st)))));
    }
    if (s_.substr(pos_, 2) == "E(") {
      pos_ += 2;
      long n = integer();
      if (!eat(')')) fail("expected ')'");
      if (n < 1) fail("root order must be positive");
      return Cyclotomic::root_of_unity(static_cast<int>(n), 1);
    }
    if (s_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      long n = integer();
      if (n < 1) fail("root order must be positive");
      return Cyclotomic::root_of_unity(static_cast<int>(n), 1);
    }
    if (s_.substr(pos_, 1) == "i") {
      ++pos_;
      return Cyclotomic::root_of_unity(4, 1);
    }
    fail("unexpected character");
  }
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) { return CycParser(text).parse(); }

}  // namespace nrack
