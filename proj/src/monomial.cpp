#include "nrack/monomial.hpp"

#include <cctype>
#include <numeric>

#include "nrack/error.hpp"

namespace nrack {

bool NaturalLess::operator()(const std::string& a, const std::string& b) const {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

namespace {

mpq_class frac_mod(const mpq_class& x, long m) {
  // x mod m into [0, m)
  mpz_class q = x.get_num() / (x.get_den() * m);
  mpq_class r = x - mpq_class(q * m);
  while (sgn(r) < 0) r += m;
  while (r >= m) r -= m;
  r.canonicalize();
  return r;
}

}  // namespace

Monomial Monomial::param(const std::string& name, const mpq_class& e) {
  Monomial m;
  if (sgn(e)) m.p_[name] = e;
  return m;
}

Monomial Monomial::torsion(const std::string& name, int order, const mpq_class& e) {
  if (order < 1) throw usage_error("torsion symbol " + name + " needs a positive order");
  Monomial m;
  mpq_class r = frac_mod(e, order);
  if (sgn(r)) m.t_[name] = Torsion{order, r};
  return m;
}

Monomial Monomial::root_of_unity(const mpq_class& r) {
  Monomial m;
  m.c_ = frac_mod(r, 1);
  return m;
}

mpq_class Monomial::param_exp(const std::string& name) const {
  auto it = p_.find(name);
  return it == p_.end() ? mpq_class(0) : it->second;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(const mpq_class& e) const {
  Monomial r;
  if (sgn(e) == 0) return r;
  r.c_ = frac_mod(c_ * e, 1);
  for (const auto& [k, v] : p_) r.p_[k] = v * e;
  for (const auto& [k, t] : t_) {
    mpq_class x = frac_mod(t.exp * e, t.order);
    if (sgn(x)) r.t_[k] = Torsion{t.order, x};
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.c_ = frac_mod(a.c_ + b.c_, 1);
  for (const auto& [k, v] : b.p_) {
    if (a.t_.count(k)) throw usage_error("symbol " + k + " used both as parameter and torsion symbol");
    mpq_class s = r.param_exp(k) + v;
    if (sgn(s))
      r.p_[k] = s;
    else
      r.p_.erase(k);
  }
  for (const auto& [k, t] : b.t_) {
    if (a.p_.count(k)) throw usage_error("symbol " + k + " used both as parameter and torsion symbol");
    auto it = r.t_.find(k);
    if (it == r.t_.end()) {
      r.t_[k] = t;
      continue;
    }
    if (it->second.order != t.order) throw usage_error("torsion symbol " + k + " declared with two orders");
    mpq_class s = frac_mod(it->second.exp + t.exp, t.order);
    if (sgn(s))
      it->second.exp = s;
    else
      r.t_.erase(it);
  }
  return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) { return a * b; }
Monomial mono_pow(const Monomial& a, const mpq_class& e) { return a.pow(e); }

long Monomial::torsion_order() const {
  if (!p_.empty()) return 0;
  mpz_class o = c_.get_den();
  for (const auto& [k, t] : t_) {
    mpz_class bd = t.exp.get_den() * t.order;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), t.exp.get_num().get_mpz_t(), bd.get_mpz_t());
    mpz_class ord = bd / g;
    mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), ord.get_mpz_t());
  }
  return o.get_si();
}

mpz_class Monomial::max_denominator() const {
  mpz_class d = 1;
  for (const auto& [k, v] : p_)
    if (v.get_den() > d) d = v.get_den();
  for (const auto& [k, t] : t_)
    if (t.exp.get_den() > d) d = t.exp.get_den();
  return d;
}

Monomial Monomial::substitute(const std::map<std::string, Monomial, NaturalLess>& subs) const {
  Monomial r = root_of_unity(c_);
  for (const auto& [k, v] : p_) {
    auto it = subs.find(k);
    r *= it == subs.end() ? param(k, v) : it->second.pow(v);
  }
  for (const auto& [k, t] : t_) {
    auto it = subs.find(k);
    r *= it == subs.end() ? torsion(k, t.order, t.exp) : it->second.pow(t.exp);
  }
  return r;
}

namespace {

std::string exp_str(const mpq_class& e) {
  if (e == 1) return "";
  if (e.get_den() == 1) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

}  // namespace

std::string Monomial::str() const {
  std::vector<std::string> parts;
  if (sgn(c_)) {
    if (c_ == mpq_class(1, 2)) {
      parts.push_back("-1");
    } else {
      std::string s = "E(" + c_.get_den().get_str() + ")";
      if (c_.get_num() != 1) s += "^" + c_.get_num().get_str();
      parts.push_back(s);
    }
  }
  auto pi = p_.begin();
  auto ti = t_.begin();
  NaturalLess less;
  while (pi != p_.end() || ti != t_.end()) {
    if (ti == t_.end() || (pi != p_.end() && less(pi->first, ti->first))) {
      parts.push_back(pi->first + exp_str(pi->second));
      ++pi;
    } else {
      parts.push_back(ti->first + exp_str(ti->second.exp));
      ++ti;
    }
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

namespace {

class MonoParser {
 public:
  MonoParser(std::string_view s, const SymbolTable& decl) : s_(s), decl_(decl) {}

  Monomial parse() {
    Monomial m = product();
    ws();
    if (pos_ != s_.size()) fail("trailing input");
    return m;
  }

 private:
  std::string_view s_;
  const SymbolTable& decl_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw usage_error("cannot parse monomial \"" + std::string(s_) + "\": " + why);
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
  bool peek_digit() {
    ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  mpz_class natural() {
    ws();
    std::size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(st, pos_ - st)));
  }
  mpq_class exponent() {
    if (eat('(')) {
      bool neg = eat('-');
      mpq_class e(natural());
      if (eat('/')) e /= mpq_class(natural());
      if (!eat(')')) fail("expected ')' in exponent");
      e.canonicalize();
      return neg ? mpq_class(-e) : e;
    }
    bool neg = eat('-');
    mpq_class e(natural());
    return neg ? mpq_class(-e) : e;
  }
  Monomial product() {
    Monomial m = factor();
    while (true) {
      if (eat('*'))
        m *= factor();
      else if (eat('/'))
        m = m / factor();
      else
        return m;
    }
  }
  Monomial factor() {
    Monomial a = atom();
    if (eat('^')) a = a.pow(exponent());
    return a;
  }
  Monomial atom() {
    ws();
    if (eat('-')) return Monomial::root_of_unity(mpq_class(1, 2)) * atom();
    if (eat('(')) {
      Monomial m = product();
      if (!eat(')')) fail("expected ')'");
      return m;
    }
    if (peek_digit()) {
      mpz_class v = natural();
      if (v != 1) fail("monomials only carry root-of-unity constants");
      return Monomial();
    }
    if (s_.substr(pos_, 2) == "E(") {
      pos_ += 2;
      mpz_class n = natural();
      if (!eat(')')) fail("expected ')'");
      if (n == 0) fail("E(0)");
      return Monomial::root_of_unity(mpq_class(1, n));
    }
    std::size_t st = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (st == pos_) fail("unexpected character");
    std::string name(s_.substr(st, pos_ - st));
    auto it = decl_.find(name);
    if (it != decl_.end()) return Monomial::torsion(name, it->second);
    return Monomial::param(name);
  }
};

}  // namespace

Monomial parse_monomial(std::string_view text, const SymbolTable& decl) { return MonoParser(text, decl).parse(); }

namespace {

Cyclotomic eval_symbol(const std::string& name, const mpq_class& e, const Assignment& a) {
  auto it = a.find(name);
  if (it == a.end()) throw usage_error("no value supplied for symbol " + name);
  const RootValue& rv = it->second;
  mpq_class k = e * rv.root;
  if (k.get_den() != 1)
    throw usage_error("symbol " + name + "^(" + e.get_str() + ") needs a root of degree divisible by " +
                      e.get_den().get_str());
  return rv.value.pow(k.get_num().get_si());
}

}  // namespace

Cyclotomic evaluate(const Monomial& m, const Assignment& a) {
  const mpq_class& c = m.constant();
  Cyclotomic r = sgn(c) ? Cyclotomic::root_of_unity(static_cast<int>(c.get_den().get_si()), c.get_num().get_si())
                        : Cyclotomic(1);
  for (const auto& [k, v] : m.params()) r *= eval_symbol(k, v, a);
  for (const auto& [k, t] : m.torsion_part()) r *= eval_symbol(k, t.exp, a);
  return r;
}

}  // namespace nrack
