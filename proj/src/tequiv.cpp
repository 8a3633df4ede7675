#include "nrack/tequiv.hpp"

#include <numeric>
#include <set>

#include "nrack/error.hpp"
#include "nrack/nichols.hpp"

namespace nrack {

Permutation near_rack_tau(const SetSolution& s) {
  auto tau = s.constant_tau();
  if (!tau) throw usage_error("not a near-rack solution: tau_y depends on y");
  if (tau->is_identity()) throw usage_error("not a near-rack solution: tau is the identity");
  if (!tau->is_involution()) throw usage_error("not a near-rack solution: tau is not an involution");
  return *tau;
}

MultSystem z_system(const SymbolicSpace& b) {
  const SetSolution& s = b.solution;
  Permutation tau = near_rack_tau(s);
  const std::size_t m = s.size();
  MultSystem sys;
  for (std::size_t i = 0; i < m; ++i) sys.unknowns.push_back("z" + std::to_string(i + 1));
  std::set<std::pair<std::vector<long>, std::string>> seen;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      int tj = tau(jj), ti = tau(ii);
      std::size_t k = static_cast<std::size_t>(s.sigma(ii)(tj));
      MultRow row;
      row.exps.assign(m, 0);
      row.exps[i] += 2;
      row.exps[j] -= 1;
      row.exps[k] -= 1;
      row.rhs = b.R[i][static_cast<std::size_t>(tj)] / b.R[static_cast<std::size_t>(ti)][j];
      std::vector<long> key;
      for (const auto& e : row.exps) key.push_back(e.get_si());
      if (std::all_of(key.begin(), key.end(), [](long e) { return e == 0; }) && row.rhs.is_one()) continue;
      if (!seen.insert({key, row.rhs.str()}).second) continue;
      sys.rows.push_back(std::move(row));
    }
  return sys;
}

std::vector<Monomial> z_residuals(const SymbolicSpace& b, const std::vector<Monomial>& z) {
  const SetSolution& s = b.solution;
  Permutation tau = near_rack_tau(s);
  const std::size_t m = s.size();
  if (z.size() != m) throw usage_error("z has the wrong length");
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      std::size_t tj = static_cast<std::size_t>(tau(jj)), ti = static_cast<std::size_t>(tau(ii));
      std::size_t k = static_cast<std::size_t>(s.sigma(ii)(tau(jj)));
      out.push_back(z[i] * z[i] * b.R[ti][j] / (z[j] * z[k] * b.R[i][tj]));
    }
  return out;
}

SymbolicCertificate make_certificate(const SymbolicSpace& b, std::vector<Monomial> z,
                                     std::vector<Monomial> conditions) {
  SymbolicCertificate c;
  c.base = b;
  c.tau = near_rack_tau(b.solution);
  if (z.size() != b.dim()) throw usage_error("z has the wrong length");
  c.z = std::move(z);
  c.derived = twist(b, c.z, c.tau);
  c.conditions = std::move(conditions);
  return c;
}

ConcreteCertificate make_certificate(const ConcreteSpace& b, std::vector<Cyclotomic> z) {
  ConcreteCertificate c;
  c.base = b;
  c.tau = near_rack_tau(b.solution);
  if (z.size() != b.dim()) throw usage_error("z has the wrong length");
  for (const auto& v : z)
    if (v.is_zero()) throw usage_error("z entries must be nonzero");
  c.z = std::move(z);
  c.derived = twist(b, c.z, c.tau);
  return c;
}

TEquivResult solve_tequiv(const SymbolicSpace& b, const SolveOptions& opt) {
  MultSystem sys = z_system(b);
  SolveResult res = solve(sys, opt);
  if (auto* inc = std::get_if<Inconsistency>(&res)) {
    TEquivObstruction o;
    o.message = "z-system is inconsistent: " + inc->message;
    o.value = inc->value;
    return o;
  }
  auto& fam = std::get<SolutionFamily>(res);
  SymbolicSpace base = b;
  for (const auto& [name, order] : fam.torsion) base.torsion[name] = order;
  return make_certificate(base, fam.resolved, fam.external_conditions);
}

std::vector<Monomial> involutive_z(const SymbolicSpace& b) {
  Permutation tau = near_rack_tau(b.solution);
  for (const auto& s : b.solution.sigmas())
    if (s != tau) throw usage_error("not an involutive near-rack: sigma_x differs from tau");
  const std::size_t m = b.dim();
  const std::size_t t1 = static_cast<std::size_t>(tau(0));
  std::vector<Monomial> z;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t ti = static_cast<std::size_t>(tau(static_cast<int>(i)));
    z.push_back((b.R[i][t1] / b.R[ti][0]).pow(mpq_class(1, 2)));
  }
  return z;
}

namespace {

struct SymbolInfo {
  bool torsion = false;
  int order = 0;
  mpz_class denom = 1;
};

void scan(const Monomial& m, std::map<std::string, SymbolInfo, NaturalLess>& info) {
  for (const auto& [name, e] : m.params()) {
    auto& s = info[name];
    s.denom = lcm(s.denom, mpz_class(e.get_den()));
  }
  for (const auto& [name, t] : m.torsion_part()) {
    auto& s = info[name];
    s.torsion = true;
    s.order = t.order;
    s.denom = lcm(s.denom, mpz_class(t.exp.get_den()));
  }
}

}  // namespace

std::optional<Assignment> sample_assignment(const SymbolicCertificate& cert, long max_tries) {
  std::map<std::string, SymbolInfo, NaturalLess> info;
  for (const auto& row : cert.base.R)
    for (const auto& v : row) scan(v, info);
  for (const auto& v : cert.z) scan(v, info);
  for (const auto& v : cert.conditions) scan(v, info);
  for (const auto& [name, order] : cert.base.torsion)
    if (info.count(name)) info[name].order = order;

  Assignment a;
  std::vector<std::string> tors;
  for (const auto& [name, s] : info) {
    long root = s.denom.get_si();
    if (s.torsion)
      tors.push_back(name);
    else
      a[name] = RootValue{Cyclotomic(1), root};
  }
  std::vector<int> k(tors.size(), 0);
  for (long tries = 0; tries < max_tries; ++tries) {
    for (std::size_t t = 0; t < tors.size(); ++t) {
      const auto& s = info[tors[t]];
      long root = s.denom.get_si();
      a[tors[t]] = RootValue{cyc_root_of_unity(static_cast<int>(s.order * root), k[t]), root};
    }
    bool ok = true;
    for (const auto& c : cert.conditions)
      if (!evaluate(c, a).is_one()) {
        ok = false;
        break;
      }
    if (ok) return a;
    std::size_t t = 0;
    while (t < tors.size() && ++k[t] == info[tors[t]].order) k[t++] = 0;
    if (t == tors.size()) break;
  }
  return std::nullopt;
}

ConcreteCertificate instantiate(const SymbolicCertificate& cert, const Assignment& a) {
  ConcreteSpace base = instantiate(cert.base, a);
  std::vector<Cyclotomic> z;
  for (const auto& v : cert.z) z.push_back(evaluate(v, a));
  return make_certificate(base, std::move(z));
}

namespace {

MonomialOperator<Cyclotomic> inverse_op(const MonomialOperator<Cyclotomic>& a) {
  MonomialOperator<Cyclotomic> r;
  r.target.assign(a.dim(), 0);
  r.scale.assign(a.dim(), Cyclotomic(1));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    r.target[a.target[k]] = k;
    r.scale[a.target[k]] = a.scale[k].inverse();
  }
  return r;
}

std::optional<std::pair<int, int>> first_z_failure(const ConcreteSpace& b, const std::vector<Cyclotomic>& z,
                                                   const Permutation& tau) {
  const std::size_t m = b.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      std::size_t tj = static_cast<std::size_t>(tau(jj)), ti = static_cast<std::size_t>(tau(ii));
      std::size_t k = static_cast<std::size_t>(b.solution.sigma(ii)(tau(jj)));
      if (z[i] * z[i] * b.R[ti][j] != z[j] * z[k] * b.R[i][tj]) return std::pair<int, int>{ii, jj};
    }
  return std::nullopt;
}

std::optional<std::pair<int, int>> first_difference(const MonomialOperator<Cyclotomic>& a,
                                                    const MonomialOperator<Cyclotomic>& b, std::size_t m) {
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (a.target[k] != b.target[k] || a.scale[k] != b.scale[k])
      return std::pair<int, int>{static_cast<int>(k / m), static_cast<int>(k % m)};
  return std::nullopt;
}

std::string pair_text(const std::pair<int, int>& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

}  // namespace

MonomialOperator<Cyclotomic> phi_operator(const std::vector<Cyclotomic>& z, const Permutation& tau) {
  MonomialOperator<Cyclotomic> p;
  for (std::size_t i = 0; i < z.size(); ++i) {
    p.target.push_back(static_cast<std::size_t>(tau(static_cast<int>(i))));
    p.scale.push_back(z[i]);
  }
  return p;
}

CertificateCheck verify_certificate(const ConcreteCertificate& cert) {
  CertificateCheck r;
  auto fail = [&r](std::string why) {
    r.ok = false;
    r.failure = std::move(why);
    return r;
  };
  const ConcreteSpace& b = cert.base;
  const std::size_t m = b.dim();
  if (cert.z.size() != m || cert.tau.degree() != m) return fail("certificate sizes do not match the space");
  if (auto w = braid_check(b)) {
    r.triple = *w;
    return fail("base braiding fails the braid relation");
  }
  if (auto p = first_z_failure(b, cert.z, cert.tau)) {
    r.pair = *p;
    return fail("z equation fails at " + pair_text(*p));
  }
  MonomialOperator<Cyclotomic> c = braiding_operator(b), phi = phi_operator(cert.z, cert.tau);
  MonomialOperator<Cyclotomic> phi_inv = inverse_op(phi);
  MonomialOperator<Cyclotomic> left = phi_inv.tensor_id(m).after(c.after(phi.tensor_id(m)));
  MonomialOperator<Cyclotomic> right = phi_inv.id_tensor(m).after(c.after(phi.id_tensor(m)));
  MonomialOperator<Cyclotomic> ct = braiding_operator(cert.derived);
  if (auto p = first_difference(left, ct, m)) {
    r.pair = *p;
    return fail("(phi^-1 x id) c (phi x id) differs from the twisted braiding at " + pair_text(*p));
  }
  if (auto p = first_difference(right, ct, m)) {
    r.pair = *p;
    return fail("(id x phi^-1) c (id x phi) differs from the twisted braiding at " + pair_text(*p));
  }
  if (auto w = braid_check(cert.derived)) {
    r.triple = *w;
    return fail("twisted braiding fails the braid relation");
  }
  if (!(cert.derived.solution == derived_solution(b.solution))) return fail("twisted solution is not the derived solution");
  return r;
}

std::optional<std::vector<Cyclotomic>> search_sign_branches(const ConcreteSpace& b, std::vector<Cyclotomic> z,
                                                            std::size_t max_flips) {
  Permutation tau = near_rack_tau(b.solution);
  const std::size_t free = z.empty() ? 0 : z.size() - 1;
  if (free > max_flips) throw budget_error("sign search over " + std::to_string(free) + " entries exceeds the limit");
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    std::vector<Cyclotomic> t = z;
    for (std::size_t k = 0; k < free; ++k)
      if (mask >> k & 1) t[k + 1] = -t[k + 1];
    if (!first_z_failure(b, t, tau)) return t;
  }
  return std::nullopt;
}

MonomialOperator<Cyclotomic> transport_operator(const ConcreteCertificate& cert, int n) {
  const std::size_t m = cert.base.dim();
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= m;
  MonomialOperator<Cyclotomic> u;
  std::vector<std::size_t> letters(static_cast<std::size_t>(n));
  for (std::size_t w = 0; w < total; ++w) {
    std::size_t x = w;
    for (int k = n - 1; k >= 0; --k) {
      letters[static_cast<std::size_t>(k)] = x % m;
      x /= m;
    }
    Cyclotomic s(1);
    std::size_t t = 0;
    for (int k = 0; k < n; ++k) {
      std::size_t a = letters[static_cast<std::size_t>(k)];
      if (k % 2 == 1) {
        s *= cert.z[a];
        a = static_cast<std::size_t>(cert.tau(static_cast<int>(a)));
      }
      t = t * m + a;
    }
    u.target.push_back(t);
    u.scale.push_back(s);
  }
  return u;
}

bool relations_transported(const ConcreteCertificate& cert, int n) {
  const std::size_t m = cert.base.dim();
  std::size_t dim = 1;
  for (int k = 0; k < n; ++k) dim *= m;
  auto cols_c = symmetrizer(cert.base, n);
  auto cols_t = symmetrizer(cert.derived, n);
  auto ker_t = kernel_exact(cols_t, dim);
  auto ker_c = kernel_exact(cols_c, dim);
  if (ker_t.size() != ker_c.size()) return false;
  MonomialOperator<Cyclotomic> u = transport_operator(cert, n);
  for (const auto& v : ker_t) {
    std::vector<Cyclotomic> uv(dim);
    for (std::size_t k = 0; k < dim; ++k)
      if (!v[k].is_zero()) uv[u.target[k]] += u.scale[k] * v[k];
    std::vector<Cyclotomic> img(dim);
    for (std::size_t w = 0; w < dim; ++w) {
      if (uv[w].is_zero()) continue;
      for (const auto& [idx, val] : cols_c[w]) img[idx] += val * uv[w];
    }
    for (const auto& x : img)
      if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace nrack
