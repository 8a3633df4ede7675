#include "nrack/multsolve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nrack/error.hpp"

namespace nrack {

std::size_t SolutionFamily::index_of(const std::string& unknown) const {
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    if (unknowns[i] == unknown) return i;
  throw usage_error("unknown " + unknown + " not in family");
}

Monomial substitute_row(const MultRow& row, const std::vector<Monomial>& values) {
  Monomial m = row.rhs.inverse();
  for (std::size_t i = 0; i < row.exps.size(); ++i)
    if (sgn(row.exps[i])) m *= values[i].pow(mpq_class(row.exps[i]));
  return m;
}

namespace {

// Applies the same row operations to right-hand sides and to row combinations.
class RhsTracker : public RowListener {
 public:
  RhsTracker(std::vector<Monomial>& rhs, IntMat& combo) : rhs_(rhs), combo_(combo) {}
  void swap(std::size_t i, std::size_t j) override {
    std::swap(rhs_[i], rhs_[j]);
    std::swap(combo_[i], combo_[j]);
  }
  void addmul(std::size_t dst, std::size_t src, const mpz_class& k) override {
    rhs_[dst] *= rhs_[src].pow(mpq_class(k));
    for (std::size_t j = 0; j < combo_[dst].size(); ++j)
      if (sgn(combo_[src][j])) combo_[dst][j] += k * combo_[src][j];
  }
  void negate(std::size_t i) override {
    rhs_[i] = rhs_[i].inverse();
    for (auto& v : combo_[i]) v = -v;
  }

 private:
  std::vector<Monomial>& rhs_;
  IntMat& combo_;
};

std::size_t nnz(const IntVec& v) {
  std::size_t c = 0;
  for (const auto& x : v) c += sgn(x) != 0;
  return c;
}

bool is_zero(const IntVec& v) { return nnz(v) == 0; }

void collect_symbols(const Monomial& m, std::set<std::string>& out) {
  for (const auto& [k, v] : m.params()) out.insert(k);
  for (const auto& [k, t] : m.torsion_part()) out.insert(k);
}

}  // namespace

SolveResult solve(const MultSystem& sys, const SolveOptions& opt) {
  const std::size_t n = sys.unknowns.size();
  std::set<std::string> unknown_names(sys.unknowns.begin(), sys.unknowns.end());
  std::set<std::string> used_symbols(unknown_names);
  for (const auto& row : sys.rows) {
    if (row.exps.size() != n) throw usage_error("solve: row width differs from unknown count");
    std::set<std::string> syms;
    collect_symbols(row.rhs, syms);
    for (const auto& s : syms)
      if (unknown_names.count(s)) throw usage_error("solve: right-hand side mentions unknown " + s);
    used_symbols.insert(syms.begin(), syms.end());
  }

  // Drop trivial and repeated rows, remembering which input row each survivor came from.
  IntMat W;
  std::vector<Monomial> rhs;
  std::vector<std::size_t> origin;
  {
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
      const auto& row = sys.rows[i];
      if (is_zero(row.exps) && row.rhs.is_one()) continue;
      std::vector<std::string> key;
      for (const auto& e : row.exps) key.push_back(e.get_str());
      if (!seen.insert({key, row.rhs.str()}).second) continue;
      W.push_back(row.exps);
      rhs.push_back(row.rhs);
      origin.push_back(i);
    }
  }
  const std::size_t r = W.size();
  IntMat combo(r, IntVec(sys.rows.size(), 0));
  for (std::size_t i = 0; i < r; ++i) combo[i][origin[i]] = 1;
  RhsTracker tracker(rhs, combo);

  SolutionFamily fam;
  fam.unknowns = sys.unknowns;
  {
    SmithForm s = smith_normal_form(W, n);
    fam.free_rank = n - s.rank;
    for (const auto& d : s.diag)
      if (d > 1) fam.torsion_orders.push_back(d);
  }

  std::vector<long> pivot_row(n, -1);
  std::vector<char> is_pivot_row(r, 0);
  auto eliminate = [&](std::size_t prow, std::size_t c) {
    if (W[prow][c] == -1) {
      for (auto& v : W[prow]) v = -v;
      tracker.negate(prow);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == prow || sgn(W[i][c]) == 0) continue;
      mpz_class k = -W[i][c];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(W[prow][j])) W[i][j] += k * W[prow][j];
      tracker.addmul(i, prow, k);
    }
    pivot_row[c] = static_cast<long>(prow);
    is_pivot_row[prow] = 1;
  };

  std::vector<std::size_t> residual;
  while (true) {
    for (std::size_t c = n; c-- > 0;) {
      if (pivot_row[c] >= 0) continue;
      std::size_t best = r;
      for (std::size_t i = 0; i < r; ++i) {
        if (is_pivot_row[i] || abs(W[i][c]) != 1) continue;
        if (best == r || nnz(W[i]) < nnz(W[best])) best = i;
      }
      if (best != r) eliminate(best, c);
    }
    // Echelonize what is left; a unit pivot there means another dependent unknown.
    residual.clear();
    for (std::size_t i = 0; i < r; ++i)
      if (!is_pivot_row[i]) residual.push_back(i);
    IntMat sub;
    std::vector<Monomial> sub_rhs;
    IntMat sub_combo;
    for (std::size_t i : residual) {
      sub.push_back(W[i]);
      sub_rhs.push_back(rhs[i]);
      sub_combo.push_back(combo[i]);
    }
    std::vector<std::size_t> order;
    for (std::size_t c = n; c-- > 0;)
      if (pivot_row[c] < 0) order.push_back(c);
    RhsTracker sub_tracker(sub_rhs, sub_combo);
    std::vector<Pivot> piv = hermite_rows(sub, order, &sub_tracker);
    for (std::size_t k = 0; k < residual.size(); ++k) {
      W[residual[k]] = sub[k];
      rhs[residual[k]] = sub_rhs[k];
      combo[residual[k]] = sub_combo[k];
    }
    bool again = false;
    for (const auto& p : piv)
      if (W[residual[p.row]][p.col] == 1) {
        eliminate(residual[p.row], p.col);
        again = true;
        break;
      }
    if (!again) break;
  }

  // Rows with no unknown left: conditions on external symbols or a contradiction.
  std::vector<std::size_t> cond_rows;
  for (std::size_t i : residual) {
    if (!is_zero(W[i])) {
      cond_rows.push_back(i);
      continue;
    }
    if (rhs[i].is_one()) continue;
    if (rhs[i].is_constant()) return Inconsistency{combo[i], rhs[i], "rows combine to 1 = " + rhs[i].str()};
    fam.external_conditions.push_back(rhs[i]);
  }
  {
    ConditionLattice ext(fam.external_conditions);
    if (!ext.consistent())
      return Inconsistency{{}, Monomial::root_of_unity(mpq_class(1, 2)),
                           "conditions on external symbols are contradictory"};
    fam.external_conditions = ext.simplified();
  }

  // Relation view.
  fam.expr.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) {
      fam.parameters.push_back(sys.unknowns[c]);
      fam.expr[c] = Monomial::param(sys.unknowns[c]);
      continue;
    }
    fam.dependent.push_back(sys.unknowns[c]);
    const auto& row = W[static_cast<std::size_t>(pivot_row[c])];
    Monomial m = rhs[static_cast<std::size_t>(pivot_row[c])];
    for (std::size_t j = 0; j < n; ++j)
      if (j != c && sgn(row[j])) m *= Monomial::param(sys.unknowns[j], mpq_class(-row[j]));
    fam.expr[c] = m;
  }
  for (std::size_t i : cond_rows) {
    Monomial m = rhs[i].inverse();
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(W[i][j])) m *= Monomial::param(sys.unknowns[j], mpq_class(W[i][j]));
    fam.conditions.push_back(m);
  }

  // Resolved view: pick the smallest parameters that stay independent, solve the rest by SNF.
  std::vector<std::size_t> params;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) params.push_back(c);
  const std::size_t k = cond_rows.size();
  auto rank_without = [&](const std::set<std::size_t>& drop) {
    IntMat m;
    for (std::size_t i : cond_rows) {
      IntVec row;
      for (std::size_t c : params)
        if (!drop.count(c)) row.push_back(W[i][c]);
      m.push_back(row);
    }
    return rank_q(m, params.size() - drop.size());
  };
  std::set<std::size_t> F;
  for (std::size_t c : params) {
    if (params.size() - F.size() == k) break;
    std::set<std::size_t> trial = F;
    trial.insert(c);
    if (rank_without(trial) == k) F = trial;
  }
  std::vector<std::size_t> K;
  for (std::size_t c : params)
    if (!F.count(c)) K.push_back(c);
  for (std::size_t c : F) fam.free_params.push_back(sys.unknowns[c]);

  std::map<std::string, Monomial, NaturalLess> subs;
  if (k > 0) {
    IntMat CK;
    std::vector<Monomial> beta;
    for (std::size_t i : cond_rows) {
      IntVec row;
      for (std::size_t c : K) row.push_back(W[i][c]);
      CK.push_back(row);
      Monomial b = rhs[i];
      for (std::size_t c : F)
        if (sgn(W[i][c])) b *= Monomial::param(sys.unknowns[c], mpq_class(-W[i][c]));
      beta.push_back(b);
    }
    SmithForm s = smith_normal_form(CK, K.size());
    if (s.rank != K.size()) throw Error(ErrorKind::Internal, "solve: constrained block is singular");
    std::vector<Monomial> y(K.size());
    int counter = 0;
    for (std::size_t j = 0; j < K.size(); ++j) {
      Monomial g;
      for (std::size_t i = 0; i < k; ++i)
        if (sgn(s.U[j][i])) g *= beta[i].pow(mpq_class(s.U[j][i]));
      const mpz_class& d = s.diag[j];
      y[j] = g.pow(mpq_class(1, d));
      if (d > 1) {
        std::string name;
        do name = opt.torsion_prefix + std::to_string(++counter);
        while (used_symbols.count(name));
        used_symbols.insert(name);
        fam.torsion[name] = static_cast<int>(d.get_si());
        y[j] *= Monomial::torsion(name, static_cast<int>(d.get_si()));
      }
    }
    for (std::size_t a = 0; a < K.size(); ++a) {
      Monomial m;
      for (std::size_t j = 0; j < K.size(); ++j)
        if (sgn(s.V[a][j])) m *= y[j].pow(mpq_class(s.V[a][j]));
      subs[sys.unknowns[K[a]]] = m;
    }
  }
  fam.resolved.resize(n);
  for (std::size_t c = 0; c < n; ++c) fam.resolved[c] = fam.expr[c].substitute(subs);

  if (opt.max_denominator > 0)
    for (const auto& m : fam.resolved)
      if (m.max_denominator() > opt.max_denominator)
        throw budget_error("exponent denominator exceeds cap " + std::to_string(opt.max_denominator) + " in " +
                           m.str());
  return fam;
}

// ---------------------------------------------------------------------------

namespace {

struct Coords {
  std::vector<std::string> params;
  std::vector<std::pair<std::string, int>> tors;
};

std::vector<mpq_class> to_vec(const Monomial& m, const Coords& co) {
  std::vector<mpq_class> v;
  for (const auto& p : co.params) v.push_back(m.param_exp(p));
  for (const auto& [t, d] : co.tors) {
    auto it = m.torsion_part().find(t);
    v.push_back(it == m.torsion_part().end() ? mpq_class(0) : it->second.exp);
  }
  v.push_back(m.constant());
  return v;
}

Monomial from_vec(const IntVec& v, const mpz_class& L, const Coords& co) {
  Monomial m;
  std::size_t i = 0;
  for (const auto& p : co.params) m *= Monomial::param(p, mpq_class(v[i++], L));
  for (const auto& [t, d] : co.tors) m *= Monomial::torsion(t, d, mpq_class(v[i++], L));
  m *= Monomial::root_of_unity(mpq_class(v[i], L));
  return m;
}

Coords coords_of(const std::vector<Monomial>& ms) {
  std::set<std::string, NaturalLess> ps;
  std::map<std::string, int, NaturalLess> ts;
  for (const auto& m : ms) {
    for (const auto& [k, v] : m.params()) ps.insert(k);
    for (const auto& [k, t] : m.torsion_part()) ts[k] = t.order;
  }
  Coords c;
  c.params.assign(ps.begin(), ps.end());
  for (const auto& [k, d] : ts) c.tors.push_back({k, d});
  return c;
}

struct Lattice {
  Coords co;
  mpz_class L = 1;
  IntMat rows;
  std::vector<Pivot> piv;
};

Lattice build_lattice(const std::vector<Monomial>& conds, const std::vector<Monomial>& extra) {
  std::vector<Monomial> all = conds;
  all.insert(all.end(), extra.begin(), extra.end());
  Lattice lat;
  lat.co = coords_of(all);
  std::vector<std::vector<mpq_class>> qs;
  for (const auto& m : conds) qs.push_back(to_vec(m, lat.co));
  std::size_t width = lat.co.params.size() + lat.co.tors.size() + 1;
  for (std::size_t t = 0; t < lat.co.tors.size(); ++t) {
    std::vector<mpq_class> v(width, 0);
    v[lat.co.params.size() + t] = lat.co.tors[t].second;
    qs.push_back(v);
  }
  {
    std::vector<mpq_class> v(width, 0);
    v.back() = 1;
    qs.push_back(v);
  }
  for (const auto& m : extra)
    for (const auto& x : to_vec(m, lat.co)) mpz_lcm(lat.L.get_mpz_t(), lat.L.get_mpz_t(), x.get_den().get_mpz_t());
  for (const auto& q : qs)
    for (const auto& x : q) mpz_lcm(lat.L.get_mpz_t(), lat.L.get_mpz_t(), x.get_den().get_mpz_t());
  for (const auto& q : qs) {
    IntVec row;
    for (const auto& x : q) row.push_back(mpz_class(x * lat.L));
    lat.rows.push_back(row);
  }
  std::vector<std::size_t> order(width);
  for (std::size_t i = 0; i < width; ++i) order[i] = i;
  lat.piv = hermite_rows(lat.rows, order);
  return lat;
}

bool member(const Lattice& lat, const Monomial& m) {
  std::vector<mpq_class> q = to_vec(m, lat.co);
  // Symbols outside the lattice coordinates must be absent.
  Monomial back;
  {
    IntVec tmp;
    for (const auto& x : q) {
      mpq_class s = x * lat.L;
      if (s.get_den() != 1) return false;
      tmp.push_back(s.get_num());
    }
    back = from_vec(tmp, lat.L, lat.co);
    if (!(back / m).is_one()) return false;
    for (const auto& p : lat.piv) {
      const mpz_class& a = lat.rows[p.row][p.col];
      if (!mpz_divisible_p(tmp[p.col].get_mpz_t(), a.get_mpz_t())) return false;
      mpz_class f = tmp[p.col] / a;
      for (std::size_t j = 0; j < tmp.size(); ++j) tmp[j] -= f * lat.rows[p.row][j];
    }
    for (const auto& x : tmp)
      if (sgn(x)) return false;
  }
  return true;
}

}  // namespace

ConditionLattice::ConditionLattice(std::vector<Monomial> conditions) : conds_(std::move(conditions)) {
  Lattice lat = build_lattice(conds_, {});
  for (const auto& p : lat.piv) {
    if (p.col + 1 == lat.rows[p.row].size()) consistent_ = lat.rows[p.row][p.col] == lat.L;
    Monomial m = from_vec(lat.rows[p.row], lat.L, lat.co);
    if (!m.is_one()) basis_.push_back(m);
  }
}

bool ConditionLattice::implies(const Monomial& m) const {
  if (m.is_one()) return true;
  if (!consistent_) return true;
  return member(build_lattice(conds_, {m}), m);
}

bool ConditionLattice::consistent() const { return consistent_; }

std::vector<Monomial> ConditionLattice::simplified() const { return basis_; }

}  // namespace nrack
