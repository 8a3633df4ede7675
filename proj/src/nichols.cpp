#include "nrack/nichols.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nrack/error.hpp"
#include "nrack/modp.hpp"

namespace nrack {

std::vector<std::vector<int>> symmetrizer_words(int n) {
  if (n < 1) throw usage_error("symmetrizer_words: n must be positive");
  std::vector<std::vector<int>> words{{}};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& u : words)
      for (int len = 0; len < k; ++len) {
        std::vector<int> w = u;
        for (int t = 0; t < len; ++t) w.push_back(k - 1 - t);
        next.push_back(w);
      }
    words = std::move(next);
  }
  return words;
}

std::size_t HilbertData::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

namespace {

struct CycOps {
  using T = Cyclotomic;
  T one() const { return Cyclotomic(1); }
  T mul(const T& a, const T& b) const { return a * b; }
  void add_to(T& a, const T& b) const { a += b; }
  bool is_zero(const T& a) const { return a.is_zero(); }
  std::size_t bytes(const T& a) const { return 48 + 40 * a.coeffs().size(); }
};

struct ModOps {
  using T = std::uint32_t;
  std::uint32_t p;
  T one() const { return 1; }
  T mul(T a, T b) const { return mul_mod(a, b, p); }
  void add_to(T& a, T b) const { a = add_mod(a, b, p); }
  bool is_zero(T a) const { return a == 0; }
  std::size_t bytes(T) const { return 8; }
};

template <class Ops>
class Engine {
 public:
  using T = typename Ops::T;

  Engine(const SetSolution& s, std::vector<std::vector<T>> R, Ops ops, std::size_t budget)
      : m_(s.size()), R_(std::move(R)), ops_(ops), budget_(budget) {
    sig_.assign(m_, std::vector<int>(m_));
    tau_.assign(m_, std::vector<int>(m_));
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b) {
        auto [u, v] = s(static_cast<int>(a), static_cast<int>(b));
        sig_[a][b] = u;
        tau_[a][b] = v;
      }
  }

  int degree() const { return n_; }
  const std::vector<SparseVec<T>>& columns() const { return cols_; }

  // Advance from degree n_ to n_+1.
  void step() {
    if (n_ == 0) {
      cols_.clear();
      for (std::size_t w = 0; w < m_; ++w) cols_.push_back({{static_cast<std::uint32_t>(w), ops_.one()}});
      n_ = 1;
      return;
    }
    const int n = n_ + 1;
    std::size_t total = cols_.size() * m_;
    if (total > (std::size_t{1} << 31)) throw budget_error("symmetrizer: word space too large");
    std::vector<SparseVec<T>> next(total);
    std::size_t bytes = 0;
    std::map<std::uint32_t, T> acc;
    std::vector<int> word(static_cast<std::size_t>(n)), tmp(static_cast<std::size_t>(n));
    for (std::size_t w = 0; w < total; ++w) {
      std::size_t x = w;
      for (int i = n - 1; i >= 0; --i) {
        word[i] = static_cast<int>(x % m_);
        x /= m_;
      }
      acc.clear();
      for (int k = 0; k < n; ++k) {
        // c_{n-1} ... c_{n-k} applied to the word, innermost first.
        tmp = word;
        T coef = ops_.one();
        for (int g = n - k; g <= n - 1; ++g) {
          int a = tmp[g - 1], b = tmp[g];
          coef = ops_.mul(coef, R_[a][b]);
          tmp[g - 1] = sig_[a][b];
          tmp[g] = tau_[a][b];
        }
        std::size_t u = 0;
        for (int i = 0; i < n; ++i) u = u * m_ + static_cast<std::size_t>(tmp[i]);
        std::size_t prefix = u / m_, last = u % m_;
        for (const auto& [v, val] : cols_[prefix]) {
          std::uint32_t idx = static_cast<std::uint32_t>(v * m_ + last);
          T add = ops_.mul(coef, val);
          auto it = acc.find(idx);
          if (it == acc.end())
            acc.emplace(idx, add);
          else
            ops_.add_to(it->second, add);
        }
      }
      for (auto& [idx, val] : acc)
        if (!ops_.is_zero(val)) {
          bytes += ops_.bytes(val);
          next[w].emplace_back(idx, val);
        }
      if (bytes > budget_)
        throw budget_error("symmetrizer degree " + std::to_string(n) + " needs more than " + std::to_string(budget_) +
                           " bytes");
    }
    cols_ = std::move(next);
    n_ = n;
  }

  // Orbits of the braid group action on words of the current degree.
  std::vector<std::vector<std::uint32_t>> orbits() const {
    std::size_t total = cols_.size();
    std::vector<std::uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> word(static_cast<std::size_t>(n_));
    for (std::size_t w = 0; w < total; ++w) {
      std::size_t x = w;
      for (int i = n_ - 1; i >= 0; --i) {
        word[i] = static_cast<int>(x % m_);
        x /= m_;
      }
      for (int g = 0; g + 1 < n_; ++g) {
        std::vector<int> t = word;
        int a = t[g], b = t[g + 1];
        t[g] = sig_[a][b];
        t[g + 1] = tau_[a][b];
        std::size_t u = 0;
        for (int i = 0; i < n_; ++i) u = u * m_ + static_cast<std::size_t>(t[i]);
        std::uint32_t ra = find(static_cast<std::uint32_t>(w)), rb = find(static_cast<std::uint32_t>(u));
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
    std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::size_t w = 0; w < total; ++w) groups[find(static_cast<std::uint32_t>(w))].push_back(static_cast<std::uint32_t>(w));
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& [k, v] : groups) out.push_back(std::move(v));
    return out;
  }

 private:
  std::size_t m_;
  std::vector<std::vector<T>> R_;
  Ops ops_;
  std::size_t budget_;
  std::vector<std::vector<int>> sig_, tau_;
  std::vector<SparseVec<T>> cols_;
  int n_ = 0;
};

std::size_t rank_current_mod(const Engine<ModOps>& e, std::uint32_t p, kernels::Isa isa) {
  const auto& cols = e.columns();
  std::vector<std::uint32_t> local(cols.size());
  std::size_t rank = 0;
  for (const auto& orb : e.orbits()) {
    for (std::size_t k = 0; k < orb.size(); ++k) local[orb[k]] = static_cast<std::uint32_t>(k);
    std::size_t s = orb.size();
    std::vector<std::uint32_t> dense(s * s, 0);
    for (std::size_t k = 0; k < s; ++k)
      for (const auto& [idx, v] : cols[orb[k]]) dense[k * s + local[idx]] = v;
    rank += rank_mod_dense(dense, s, s, p, isa);
  }
  return rank;
}

std::size_t rank_current_exact(const Engine<CycOps>& e) {
  const auto& cols = e.columns();
  std::vector<std::uint32_t> local(cols.size());
  std::size_t rank = 0;
  for (const auto& orb : e.orbits()) {
    for (std::size_t k = 0; k < orb.size(); ++k) local[orb[k]] = static_cast<std::uint32_t>(k);
    std::vector<SparseVec<Cyclotomic>> rows;
    for (std::uint32_t w : orb) {
      SparseVec<Cyclotomic> r;
      for (const auto& [idx, v] : cols[w]) r.emplace_back(local[idx], v);
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(r));
    }
    rank += rank_exact(rows, orb.size());
  }
  return rank;
}

int field_of(const ConcreteSpace& b) {
  int N = 1;
  for (const auto& row : b.R)
    for (const auto& v : row) N = std::lcm(N, v.field());
  return N;
}

bool mod_images(const ConcreteSpace& b, std::uint32_t p, std::uint32_t omega_n, int N,
                std::vector<std::vector<std::uint32_t>>& out) {
  out.assign(b.dim(), std::vector<std::uint32_t>(b.dim()));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Cyclotomic& v = b.R[i][j];
      std::uint32_t w = pow_mod(omega_n, static_cast<std::uint64_t>(N / v.field()), p);
      if (!v.mod_image(p, w, out[i][j])) return false;
      if (out[i][j] == 0) return false;
    }
  return true;
}

std::vector<std::size_t> dims_mod(const ConcreteSpace& b, const NicholsOptions& opt, std::uint32_t p,
                                  std::uint32_t omega, int N, bool& ok) {
  std::vector<std::vector<std::uint32_t>> R;
  ok = mod_images(b, p, omega, N, R);
  if (!ok) return {};
  Engine<ModOps> e(b.solution, R, ModOps{p}, opt.memory_budget);
  std::vector<std::size_t> dims{1};
  for (int n = 1; n <= opt.cutoff; ++n) {
    e.step();
    std::size_t r = rank_current_mod(e, p, opt.isa);
    dims.push_back(r);
    if (r == 0) break;
  }
  return dims;
}

std::vector<std::size_t> dims_exact(const ConcreteSpace& b, const NicholsOptions& opt) {
  Engine<CycOps> e(b.solution, b.R, CycOps{}, opt.memory_budget);
  std::vector<std::size_t> dims{1};
  for (int n = 1; n <= opt.cutoff; ++n) {
    e.step();
    std::size_t r = rank_current_exact(e);
    dims.push_back(r);
    if (r == 0) break;
  }
  return dims;
}

void check_space(const ConcreteSpace& b) {
  if (b.R.size() != b.dim()) throw usage_error("braided space: R table has the wrong size");
  for (const auto& row : b.R) {
    if (row.size() != b.dim()) throw usage_error("braided space: R table has the wrong size");
    for (const auto& v : row)
      if (v.is_zero()) throw usage_error("braided space: coefficients must be nonzero");
  }
}

}  // namespace

std::vector<SparseVec<Cyclotomic>> symmetrizer(const ConcreteSpace& b, int n, std::size_t memory_budget) {
  if (n < 1) throw usage_error("symmetrizer: n must be positive");
  check_space(b);
  Engine<CycOps> e(b.solution, b.R, CycOps{}, memory_budget);
  while (e.degree() < n) e.step();
  return e.columns();
}

std::size_t symmetrizer_rank_mod(const ConcreteSpace& b, int n, std::uint32_t p, kernels::Isa isa) {
  check_space(b);
  int N = field_of(b);
  if ((p - 1) % static_cast<std::uint32_t>(N)) throw usage_error("prime is not 1 mod the field order");
  std::uint32_t omega = primitive_root_of_unity(p, N);
  std::vector<std::vector<std::uint32_t>> R;
  if (!mod_images(b, p, omega, N, R)) throw usage_error("coefficient denominators vanish mod p");
  Engine<ModOps> e(b.solution, R, ModOps{p}, std::size_t{1} << 31);
  while (e.degree() < n) e.step();
  return rank_current_mod(e, p, isa);
}

std::size_t symmetrizer_rank_exact(const ConcreteSpace& b, int n) {
  check_space(b);
  Engine<CycOps> e(b.solution, b.R, CycOps{}, std::size_t{1} << 31);
  while (e.degree() < n) e.step();
  return rank_current_exact(e);
}

HilbertData graded_dims(const ConcreteSpace& b, const NicholsOptions& opt) {
  check_space(b);
  if (opt.cutoff < 1) throw usage_error("graded_dims: cutoff must be positive");
  HilbertData h;
  if (opt.mode == RankMode::Exact) {
    h.dims = dims_exact(b, opt);
    h.certification = "exact";
  } else {
    int N = field_of(b);
    std::vector<std::uint32_t> primes = primes_one_mod(N, opt.prime_pool);
    std::vector<std::pair<std::uint32_t, std::vector<std::size_t>>> runs;
    for (std::uint32_t p : primes) {
      if (runs.size() == 3) break;
      bool ok = false;
      auto d = dims_mod(b, opt, p, primitive_root_of_unity(p, N), N, ok);
      if (!ok) continue;
      runs.emplace_back(p, d);
      if (runs.size() == 2 && runs[0].second == runs[1].second) break;
    }
    if (runs.size() < 2) throw Error(ErrorKind::Internal, "graded_dims: no usable primes");
    bool agreed = runs.size() == 2 || (runs[2].second == runs[0].second || runs[2].second == runs[1].second);
    if (agreed) {
      h.dims = runs.size() == 2 ? runs[0].second : runs[2].second;
      h.certification = "modular(";
      for (std::size_t k = 0; k < runs.size(); ++k)
        h.certification += (k ? "," : "") + std::to_string(runs[k].first);
      h.certification += ")";
    } else {
      h.dims = dims_exact(b, opt);
      h.certification = "exact";
    }
  }
  if (h.dims.back() == 0) h.finite = Finiteness::Finite;
  return h;
}

GradedComparison compare_graded(const ConcreteSpace& a, const ConcreteSpace& b, int cutoff, RankMode mode) {
  if (a.dim() != b.dim()) throw usage_error("compare_graded: dimensions differ");
  NicholsOptions opt;
  opt.cutoff = cutoff;
  opt.mode = mode;
  GradedComparison c;
  c.first = graded_dims(a, opt);
  c.second = graded_dims(b, opt);
  auto pad = [cutoff](std::vector<std::size_t> d) {
    d.resize(static_cast<std::size_t>(cutoff) + 1, 0);
    return d;
  };
  c.equal = pad(c.first.dims) == pad(c.second.dims);
  return c;
}

}  // namespace nrack
