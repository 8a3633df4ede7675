#include "nrack/rank.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "nrack/error.hpp"
#include "nrack/modp.hpp"

namespace nrack {

std::size_t rank_mod_dense(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p,
                           kernels::Isa isa) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(piv * cols + cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    std::uint32_t* prow = &a[r * cols];
    std::uint32_t inv = inv_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = mul_mod(prow[j], inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t* row = &a[i * cols];
      if (row[c] == 0) continue;
      kernels::axpy_mod(isa, row + c, prow + c, p - row[c], p, cols - c);
    }
    ++r;
  }
  return r;
}

namespace {

SparseVec<Cyclotomic> sparse_axpy(const SparseVec<Cyclotomic>& x, const SparseVec<Cyclotomic>& y, const Cyclotomic& f) {
  // x + f*y
  SparseVec<Cyclotomic> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, f * y[j].second);
      ++j;
    } else {
      Cyclotomic v = x[i].second + f * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank_exact_sparse(std::vector<SparseVec<Cyclotomic>> rows) {
  std::size_t ncols = 0;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ncols = std::max<std::size_t>(ncols, c + 1);
  std::vector<std::set<std::size_t>> col_rows(ncols);
  std::set<std::size_t> active;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    active.insert(i);
    for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
  }
  std::size_t rank = 0;
  while (!active.empty()) {
    // Markowitz cost (r-1)(c-1) over a few of the sparsest rows.
    std::vector<std::size_t> cand(active.begin(), active.end());
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(4, cand.size())),
                      cand.end(), [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
    std::size_t best_row = cand[0], best_k = 0, best_cost = SIZE_MAX;
    for (std::size_t t = 0; t < std::min<std::size_t>(4, cand.size()); ++t) {
      std::size_t i = cand[t];
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        std::size_t cost = (rows[i].size() - 1) * (col_rows[rows[i][k].first].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = i;
          best_k = k;
        }
      }
    }
    const std::size_t pr = best_row;
    const std::uint32_t pc = rows[pr][best_k].first;
    Cyclotomic pinv = rows[pr][best_k].second.inverse();
    active.erase(pr);
    for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (std::size_t i : targets) {
      auto it = std::lower_bound(rows[i].begin(), rows[i].end(), pc,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      Cyclotomic f = -(it->second * pinv);
      for (const auto& [c, v] : rows[i]) col_rows[c].erase(i);
      rows[i] = sparse_axpy(rows[i], rows[pr], f);
      if (rows[i].empty()) {
        active.erase(i);
        continue;
      }
      for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Largest row count handled by plain elimination.
constexpr std::size_t kDirectLimit = 48;

struct IntEntry {
  std::uint32_t row, col;
  int field;
  std::vector<mpz_class> coeffs;
  std::vector<std::int64_t> small;  // the same coefficients when all fit
};

// Sum of the k largest values.
double top_sum(std::vector<double> v, std::size_t k) {
  k = std::min(k, v.size());
  std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), std::greater<>());
  double s = 0;
  for (std::size_t i = 0; i < k; ++i) s += v[i];
  return s;
}

}  // namespace

std::size_t rank_exact(const std::vector<SparseVec<Cyclotomic>>& rows, std::size_t ncols, kernels::Isa isa) {
  const std::size_t nrows = rows.size();
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ncols = std::max<std::size_t>(ncols, c + 1);
  if (std::min(nrows, ncols) <= kDirectLimit) return rank_exact_sparse(rows);

  // Scale rows to algebraic integers and record coefficient sizes.
  int N = 1;
  std::vector<IntEntry> entries;
  for (std::size_t i = 0; i < nrows; ++i) {
    mpz_class den = 1;
    for (const auto& [c, v] : rows[i])
      for (const auto& q : v.coeffs()) den = lcm(den, mpz_class(q.get_den()));
    for (const auto& [c, v] : rows[i]) {
      if (v.is_zero()) continue;
      IntEntry e{static_cast<std::uint32_t>(i), c, v.field(), {}, {}};
      N = std::lcm(N, v.field());
      for (const auto& q : v.coeffs()) e.coeffs.push_back(q.get_num() * (den / q.get_den()));
      if (std::all_of(e.coeffs.begin(), e.coeffs.end(), [](const mpz_class& z) { return z.fits_slong_p(); }))
        for (const auto& z : e.coeffs) e.small.push_back(z.get_si());
      entries.push_back(std::move(e));
    }
  }
  std::set<int> fields;
  for (const auto& e : entries) fields.insert(e.field);
  const std::size_t full = std::min(nrows, ncols);

  // Row and column log-norms under every complex embedding. The floating
  // value is padded by a bound on its rounding error.
  std::vector<std::vector<double>> row_logs, col_logs;
  for (int k = 1; k <= N; ++k) {
    if (std::gcd(k, N) != 1) continue;
    std::vector<double> row_sq(nrows, 0), col_sq(ncols, 0);
    for (const auto& e : entries) {
      double re = 0, im = 0, l1 = 0;
      for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
        const double c = e.coeffs[j].get_d();
        const double t = 2 * M_PI * static_cast<double>((static_cast<long>(j) * k) % e.field) / e.field;
        re += c * std::cos(t);
        im += c * std::sin(t);
        l1 += std::abs(c);
      }
      const double a = std::hypot(re, im) + l1 * 1e-12;
      row_sq[e.row] += a * a;
      col_sq[e.col] += a * a;
    }
    auto logs = [](const std::vector<double>& sq) {
      std::vector<double> out;
      for (double x : sq) out.push_back(x > 0 ? 0.5 * std::log2(x * (1 + 1e-9)) : 0.0);
      return out;
    };
    row_logs.push_back(logs(row_sq));
    col_logs.push_back(logs(col_sq));
  }
  // log2 of a bound on |norm(D)| for every nonzero minor D of size k.
  auto bound = [&](std::size_t k) {
    double b = 0;
    for (std::size_t s = 0; s < row_logs.size(); ++s)
      b += std::max(0.0, std::min(top_sum(row_logs[s], k), top_sum(col_logs[s], k)));
    return b;
  };

  std::size_t best = 0, used = 0;
  double log_product = 0;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> dense;
  while (best < full && log_product <= bound(best + 1)) {
    if (used == primes.size()) primes = primes_one_mod(N, std::max<std::size_t>(16, 2 * primes.size()));
    if (used == primes.size()) throw Error(ErrorKind::Budget, "rank_exact: ran out of primes");
    const std::uint32_t p = primes[used++];
    const std::uint32_t omega = primitive_root_of_unity(p, N);
    // powers of the image of each field's generator
    std::map<int, std::vector<std::int64_t>> powers;
    for (int f : fields) {
      std::uint32_t w = pow_mod(omega, static_cast<std::uint64_t>(N / f), p), pw = 1;
      auto& tab = powers[f];
      for (int k = 0; k < f; ++k, pw = mul_mod(pw, w, p)) tab.push_back(pw);
    }
    const std::int64_t sp = p;
    dense.assign(nrows * ncols, 0);
    for (const auto& e : entries) {
      const auto& tab = powers.at(e.field);
      std::int64_t acc = 0;
      if (!e.small.empty()) {
        for (std::size_t k = 0; k < e.small.size(); ++k) acc = (acc + (e.small[k] % sp) * tab[k]) % sp;
      } else {
        for (std::size_t k = 0; k < e.coeffs.size(); ++k)
          acc = (acc + static_cast<std::int64_t>(mpz_fdiv_ui(e.coeffs[k].get_mpz_t(), p)) * tab[k]) % sp;
      }
      dense[e.row * ncols + e.col] = static_cast<std::uint32_t>(acc < 0 ? acc + sp : acc);
    }
    best = std::max(best, rank_mod_dense(dense, nrows, ncols, p, isa));
    log_product += std::log2(static_cast<double>(p));
  }
  return best;
}

std::vector<std::vector<Cyclotomic>> kernel_exact(const std::vector<SparseVec<Cyclotomic>>& cols, std::size_t dim) {
  // Dense reduced row echelon form of the dim x ncols matrix.
  std::size_t n = cols.size();
  std::vector<std::vector<Cyclotomic>> a(dim, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, v] : cols[j]) a[i][j] = v;
  std::vector<long> pivot_col_row(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < dim; ++c) {
    std::size_t p = r;
    while (p < dim && a[p][c].is_zero()) ++p;
    if (p == dim) continue;
    std::swap(a[p], a[r]);
    Cyclotomic inv = a[r][c].inverse();
    for (std::size_t j = c; j < n; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Cyclotomic f = a[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_col_row[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_col_row[f] >= 0) continue;
    std::vector<Cyclotomic> v(n, Cyclotomic(0));
    v[f] = Cyclotomic(1);
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_col_row[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_col_row[c])][f];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace nrack
