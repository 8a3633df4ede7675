#include "nrack/intmat.hpp"

#include <algorithm>
#include <array>

#include "nrack/error.hpp"

namespace nrack {

IntMat int_identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t inner) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMat r(a.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

mpz_class int_det(const IntMat& a) {
  // Bareiss fraction-free elimination.
  std::size_t n = a.size();
  if (n == 0) return 1;
  IntMat m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank_q(const IntMat& a, std::size_t ncols) {
  IntMat m = a;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

namespace {

void row_addmul(IntMat& a, std::size_t dst, std::size_t src, const mpz_class& k, RowListener* l) {
  if (sgn(k) == 0) return;
  for (std::size_t j = 0; j < a[dst].size(); ++j)
    if (sgn(a[src][j])) a[dst][j] += k * a[src][j];
  if (l) l->addmul(dst, src, k);
}

void row_swap(IntMat& a, std::size_t i, std::size_t j, RowListener* l) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  if (l) l->swap(i, j);
}

void row_negate(IntMat& a, std::size_t i, RowListener* l) {
  for (auto& v : a[i]) v = -v;
  if (l) l->negate(i);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Pivot> hermite_rows(IntMat& a, const std::vector<std::size_t>& order, RowListener* l) {
  std::vector<Pivot> piv;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == a.size()) break;
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (sgn(a[i][c]) && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == a.size()) break;
      row_swap(a, r, best, l);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        mpz_class q = floor_div(a[i][c], a[r][c]);
        row_addmul(a, i, r, -q, l);
        if (sgn(a[i][c])) done = false;
      }
      if (done) break;
    }
    if (sgn(a[r][c]) == 0) continue;
    if (sgn(a[r][c]) < 0) row_negate(a, r, l);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(a[i][c], a[r][c]);
      row_addmul(a, i, r, -q, l);
    }
    piv.push_back({r, c});
    ++r;
  }
  return piv;
}

SmithForm smith_normal_form(const IntMat& a, std::size_t ncols) {
  std::size_t m = a.size(), n = ncols;
  for (const auto& row : a)
    if (row.size() != n) throw usage_error("smith_normal_form: ragged matrix");
  SmithForm s;
  s.D = a;
  s.U = int_identity(m);
  s.V = int_identity(n);
  IntMat& D = s.D;
  auto row_add = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < n; ++j) D[dst][j] += k * D[src][j];
    for (std::size_t j = 0; j < m; ++j) s.U[dst][j] += k * s.U[src][j];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < m; ++i) D[i][dst] += k * D[i][src];
    for (std::size_t i = 0; i < n; ++i) s.V[i][dst] += k * s.V[i][src];
  };
  auto row_swap2 = [&](std::size_t i, std::size_t j) {
    std::swap(D[i], D[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& row : D) std::swap(row[i], row[j]);
    for (auto& row : s.V) std::swap(row[i], row[j]);
  };
  // [x y; u v] applied to the pair (i, j); the matrix must be unimodular.
  auto mix = [](mpz_class& p, mpz_class& q, const mpz_class& x, const mpz_class& y, const mpz_class& u,
                const mpz_class& v) {
    mpz_class np = x * p + y * q;
    q = u * p + v * q;
    p = std::move(np);
  };
  auto row_mix = [&](std::size_t i, std::size_t j, const mpz_class& x, const mpz_class& y, const mpz_class& u,
                     const mpz_class& v) {
    for (std::size_t k = 0; k < n; ++k) mix(D[i][k], D[j][k], x, y, u, v);
    for (std::size_t k = 0; k < m; ++k) mix(s.U[i][k], s.U[j][k], x, y, u, v);
  };
  auto col_mix = [&](std::size_t i, std::size_t j, const mpz_class& x, const mpz_class& y, const mpz_class& u,
                     const mpz_class& v) {
    for (std::size_t k = 0; k < m; ++k) mix(D[k][i], D[k][j], x, y, u, v);
    for (std::size_t k = 0; k < n; ++k) mix(s.V[k][i], s.V[k][j], x, y, u, v);
  };
  // Coefficients (x, y, -b/g, a/g) with x*a + y*b = g = gcd(a, b).
  auto bezout = [](const mpz_class& a, const mpz_class& b) {
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return std::array<mpz_class, 4>{x, y, -b / g, a / g};
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(D[i][j]) && (bi == m || abs(D[i][j]) < abs(D[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    row_swap2(t, bi);
    col_swap(t, bj);
    while (true) {
      // Bezout steps keep entry growth linear in the number of pivots.
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(D[i][t]) == 0) continue;
        if (mpz_divisible_p(D[i][t].get_mpz_t(), D[t][t].get_mpz_t())) {
          row_add(i, t, -(D[i][t] / D[t][t]));
        } else {
          auto c = bezout(D[t][t], D[i][t]);
          row_mix(t, i, c[0], c[1], c[2], c[3]);
        }
      }
      bool clean = true;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(D[t][j]) == 0) continue;
        if (mpz_divisible_p(D[t][j].get_mpz_t(), D[t][t].get_mpz_t())) {
          col_add(j, t, -(D[t][j] / D[t][t]));
        } else {
          auto c = bezout(D[t][t], D[t][j]);
          col_mix(t, j, c[0], c[1], c[2], c[3]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and retry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(D[i][j]) && !mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_add(t, bad, 1);
    }
    if (sgn(D[t][t]) < 0) {
      for (auto& v : D[t]) v = -v;
      for (auto& v : s.U[t]) v = -v;
    }
    s.diag.push_back(D[t][t]);
  }
  s.rank = s.diag.size();
  return s;
}

}  // namespace nrack
