#include "nrack/braided.hpp"

#include <algorithm>
#include <set>

#include "nrack/error.hpp"

namespace nrack {

std::string coefficient_name(std::size_t m, std::size_t i, std::size_t j) { return "x" + std::to_string(m * i + j + 1); }

std::vector<std::string> coefficient_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.push_back(coefficient_name(m, i, j));
  return out;
}

MultSystem ybe_coefficient_system(const SetSolution& s) {
  const int m = static_cast<int>(s.size());
  MultSystem sys;
  sys.unknowns = coefficient_names(s.size());
  std::set<std::vector<long>> seen;
  auto idx = [m](int i, int j) { return static_cast<std::size_t>(i * m + j); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        std::vector<long> e(static_cast<std::size_t>(m * m), 0);
        // R_{i,j} R_{tau_j(i),k} R_{sigma_i(j), sigma_{tau_j(i)}(k)}
        int tji = s.tau(j)(i);
        ++e[idx(i, j)];
        ++e[idx(tji, k)];
        ++e[idx(s.sigma(i)(j), s.sigma(tji)(k))];
        // R_{j,k} R_{i,sigma_j(k)} R_{tau_{sigma_j(k)}(i), tau_k(j)}
        int sjk = s.sigma(j)(k);
        --e[idx(j, k)];
        --e[idx(i, sjk)];
        --e[idx(s.tau(sjk)(i), s.tau(k)(j))];
        auto first = std::find_if(e.begin(), e.end(), [](long v) { return v != 0; });
        if (first == e.end()) continue;
        if (*first < 0)
          for (auto& v : e) v = -v;
        if (!seen.insert(e).second) continue;
        MultRow row;
        for (long v : e) row.exps.push_back(v);
        sys.rows.push_back(row);
      }
  return sys;
}

SymbolicSpace symbolic_space(const SetSolution& s, const std::vector<Monomial>& entries, const SymbolTable& torsion) {
  std::size_t m = s.size();
  if (entries.size() != m * m) throw usage_error("symbolic_space: need m^2 coefficient expressions");
  SymbolicSpace b;
  b.solution = s;
  b.torsion = torsion;
  b.R.assign(m, std::vector<Monomial>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b.R[i][j] = entries[i * m + j];
  return b;
}

ConcreteSpace instantiate(const SymbolicSpace& b, const Assignment& a) {
  ConcreteSpace c;
  c.solution = b.solution;
  for (const auto& row : b.R) {
    std::vector<Cyclotomic> r;
    for (const auto& m : row) r.push_back(evaluate(m, a));
    c.R.push_back(r);
  }
  return c;
}

}  // namespace nrack
