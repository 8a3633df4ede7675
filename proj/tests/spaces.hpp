#pragma once

#include <string>
#include <vector>

#include "nrack/braided.hpp"
#include "nrack/multsolve.hpp"
#include "nrack/solution.hpp"

namespace spaces {

inline nrack::ConcreteSpace diagonal(const std::vector<std::vector<nrack::Cyclotomic>>& q) {
  nrack::ConcreteSpace b;
  b.solution = nrack::SetSolution(std::vector<nrack::Permutation>(q.size(), nrack::Permutation(q.size())),
                                  nrack::Permutation(q.size()));
  b.R = q;
  return b;
}

// Two-dimensional diagonal braiding with q11 = a, q12 = q21 = b, q22 = e.
inline nrack::ConcreteSpace two_dim(const nrack::Cyclotomic& a, const nrack::Cyclotomic& b, const nrack::Cyclotomic& e) {
  return diagonal({{a, b}, {b, e}});
}

inline nrack::ConcreteSpace constant(const nrack::SetSolution& s, const nrack::Cyclotomic& q) {
  nrack::ConcreteSpace b;
  b.solution = s;
  b.R.assign(s.size(), std::vector<nrack::Cyclotomic>(s.size(), q));
  return b;
}

// The solved coefficient family of `s` with every free parameter set to `value` and every
// torsion symbol to 1. Fails on families with fractional exponents.
inline nrack::ConcreteSpace solved(const nrack::SetSolution& s, const nrack::Cyclotomic& value) {
  auto res = nrack::solve(nrack::ybe_coefficient_system(s));
  const auto& f = std::get<nrack::SolutionFamily>(res);
  nrack::Assignment a;
  for (const auto& p : f.free_params) a[p] = nrack::RootValue{value, 1};
  for (const auto& [q, d] : f.torsion) a[q] = nrack::RootValue{nrack::Cyclotomic(1), 1};
  return nrack::instantiate(nrack::symbolic_space(s, f.resolved, f.torsion), a);
}

}  // namespace spaces
