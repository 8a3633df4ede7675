#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nrack/cyclotomic.hpp"
#include "nrack/monomial.hpp"
#include "nrack/multsolve.hpp"
#include "nrack/solution.hpp"

namespace nrack {

template <class S>
S scalar_one();
template <>
inline Cyclotomic scalar_one<Cyclotomic>() {
  return Cyclotomic(1);
}
template <>
inline Monomial scalar_one<Monomial>() {
  return Monomial();
}
inline Cyclotomic scalar_inv(const Cyclotomic& c) { return c.inverse(); }
inline Monomial scalar_inv(const Monomial& m) { return m.inverse(); }

// e_k -> scale[k] * e_{target[k]}
template <class S>
struct MonomialOperator {
  std::vector<std::size_t> target;
  std::vector<S> scale;

  std::size_t dim() const { return target.size(); }

  static MonomialOperator identity(std::size_t n) {
    MonomialOperator op;
    for (std::size_t k = 0; k < n; ++k) {
      op.target.push_back(k);
      op.scale.push_back(scalar_one<S>());
    }
    return op;
  }

  // (*this)(other(e_k))
  MonomialOperator after(const MonomialOperator& other) const {
    MonomialOperator r;
    for (std::size_t k = 0; k < other.dim(); ++k) {
      std::size_t t = other.target[k];
      r.target.push_back(target[t]);
      r.scale.push_back(other.scale[k] * scale[t]);
    }
    return r;
  }

  // A (x) id_{inner}, with A acting on the left factor.
  MonomialOperator tensor_id(std::size_t inner) const {
    MonomialOperator r;
    for (std::size_t k = 0; k < dim() * inner; ++k) {
      r.target.push_back(target[k / inner] * inner + k % inner);
      r.scale.push_back(scale[k / inner]);
    }
    return r;
  }

  // id_{outer} (x) A
  MonomialOperator id_tensor(std::size_t outer) const {
    MonomialOperator r;
    std::size_t d = dim();
    for (std::size_t k = 0; k < outer * d; ++k) {
      r.target.push_back((k / d) * d + target[k % d]);
      r.scale.push_back(scale[k % d]);
    }
    return r;
  }

  bool operator==(const MonomialOperator& o) const { return target == o.target && scale == o.scale; }
};

// c(w_i (x) w_j) = R[i][j] w_{sigma_i(j)} (x) w_{tau_j(i)}
template <class S>
struct BraidedSpace {
  SetSolution solution;
  std::vector<std::vector<S>> R;
  SymbolTable torsion;  // for symbolic spaces

  std::size_t dim() const { return solution.size(); }
};

using SymbolicSpace = BraidedSpace<Monomial>;
using ConcreteSpace = BraidedSpace<Cyclotomic>;

template <class S>
MonomialOperator<S> braiding_operator(const BraidedSpace<S>& b) {
  std::size_t m = b.dim();
  MonomialOperator<S> op;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto [u, v] = b.solution(static_cast<int>(i), static_cast<int>(j));
      op.target.push_back(static_cast<std::size_t>(u) * m + static_cast<std::size_t>(v));
      op.scale.push_back(b.R[i][j]);
    }
  return op;
}

// Word (i,j,k) where the braid relation fails, if any.
template <class S, class Eq>
std::optional<std::array<int, 3>> braid_check(const BraidedSpace<S>& b, Eq eq) {
  std::size_t m = b.dim();
  MonomialOperator<S> c = braiding_operator(b);
  MonomialOperator<S> c1 = c.tensor_id(m), c2 = c.id_tensor(m);
  MonomialOperator<S> lhs = c1.after(c2.after(c1)), rhs = c2.after(c1.after(c2));
  for (std::size_t k = 0; k < m * m * m; ++k)
    if (lhs.target[k] != rhs.target[k] || !eq(lhs.scale[k], rhs.scale[k]))
      return std::array<int, 3>{static_cast<int>(k / (m * m)), static_cast<int>((k / m) % m), static_cast<int>(k % m)};
  return std::nullopt;
}

template <class S>
std::optional<std::array<int, 3>> braid_check(const BraidedSpace<S>& b) {
  return braid_check(b, [](const S& x, const S& y) { return x == y; });
}

template <class S>
bool is_diagonal(const BraidedSpace<S>& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!b.solution.sigma(static_cast<int>(i)).is_identity() || !b.solution.tau(static_cast<int>(i)).is_identity())
      return false;
  return true;
}

// R~[i][j] = (z_j / z_i) R[i][tau(j)] over the derived solution.
template <class S>
BraidedSpace<S> twist(const BraidedSpace<S>& b, const std::vector<S>& z, const Permutation& tau) {
  std::size_t m = b.dim();
  BraidedSpace<S> t;
  t.solution = derived_solution(b.solution);
  t.torsion = b.torsion;
  t.R.assign(m, std::vector<S>(m, scalar_one<S>()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      t.R[i][j] = z[j] * scalar_inv(z[i]) * b.R[i][static_cast<std::size_t>(tau(static_cast<int>(j)))];
  return t;
}

// Unknown name of R[i][j] (0-based): x_{m i + j + 1}.
std::string coefficient_name(std::size_t m, std::size_t i, std::size_t j);
std::vector<std::string> coefficient_names(std::size_t m);

// One row per triple (i,j,k), reduced to exponent form with rhs 1; zero and repeated rows removed.
MultSystem ybe_coefficient_system(const SetSolution& s);

// Space whose R[i][j] are the family expressions (relation or resolved view).
SymbolicSpace symbolic_space(const SetSolution& s, const std::vector<Monomial>& entries, const SymbolTable& torsion = {});

ConcreteSpace instantiate(const SymbolicSpace& b, const Assignment& a);

}  // namespace nrack
