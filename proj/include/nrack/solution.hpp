#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrack/permutation.hpp"

namespace nrack {

// r(i,j) = (sigma_i(j), tau_j(i)) on {0,..,n-1}.
class SetSolution {
 public:
  SetSolution() = default;
  SetSolution(std::vector<Permutation> sigma, std::vector<Permutation> tau);
  // Constant tau.
  SetSolution(std::vector<Permutation> sigma, const Permutation& tau);

  std::size_t size() const { return sigma_.size(); }
  const Permutation& sigma(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  const Permutation& tau(int j) const { return tau_[static_cast<std::size_t>(j)]; }
  const std::vector<Permutation>& sigmas() const { return sigma_; }
  const std::vector<Permutation>& taus() const { return tau_; }
  std::pair<int, int> operator()(int i, int j) const { return {sigma(i)(j), tau(j)(i)}; }

  std::optional<Permutation> constant_tau() const;

  friend bool operator==(const SetSolution&, const SetSolution&) = default;

 private:
  std::vector<Permutation> sigma_, tau_;
};

struct Report {
  bool is_ybe = false;
  bool involutive = false;
  bool rack_type = false;  // every tau_y is the identity
  bool near_rack = false;  // tau_y = tau for all y, tau^2 = id != tau
  int fixed_pairs = 0;
  std::optional<std::array<int, 3>> ybe_witness;  // a triple where the braid relation fails
};

Report verify(const SetSolution& s);
bool satisfies_ybe(const SetSolution& s, std::array<int, 3>* witness = nullptr);

// x |> y; rows bijective and self-distributive.
class Rack {
 public:
  Rack() = default;
  explicit Rack(std::vector<std::vector<int>> table);  // 0-based, validated
  static Rack from_one_based(const std::vector<std::vector<int>>& table);

  std::size_t size() const { return t_.size(); }
  int op(int x, int y) const { return t_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  const std::vector<std::vector<int>>& table() const { return t_; }
  Permutation row(int x) const;

  friend bool operator==(const Rack&, const Rack&) = default;

 private:
  std::vector<std::vector<int>> t_;
};

// x |> y = tau_x sigma_{tau_y^{-1}(x)} (y)
Rack derived_rack(const SetSolution& s);
// (x,y) -> (x |> y, x)
SetSolution rack_solution(const Rack& r);
SetSolution derived_solution(const SetSolution& s);

// r(x,y) = (x |> tau(y), tau(x)); needs tau^2 = id != tau and tau(tau(x) |> y) = x |> tau(y).
// On failure throws with the first offending pair.
SetSolution near_rack_from(const Rack& r, const Permutation& tau);
bool near_rack_compatible(const Rack& r, const Permutation& tau, std::pair<int, int>* witness = nullptr);

struct NearRackEnumeration {
  std::vector<Permutation> taus;         // every compatible involution
  std::vector<std::size_t> class_of;     // isomorphism class of each solution
  std::vector<std::size_t> representatives;  // index into taus of the first member of each class
  std::size_t class_count() const { return representatives.size(); }
};

NearRackEnumeration enum_near_racks(const Rack& r);

// phi with (phi x phi) r = r' (phi x phi), as images phi(x).
std::optional<Permutation> isomorphism(const SetSolution& a, const SetSolution& b);
inline bool isomorphic(const SetSolution& a, const SetSolution& b) { return isomorphism(a, b).has_value(); }

Rack dihedral_rack(int n);          // i |> j = 2i - j (mod n), label k <-> residue k-1
Rack affine_rack(int m, int u);     // a |> b = u b + (1-u) a (mod m)
Rack conjugation_rack(const std::vector<Permutation>& elements);  // x |> y = x y x^-1
Rack trivial_rack(int n);

SetSolution k_family(int n);  // size 2n, derived rack dihedral of order 2n
SetSolution n_family(int n);  // size 2n+1, derived rack dihedral of order 2n+1

// r(x,y) = (x y tau(x)^-1, tau(x)) on a group given by its 0-based multiplication table.
SetSolution metahomo_solution(const std::vector<std::vector<int>>& mult, const std::vector<int>& tau);

// sigma_x = tau = (1,2)(3,4)..(2k-1,2k), one per k = 1..floor(n/2).
std::vector<SetSolution> involutive_near_racks(int n);

}  // namespace nrack
