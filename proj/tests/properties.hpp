#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "nrack/multsolve.hpp"
#include "nrack/solution.hpp"

namespace props {

// Sigma/tau identities, fixed pairs and the sigma_x = sigma_{sigma_x tau(x)} rule; empty when all hold.
inline std::string near_rack_identities(const nrack::SetSolution& s) {
  nrack::Permutation t = *s.constant_tau();
  const int n = static_cast<int>(s.size());
  int fixed = 0;
  for (int x = 0; x < n; ++x) {
    if (!(t * s.sigma(x) == s.sigma(t(x)) * t)) return "tau sigma_x != sigma_tau(x) tau at x=" + std::to_string(x + 1);
    if (!(s.sigma(x) == s.sigma(s.sigma(x)(t(x))))) return "sigma_x != sigma_{sigma_x tau(x)} at x=" + std::to_string(x + 1);
    for (int y = 0; y < n; ++y) {
      if (!(s.sigma(s.sigma(x)(y)) * s.sigma(t(x)) == s.sigma(x) * s.sigma(y)))
        return "sigma product rule fails at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
      bool is_fixed = s(x, y) == std::make_pair(x, y);
      fixed += is_fixed;
      if (is_fixed != (s.sigma(x)(t(x)) == x && y == t(x))) return "fixed pair rule fails";
      if (is_fixed && s(t(x), x) != std::make_pair(t(x), x)) return "fixed pair not mirrored";
    }
  }
  std::set<nrack::Permutation> distinct(s.sigmas().begin(), s.sigmas().end());
  if (distinct.size() == s.size() && fixed != n) return "distinct sigmas but " + std::to_string(fixed) + " fixed pairs";
  return {};
}

// z_i^(2m) = prod z_j^2 when tau(i) = i, (z_i z_tau(i))^(2m) = prod z_j^4; empty when implied by `l`.
inline std::string power_identities(const std::vector<nrack::Monomial>& z, const nrack::Permutation& tau,
                                    const nrack::ConditionLattice& l) {
  const std::size_t m = z.size();
  nrack::Monomial sq, quad;
  for (const auto& zj : z) {
    sq *= zj.pow(2);
    quad *= zj.pow(4);
  }
  const mpq_class e(2 * static_cast<long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t ti = static_cast<std::size_t>(tau(static_cast<int>(i)));
    if (ti == i && !l.implies(z[i].pow(e) / sq)) return "z" + std::to_string(i + 1) + "^(2|X|) identity";
    if (!l.implies((z[i] * z[ti]).pow(e) / quad)) return "(z" + std::to_string(i + 1) + " z_tau)^(2|X|) identity";
  }
  return {};
}

// Every involutive near-rack solution on n points, by brute force over sigma tuples. The second
// coordinate of r^2 = id gives tau(sigma_x(y)) = y, which filters each sigma_x separately.
inline std::vector<nrack::SetSolution> involutive_search(int n) {
  std::vector<nrack::Permutation> perms;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  do perms.push_back(nrack::Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));

  std::vector<nrack::SetSolution> found;
  for (const auto& t : nrack::involutions(static_cast<std::size_t>(n))) {
    std::vector<nrack::Permutation> options;
    for (const auto& p : perms)
      if ((t * p).is_identity()) options.push_back(p);
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<nrack::Permutation> sig;
      for (auto k : pick) sig.push_back(options[k]);
      nrack::SetSolution s(sig, t);
      nrack::Report r = nrack::verify(s);
      if (r.is_ybe && r.involutive && r.near_rack) found.push_back(s);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return found;
}

inline std::vector<nrack::SetSolution> iso_representatives(const std::vector<nrack::SetSolution>& all) {
  std::vector<nrack::SetSolution> reps;
  for (const auto& s : all) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || nrack::isomorphic(r, s);
    if (!seen) reps.push_back(s);
  }
  return reps;
}

}  // namespace props
