#pragma once

#include <vector>

#include "nrack/fixtures.hpp"
#include "nrack/solution.hpp"

namespace corpus {

// Every near-rack solution over the enumeration racks, the printed coefficient examples and
// the two dihedral families for small n.
inline std::vector<nrack::SetSolution> near_racks() {
  std::vector<nrack::SetSolution> out;
  for (const auto& f : nrack::enumeration_fixtures()) {
    nrack::Rack r = nrack::rack_from_json(f.rack);
    for (const auto& t : nrack::enum_near_racks(r).taus) out.push_back(nrack::near_rack_from(r, t));
    for (const auto& p : f.printed) out.push_back(nrack::solution_from_json(p));
  }
  for (const auto& f : nrack::coefficient_fixtures()) out.push_back(nrack::fixture_solution(f));
  // k_family(1) has tau = id
  for (int n = 2; n <= 4; ++n) out.push_back(nrack::k_family(n));
  for (int n = 1; n <= 4; ++n) out.push_back(nrack::n_family(n));
  return out;
}

}  // namespace corpus
