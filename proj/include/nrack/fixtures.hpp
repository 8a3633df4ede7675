#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nrack/dynkin.hpp"
#include "nrack/io.hpp"
#include "nrack/tequiv.hpp"

namespace nrack {

// A printed coefficient family: R_{i,j} = x_{m(i-1)+j}, dependent unknowns given by `relations`
// in the remaining symbols, subject to `conditions`, and twist parameters `z` valid under `branch`.
struct CoefficientFixture {
  std::string id;
  std::string title;
  std::string anchor;
  std::size_t size = 0;
  std::vector<std::string> sigma;  // cycle notation, labels 1..size
  std::string tau;
  std::vector<std::string> relations;   // "x6 = x1"
  std::vector<std::string> conditions;  // "x1^3 = x2^3"
  SymbolTable torsion;                  // torsion symbols such as q with q^4 = 1
  std::vector<std::string> branch;      // extra equalities for the printed z's
  std::vector<std::string> z;
  // Printed generalized Dynkin diagram of the twisted braiding (diagonal examples only).
  std::vector<std::string> gdd_vertices;
  std::vector<std::pair<std::pair<int, int>, std::string>> gdd_edges;  // 1-based
};

struct EnumerationFixture {
  std::string id;
  std::string title;
  std::string anchor;
  json rack;
  std::size_t expected_classes = 0;
  std::vector<json> printed;  // solution documents
};

const std::vector<CoefficientFixture>& coefficient_fixtures();
const std::vector<EnumerationFixture>& enumeration_fixtures();

SetSolution fixture_solution(const CoefficientFixture& f);
// Printed family as a symbolic space over the free symbols.
SymbolicSpace fixture_space(const CoefficientFixture& f);
std::vector<Monomial> fixture_conditions(const CoefficientFixture& f);  // each = 1
std::vector<Monomial> fixture_branch(const CoefficientFixture& f);
std::vector<Monomial> fixture_z(const CoefficientFixture& f);
// "lhs = rhs" -> lhs / rhs
Monomial parse_equation(const std::string& text, const SymbolTable& decl);

struct GroupInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion_orders;  // invariant factors > 1
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};
// Invariants of the printed solution set: free symbols and torsion symbols under the conditions.
GroupInvariants fixture_invariants(const CoefficientFixture& f);

struct FixtureCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct FixtureResult {
  std::string id;
  std::vector<FixtureCheck> checks;
  bool ok() const;
};

FixtureResult run_coefficient_fixture(const CoefficientFixture& f);
FixtureResult run_enumeration_fixture(const EnumerationFixture& f);

}  // namespace nrack
