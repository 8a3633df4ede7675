#include <doctest.h>

#include <chrono>
#include <set>

#include "corpus.hpp"
#include "nrack/error.hpp"
#include "nrack/fixtures.hpp"
#include "nrack/io.hpp"
#include "nrack/solution.hpp"
#include "properties.hpp"

using namespace nrack;

namespace {

const std::vector<SetSolution>& all_near_racks() {
  static const std::vector<SetSolution> c = corpus::near_racks();
  return c;
}

Permutation tau_of(const SetSolution& s) { return *s.constant_tau(); }

}  // namespace

TEST_CASE("the corpus consists of near-rack solutions") {
  REQUIRE(all_near_racks().size() > 40);
  for (const auto& s : all_near_racks()) {
    Report r = verify(s);
    CHECK(r.is_ybe);
    CHECK(r.near_rack);
    CHECK(!r.rack_type);
  }
}

TEST_CASE("enumeration fixtures") {
  for (const auto& f : enumeration_fixtures()) {
    FixtureResult r = run_enumeration_fixture(f);
    INFO(f.id);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("sigma and tau identities hold on every near-rack solution") {
  for (const auto& s : all_near_racks()) {
    std::string why = props::near_rack_identities(s);
    CHECK_MESSAGE(why.empty(), why);
    CHECK(verify(s).fixed_pairs >= 0);
  }
}

TEST_CASE("distinct sigmas force sigma_x tau(x) = x") {
  for (const auto& s : all_near_racks()) {
    std::set<Permutation> distinct(s.sigmas().begin(), s.sigmas().end());
    if (distinct.size() != s.size()) continue;
    Permutation t = tau_of(s);
    for (int x = 0; x < static_cast<int>(s.size()); ++x) CHECK(s.sigma(x)(t(x)) == x);
    CHECK(verify(s).fixed_pairs == static_cast<int>(s.size()));
  }
}

TEST_CASE("conjugating by tau on either factor gives the derived solution") {
  for (const auto& s : all_near_racks()) {
    Permutation t = tau_of(s);
    SetSolution d = derived_solution(s);
    const int n = static_cast<int>(s.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [a, b] = s(t(x), y);
        CHECK(std::make_pair(t(a), b) == d(x, y));
        auto [c, e] = s(x, t(y));
        CHECK(std::make_pair(c, t(e)) == d(x, y));
      }
  }
}

TEST_CASE("near-rack solutions are recovered from their derived rack and tau") {
  for (const auto& s : all_near_racks()) {
    Permutation t = tau_of(s);
    Rack r = derived_rack(s);
    CHECK(near_rack_compatible(r, t));
    CHECK(near_rack_from(r, t) == s);
  }
}

TEST_CASE("incompatible tau is rejected with a witness") {
  Rack r = affine_rack(5, 2);
  auto listed = enum_near_racks(r).taus;
  std::size_t rejected = 0;
  for (const auto& t : involutions(5)) {
    std::pair<int, int> w{-1, -1};
    bool ok = near_rack_compatible(r, t, &w);
    CHECK(ok == (std::find(listed.begin(), listed.end(), t) != listed.end()));
    if (ok) continue;
    ++rejected;
    auto [x, y] = w;
    REQUIRE(x >= 0);
    CHECK(t(r.op(t(x), y)) != r.op(x, t(y)));
    CHECK_THROWS_AS(near_rack_from(r, t), Error);
  }
  CHECK(rejected > 0);
  CHECK_THROWS_AS(near_rack_from(r, Permutation(5)), Error);
}

TEST_CASE("rack validation") {
  CHECK_THROWS_AS(Rack({{0, 0}, {1, 1}}), Error);        // rows not bijective
  CHECK_THROWS_AS(Rack({{1, 0, 2}, {0, 1, 2}, {0, 1, 2}}), Error);  // not self-distributive
  CHECK(dihedral_rack(5).size() == 5);
  CHECK(affine_rack(7, 3).op(0, 1) == 3);
  CHECK(rack_solution(trivial_rack(3)) == SetSolution(std::vector<Permutation>(3, Permutation(3)), Permutation(3)));
}

TEST_CASE("a broken solution reports a failing triple") {
  SetSolution s = k_family(2);
  std::vector<Permutation> sig = s.sigmas();
  std::swap(sig[0], sig[1]);
  SetSolution bad(sig, tau_of(s));
  std::array<int, 3> w{};
  if (!satisfies_ybe(bad, &w)) {
    Report r = verify(bad);
    CHECK(!r.is_ybe);
    REQUIRE(r.ybe_witness.has_value());
    CHECK(*r.ybe_witness == w);
  }
  // a non-solution for certain
  SetSolution shift({parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3), Permutation(3)}, Permutation(3));
  CHECK(!satisfies_ybe(shift));
}

TEST_CASE("dihedral families have dihedral derived racks") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(isomorphic(derived_solution(k_family(n)), rack_solution(dihedral_rack(2 * n))));
    CHECK(isomorphic(derived_solution(n_family(n)), rack_solution(dihedral_rack(2 * n + 1))));
  }
}

TEST_CASE("isomorphisms transport the structure map") {
  SetSolution s = near_rack_from(dihedral_rack(3), parse_cycles("(2,3)", 3));
  SetSolution u = near_rack_from(dihedral_rack(3), parse_cycles("(1,2)", 3));
  auto phi = isomorphism(s, u);
  REQUIRE(phi.has_value());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      auto [a, b] = s(x, y);
      CHECK(u((*phi)(x), (*phi)(y)) == std::make_pair((*phi)(a), (*phi)(b)));
    }
  CHECK(!isomorphic(k_family(2), rack_solution(dihedral_rack(4))));
}

TEST_CASE("solutions over a group with a twisted product") {
  // Z/4 with the inversion as tau
  std::vector<std::vector<int>> mult(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mult[a][b] = (a + b) % 4;
  SetSolution s = metahomo_solution(mult, {0, 3, 2, 1});
  CHECK(satisfies_ybe(s));
  CHECK(verify(s).near_rack);
  // the identity map gives the conjugation rack
  Report id = verify(metahomo_solution(mult, {0, 1, 2, 3}));
  CHECK(id.is_ybe);
  CHECK(id.rack_type);
  // a shift satisfies the identity but tau is not an involution
  SetSolution shift = metahomo_solution(mult, {1, 2, 3, 0});
  CHECK(satisfies_ybe(shift));
  CHECK(!verify(shift).near_rack);
  // swapping 0 and 1 breaks the identity already at (1,1)
  try {
    metahomo_solution(mult, {1, 0, 2, 3});
    FAIL("expected a witness");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(x,y)=") != std::string::npos);
  }
  // Z/3 with negation is the dihedral near-rack
  std::vector<std::vector<int>> z3(3, std::vector<int>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) z3[a][b] = (a + b) % 3;
  CHECK(isomorphic(metahomo_solution(z3, {0, 2, 1}), near_rack_from(dihedral_rack(3), parse_cycles("(2,3)", 3))));
}

TEST_CASE("involutive near-rack solutions are classified by the number of transpositions of tau") {
  auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 4; ++n) {
    auto found = props::involutive_search(n);
    for (const auto& s : found)
      for (int x = 0; x < n; ++x) CHECK(s.sigma(x) == tau_of(s));
    auto reps = props::iso_representatives(found);
    CHECK(reps.size() == static_cast<std::size_t>(n / 2));
    auto listed = involutive_near_racks(n);
    REQUIRE(listed.size() == reps.size());
    for (const auto& l : listed) {
      bool matched = false;
      for (const auto& r : reps) matched = matched || isomorphic(l, r);
      CHECK(matched);
    }
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("solution documents round trip") {
  for (const auto& s : all_near_racks()) CHECK(solution_from_json(to_json(s)) == s);
  for (const auto& f : enumeration_fixtures()) {
    Rack r = rack_from_json(f.rack);
    CHECK(rack_from_json(to_json(r)) == r);
  }
}
