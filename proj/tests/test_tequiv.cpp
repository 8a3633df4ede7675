#include <doctest.h>

#include "corpus.hpp"
#include "nrack/error.hpp"
#include "nrack/fixtures.hpp"
#include "nrack/tequiv.hpp"
#include "properties.hpp"
#include "spaces.hpp"

using namespace nrack;

namespace {

void check_power_identities(const std::vector<Monomial>& z, const Permutation& tau, const ConditionLattice& lattice) {
  std::string why = props::power_identities(z, tau, lattice);
  CHECK_MESSAGE(why.empty(), why);
}

std::vector<Monomial> joined(std::vector<Monomial> a, const std::vector<Monomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool residuals_hold(const std::vector<Monomial>& res, const ConditionLattice& l) {
  for (const auto& r : res)
    if (!l.implies(r)) return false;
  return true;
}

SymbolicCertificate certificate_of(const SymbolicSpace& b) {
  TEquivResult r = solve_tequiv(b);
  REQUIRE(std::holds_alternative<SymbolicCertificate>(r));
  return std::get<SymbolicCertificate>(r);
}

}  // namespace

TEST_CASE("power identities for the twist on every coefficient example") {
  for (const auto& f : coefficient_fixtures()) {
    INFO(f.id);
    SymbolicSpace b = fixture_space(f);
    Permutation tau = near_rack_tau(b.solution);
    std::vector<Monomial> conds = fixture_conditions(f);

    SymbolicCertificate cert = certificate_of(b);
    ConditionLattice solver(joined(conds, cert.conditions));
    REQUIRE(residuals_hold(z_residuals(b, cert.z), solver));
    check_power_identities(cert.z, tau, solver);

    // printed twists, where they solve the rows under their branch
    ConditionLattice printed(joined(conds, fixture_branch(f)));
    std::vector<Monomial> z = fixture_z(f);
    if (residuals_hold(z_residuals(b, z), printed)) check_power_identities(z, tau, printed);
  }
}

TEST_CASE("power identities on solved families of the near-rack corpus") {
  for (const auto& s : corpus::near_racks()) {
    if (s.size() > 7) continue;
    auto res = solve(ybe_coefficient_system(s));
    const auto& fam = std::get<SolutionFamily>(res);
    SymbolicSpace b = symbolic_space(s, fam.resolved, fam.torsion);
    TEquivResult r = solve_tequiv(b);
    if (!std::holds_alternative<SymbolicCertificate>(r)) continue;
    const auto& cert = std::get<SymbolicCertificate>(r);
    ConditionLattice l(cert.conditions);
    CHECK(residuals_hold(z_residuals(b, cert.z), l));
    check_power_identities(cert.z, *s.constant_tau(), l);
  }
}

TEST_CASE("sampled certificates verify and transport relations") {
  int checked = 0;
  for (const auto& f : coefficient_fixtures()) {
    INFO(f.id);
    SymbolicCertificate cert = certificate_of(fixture_space(f));
    cert.conditions = joined(cert.conditions, fixture_conditions(f));
    auto a = sample_assignment(cert);
    REQUIRE(a.has_value());
    ConcreteCertificate c = instantiate(cert, *a);
    CertificateCheck chk = verify_certificate(c);
    CHECK_MESSAGE(chk.ok, chk.failure);
    CHECK(!braid_check(c.derived).has_value());
    if (c.base.dim() <= 6) {
      CHECK(relations_transported(c, 2));
      CHECK(relations_transported(c, 3));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("a corrupted twist is rejected") {
  const auto& f = coefficient_fixtures().front();
  SymbolicCertificate cert = certificate_of(fixture_space(f));
  cert.conditions = joined(cert.conditions, fixture_conditions(f));
  ConcreteCertificate c = instantiate(cert, *sample_assignment(cert));
  REQUIRE(verify_certificate(c).ok);
  ConcreteCertificate bad = make_certificate(c.base, c.z);
  bad.z[0] *= Cyclotomic(2);
  bad.derived = twist(bad.base, bad.z, bad.tau);
  CertificateCheck chk = verify_certificate(bad);
  CHECK(!chk.ok);
  CHECK(!chk.failure.empty());
  CHECK(chk.pair.has_value());
}

TEST_CASE("sign search repairs a flipped root") {
  const auto& f = coefficient_fixtures().front();
  SymbolicCertificate cert = certificate_of(fixture_space(f));
  cert.conditions = joined(cert.conditions, fixture_conditions(f));
  ConcreteCertificate c = instantiate(cert, *sample_assignment(cert));
  std::vector<Cyclotomic> z = c.z;
  z.back() = -z.back();
  auto fixed = search_sign_branches(c.base, z);
  REQUIRE(fixed.has_value());
  CHECK(verify_certificate(make_certificate(c.base, *fixed)).ok);
}

TEST_CASE("involutive near-racks twist with square-root parameters") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : involutive_near_racks(n)) {
      auto res = solve(ybe_coefficient_system(s));
      const auto& fam = std::get<SolutionFamily>(res);
      SymbolicSpace b = symbolic_space(s, fam.expr);
      ConditionLattice l(fam.conditions);
      CHECK(residuals_hold(z_residuals(b, involutive_z(b)), l));
    }
  CHECK_THROWS_AS(involutive_z(symbolic_space(k_family(2), std::vector<Monomial>(16))), Error);
}

TEST_CASE("phi and the transport operator") {
  Permutation tau = parse_cycles("(1,2)", 3);
  std::vector<Cyclotomic> z{Cyclotomic(2), Cyclotomic(3), Cyclotomic(5)};
  auto phi = phi_operator(z, tau);
  CHECK(phi.target == std::vector<std::size_t>{1, 0, 2});
  CHECK(phi.scale == z);
  SetSolution s = near_rack_from(dihedral_rack(3), tau);
  ConcreteCertificate c = make_certificate(spaces::constant(s, Cyclotomic(-1)), z);
  auto u2 = transport_operator(c, 2);
  CHECK(u2 == phi.id_tensor(3));
}

TEST_CASE("rack-type solutions have no twist involution") {
  CHECK_THROWS_AS(near_rack_tau(rack_solution(dihedral_rack(3))), Error);
  CHECK(near_rack_tau(k_family(2)) == *k_family(2).constant_tau());
}
