#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nrack/braided.hpp"
#include "nrack/multsolve.hpp"

namespace nrack {

// phi(w_i) = z_i w_{tau(i)}; the twisted braiding lives on the derived solution.
struct SymbolicCertificate {
  SymbolicSpace base;
  Permutation tau;
  std::vector<Monomial> z;
  SymbolicSpace derived;
  std::vector<Monomial> conditions;  // must hold for the certificate to apply
};

struct ConcreteCertificate {
  ConcreteSpace base;
  Permutation tau;
  std::vector<Cyclotomic> z;
  ConcreteSpace derived;
};

struct TEquivObstruction {
  std::string message;
  Monomial value;                    // set when the z-system is contradictory
  std::vector<Monomial> conditions;  // residual constraints that cannot be met
};

using TEquivResult = std::variant<SymbolicCertificate, TEquivObstruction>;

// The involution of a near-rack solution; throws a usage error otherwise.
Permutation near_rack_tau(const SetSolution& s);

// Rows z_i^2 z_j^-1 z_{sigma_i tau(j)}^-1 = R_{i,tau(j)} / R_{tau(i),j} over z1..zm.
MultSystem z_system(const SymbolicSpace& b);

TEquivResult solve_tequiv(const SymbolicSpace& b, const SolveOptions& opt = {0, "eta"});

// z_i = (R_{i,tau(1)} / R_{tau(i),1})^(1/2) for involutive near-racks (sigma_x = tau).
std::vector<Monomial> involutive_z(const SymbolicSpace& b);

// z_i^2 R_{tau(i),j} / (z_j z_{sigma_i tau(j)} R_{i,tau(j)}) for every pair, row-major; all 1 iff z solves.
std::vector<Monomial> z_residuals(const SymbolicSpace& b, const std::vector<Monomial>& z);

SymbolicCertificate make_certificate(const SymbolicSpace& b, std::vector<Monomial> z,
                                     std::vector<Monomial> conditions = {});
ConcreteCertificate make_certificate(const ConcreteSpace& b, std::vector<Cyclotomic> z);

// Free parameters = 1 and the first torsion assignment (lexicographic) meeting every
// condition; fractional powers take the principal root. nullopt if none exists.
std::optional<Assignment> sample_assignment(const SymbolicCertificate& cert, long max_tries = 1 << 16);
ConcreteCertificate instantiate(const SymbolicCertificate& cert, const Assignment& a);

struct CertificateCheck {
  bool ok = true;
  std::string failure;                       // empty when ok
  std::optional<std::pair<int, int>> pair;   // offending (i,j) for z rows and operator checks
  std::optional<std::array<int, 3>> triple;  // offending word for the braid check
};

CertificateCheck verify_certificate(const ConcreteCertificate& cert);

// Tries every sign pattern on z_2..z_m (z_1 kept) and returns the first that satisfies all rows.
std::optional<std::vector<Cyclotomic>> search_sign_branches(const ConcreteSpace& b, std::vector<Cyclotomic> z,
                                                            std::size_t max_flips = 12);

// phi as a monomial operator on V.
MonomialOperator<Cyclotomic> phi_operator(const std::vector<Cyclotomic>& z, const Permutation& tau);

// U_n = id (x) phi (x) id (x) phi ... on V^{(x)n}.
MonomialOperator<Cyclotomic> transport_operator(const ConcreteCertificate& cert, int n);

// ker S_{n,c} = U_n(ker S_{n,c~}), checked by dimension and containment.
bool relations_transported(const ConcreteCertificate& cert, int n);

}  // namespace nrack
