#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "nrack/braided.hpp"
#include "nrack/dynkin.hpp"
#include "nrack/multsolve.hpp"
#include "nrack/nichols.hpp"
#include "nrack/solution.hpp"
#include "nrack/tequiv.hpp"

namespace nrack {

using json = nlohmann::ordered_json;

// {size, sigma: [cycles], tau: [cycles] | "cycles", metadata}
json to_json(const SetSolution& s, const json& metadata = json::object());
SetSolution solution_from_json(const json& j);

// {"table": [[1-based]]} or {"kind": "dihedral"|"affine"|"trivial"|"conjugation", ...}
json to_json(const Rack& r);
Rack rack_from_json(const json& j);

// {solution, R: [[text]], mode: "symbolic"|"concrete", torsion: {name: order}}
json to_json(const SymbolicSpace& b);
json to_json(const ConcreteSpace& b);
SymbolicSpace symbolic_space_from_json(const json& j);
ConcreteSpace concrete_space_from_json(const json& j);
bool is_concrete_space(const json& j);

json to_json(const Report& r);
json to_json(const SolutionFamily& f);
json to_json(const Inconsistency& i);
json to_json(const HilbertData& h);
json to_json(const SymbolicCertificate& c);
json to_json(const ConcreteCertificate& c);
json to_json(const TEquivObstruction& o);
json to_json(const CertificateCheck& c);
json to_json(const TypeLabel& t);
template <class S>
json to_json(const Gdd<S>& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertex) j["vertices"].push_back(scalar_text(v));
  j["edges"] = json::array();
  for (const auto& [e, l] : g.edges) j["edges"].push_back({{"i", e.first + 1}, {"j", e.second + 1}, {"label", scalar_text(l)}});
  return j;
}
ConcreteGdd gdd_from_json(const json& j);

// "a=1,b=E(3)" -> values of the symbols themselves.
std::map<std::string, Cyclotomic, NaturalLess> parse_values(const std::string& text);

// A root of v of the given order: principal root of unity powers, or exact rational roots.
Cyclotomic principal_root(const Cyclotomic& v, long root);

// Assignment for the symbols used in `ms`, taking the roots their exponent denominators need.
// Symbols without a value default to 1.
Assignment assignment_for(const std::map<std::string, Cyclotomic, NaturalLess>& values,
                          const std::vector<Monomial>& ms);

json read_json_file(const std::string& path);

}  // namespace nrack
