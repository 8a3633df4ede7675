#include "nrack/io.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "nrack/error.hpp"

namespace nrack {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw usage_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Permutation> perms_from(const json& arr, std::size_t n, const char* what) {
  if (!arr.is_array() || arr.size() != n) throw usage_error(std::string(what) + ": expected " + std::to_string(n) + " entries");
  std::vector<Permutation> out;
  for (const auto& s : arr) out.push_back(parse_cycles(s.get<std::string>(), n));
  return out;
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen(gens.begin(), gens.end());
  std::vector<Permutation> todo(gens.begin(), gens.end());
  while (!todo.empty()) {
    Permutation p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation q = p * g;
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

json to_json(const SetSolution& s, const json& metadata) {
  json j;
  j["size"] = s.size();
  j["sigma"] = json::array();
  for (const auto& p : s.sigmas()) j["sigma"].push_back(print_cycles(p));
  if (auto t = s.constant_tau()) {
    j["tau"] = print_cycles(*t);
  } else {
    j["tau"] = json::array();
    for (const auto& p : s.taus()) j["tau"].push_back(print_cycles(p));
  }
  j["metadata"] = metadata;
  return j;
}

SetSolution solution_from_json(const json& j) {
  const json& doc = j.contains("solution") ? j.at("solution") : j;
  std::size_t n = need(doc, "size").get<std::size_t>();
  if (n == 0) throw usage_error("solution size must be positive");
  std::vector<Permutation> sigma = perms_from(need(doc, "sigma"), n, "sigma");
  const json& t = need(doc, "tau");
  if (t.is_string()) return SetSolution(std::move(sigma), parse_cycles(t.get<std::string>(), n));
  return SetSolution(std::move(sigma), perms_from(t, n, "tau"));
}

json to_json(const Rack& r) {
  json j;
  j["table"] = json::array();
  for (const auto& row : r.table()) {
    json a = json::array();
    for (int v : row) a.push_back(v + 1);
    j["table"].push_back(a);
  }
  return j;
}

Rack rack_from_json(const json& j) {
  const json& doc = j.contains("rack") ? j.at("rack") : j;
  if (doc.contains("table")) return Rack::from_one_based(doc.at("table").get<std::vector<std::vector<int>>>());
  if (doc.contains("solution") || doc.contains("sigma")) return derived_rack(solution_from_json(doc));
  std::string kind = need(doc, "kind").get<std::string>();
  if (kind == "dihedral") return dihedral_rack(need(doc, "n").get<int>());
  if (kind == "trivial") return trivial_rack(need(doc, "n").get<int>());
  if (kind == "affine") return affine_rack(need(doc, "m").get<int>(), need(doc, "u").get<int>());
  if (kind == "conjugation") {
    std::size_t deg = need(doc, "degree").get<std::size_t>();
    std::vector<Permutation> elems;
    if (doc.contains("elements")) {
      for (const auto& s : doc.at("elements")) elems.push_back(parse_cycles(s.get<std::string>(), deg));
    } else {
      // Full conjugacy class of `class_of` in the symmetric group.
      Permutation x = parse_cycles(need(doc, "class_of").get<std::string>(), deg);
      std::vector<Permutation> gens;
      if (deg >= 2) {
        std::vector<int> a(deg), b(deg);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::swap(a[0], a[1]);
        for (std::size_t k = 0; k < deg; ++k) b[k] = static_cast<int>((k + 1) % deg);
        gens = {Permutation::from_images(a), Permutation::from_images(b)};
      } else {
        gens = {Permutation(deg)};
      }
      std::set<Permutation> cls;
      for (const auto& g : group_closure(gens)) cls.insert(g * x * g.inverse());
      elems.assign(cls.begin(), cls.end());
    }
    return conjugation_rack(elems);
  }
  throw usage_error("unknown rack kind '" + kind + "'");
}

json to_json(const SymbolicSpace& b) {
  json j;
  j["solution"] = to_json(b.solution);
  j["mode"] = "symbolic";
  j["R"] = json::array();
  for (const auto& row : b.R) {
    json a = json::array();
    for (const auto& v : row) a.push_back(v.str());
    j["R"].push_back(a);
  }
  j["torsion"] = json::object();
  for (const auto& [name, order] : b.torsion) j["torsion"][name] = order;
  return j;
}

json to_json(const ConcreteSpace& b) {
  json j;
  j["solution"] = to_json(b.solution);
  j["mode"] = "concrete";
  j["R"] = json::array();
  for (const auto& row : b.R) {
    json a = json::array();
    for (const auto& v : row) a.push_back(v.str());
    j["R"].push_back(a);
  }
  return j;
}

bool is_concrete_space(const json& j) { return j.value("mode", std::string("symbolic")) == "concrete"; }

SymbolicSpace symbolic_space_from_json(const json& j) {
  SymbolicSpace b;
  b.solution = solution_from_json(need(j, "solution"));
  if (j.contains("torsion"))
    for (const auto& [name, order] : j.at("torsion").items()) b.torsion[name] = order.get<int>();
  const json& R = need(j, "R");
  if (!R.is_array() || R.size() != b.dim()) throw usage_error("R table has the wrong number of rows");
  for (const auto& row : R) {
    if (!row.is_array() || row.size() != b.dim()) throw usage_error("R table row has the wrong length");
    std::vector<Monomial> r;
    for (const auto& v : row) r.push_back(parse_monomial(v.is_string() ? v.get<std::string>() : v.dump(), b.torsion));
    b.R.push_back(std::move(r));
  }
  return b;
}

ConcreteSpace concrete_space_from_json(const json& j) {
  ConcreteSpace b;
  b.solution = solution_from_json(need(j, "solution"));
  const json& R = need(j, "R");
  if (!R.is_array() || R.size() != b.dim()) throw usage_error("R table has the wrong number of rows");
  for (const auto& row : R) {
    if (!row.is_array() || row.size() != b.dim()) throw usage_error("R table row has the wrong length");
    std::vector<Cyclotomic> r;
    for (const auto& v : row) {
      Cyclotomic c = parse_cyclotomic(v.is_string() ? v.get<std::string>() : v.dump());
      if (c.is_zero()) throw usage_error("R entries must be nonzero");
      r.push_back(c);
    }
    b.R.push_back(std::move(r));
  }
  return b;
}

json to_json(const Report& r) {
  json j;
  j["is_ybe"] = r.is_ybe;
  j["involutive"] = r.involutive;
  j["rack_type"] = r.rack_type;
  j["near_rack"] = r.near_rack;
  j["fixed_pairs"] = r.fixed_pairs;
  if (r.ybe_witness) j["ybe_witness"] = {(*r.ybe_witness)[0] + 1, (*r.ybe_witness)[1] + 1, (*r.ybe_witness)[2] + 1};
  return j;
}

json to_json(const SolutionFamily& f) {
  json j;
  j["unknowns"] = f.unknowns;
  j["parameters"] = f.parameters;
  j["relations"] = json::object();
  for (std::size_t k = 0; k < f.unknowns.size(); ++k)
    if (std::find(f.dependent.begin(), f.dependent.end(), f.unknowns[k]) != f.dependent.end())
      j["relations"][f.unknowns[k]] = f.expr[k].str();
  j["conditions"] = json::array();
  for (const auto& c : f.conditions) j["conditions"].push_back(c.str() + " = 1");
  j["free_params"] = f.free_params;
  j["torsion"] = json::object();
  for (const auto& [name, order] : f.torsion) j["torsion"][name] = order;
  j["resolved"] = json::object();
  for (std::size_t k = 0; k < f.unknowns.size(); ++k) j["resolved"][f.unknowns[k]] = f.resolved[k].str();
  j["external_conditions"] = json::array();
  for (const auto& c : f.external_conditions) j["external_conditions"].push_back(c.str() + " = 1");
  j["free_rank"] = f.free_rank;
  j["torsion_orders"] = json::array();
  for (const auto& d : f.torsion_orders) j["torsion_orders"].push_back(d.get_str());
  return j;
}

json to_json(const Inconsistency& i) {
  json j;
  j["inconsistent"] = true;
  j["message"] = i.message;
  j["value"] = i.value.str();
  j["combination"] = json::array();
  for (const auto& c : i.combination) j["combination"].push_back(c.get_str());
  return j;
}

json to_json(const HilbertData& h) {
  json j;
  j["dims"] = h.dims;
  if (h.finite == Finiteness::Finite) {
    j["finite"] = "finite";
    j["total"] = h.total();
  } else {
    j["finite"] = "unknown-at-cutoff";
  }
  j["certification"] = h.certification;
  return j;
}

json to_json(const SymbolicCertificate& c) {
  json j;
  j["base"] = to_json(c.base);
  j["tau"] = print_cycles(c.tau);
  j["z"] = json::array();
  for (const auto& z : c.z) j["z"].push_back(z.str());
  j["conditions"] = json::array();
  for (const auto& m : c.conditions) j["conditions"].push_back(m.str() + " = 1");
  j["derived"] = to_json(c.derived);
  return j;
}

json to_json(const ConcreteCertificate& c) {
  json j;
  j["base"] = to_json(c.base);
  j["tau"] = print_cycles(c.tau);
  j["z"] = json::array();
  for (const auto& z : c.z) j["z"].push_back(z.str());
  j["derived"] = to_json(c.derived);
  return j;
}

json to_json(const TEquivObstruction& o) {
  json j;
  j["obstruction"] = o.message;
  if (!o.value.is_one()) j["value"] = o.value.str();
  j["conditions"] = json::array();
  for (const auto& m : o.conditions) j["conditions"].push_back(m.str() + " = 1");
  return j;
}

json to_json(const CertificateCheck& c) {
  json j;
  j["ok"] = c.ok;
  if (!c.ok) j["failure"] = c.failure;
  if (c.pair) j["pair"] = {c.pair->first + 1, c.pair->second + 1};
  if (c.triple) j["word"] = {(*c.triple)[0] + 1, (*c.triple)[1] + 1, (*c.triple)[2] + 1};
  return j;
}

json to_json(const TypeLabel& t) {
  json j;
  j["family"] = t.family;
  j["params"] = json::object();
  for (const auto& [k, v] : t.params) j["params"][k] = v;
  if (t.predicted_dim) j["predicted_dim"] = *t.predicted_dim;
  j["anchor"] = t.anchor;
  return j;
}

ConcreteGdd gdd_from_json(const json& j) {
  ConcreteGdd g;
  for (const auto& v : need(j, "vertices")) g.vertex.push_back(parse_cyclotomic(v.is_string() ? v.get<std::string>() : v.dump()));
  const int n = static_cast<int>(g.vertex.size());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      int a = need(e, "i").get<int>() - 1, b = need(e, "j").get<int>() - 1;
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw usage_error("edge endpoints out of range");
      const json& l = need(e, "label");
      Cyclotomic c = parse_cyclotomic(l.is_string() ? l.get<std::string>() : l.dump());
      if (c.is_one()) throw usage_error("edge labels must differ from 1");
      g.edges[{std::min(a, b), std::max(a, b)}] = c;
    }
  return g;
}

std::map<std::string, Cyclotomic, NaturalLess> parse_values(const std::string& text) {
  std::map<std::string, Cyclotomic, NaturalLess> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw usage_error("expected name=value in '" + item + "'");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    Cyclotomic v = parse_cyclotomic(item.substr(eq + 1));
    if (v.is_zero()) throw usage_error("value of " + name + " must be nonzero");
    out[name] = v;
  }
  return out;
}

Cyclotomic principal_root(const Cyclotomic& v, long root) {
  if (root == 1) return v;
  if (int d = v.root_order()) {
    for (long k = 0; k < d; ++k)
      if (cyc_root_of_unity(d, k) == v) return cyc_root_of_unity(static_cast<int>(d * root), k);
  }
  if (v.is_rational()) {
    mpq_class q = v.rational();
    bool neg = sgn(q) < 0;
    if (neg && root % 2 == 0) throw usage_error("no rational root of " + v.str());
    mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(root)) &&
        mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(root))) {
      mpq_class r(rn, rd);
      return Cyclotomic(neg ? mpq_class(-r) : r);
    }
  }
  throw usage_error("cannot take an exact root of order " + std::to_string(root) + " of " + v.str());
}

Assignment assignment_for(const std::map<std::string, Cyclotomic, NaturalLess>& values,
                          const std::vector<Monomial>& ms) {
  std::map<std::string, mpz_class, NaturalLess> denom;
  for (const auto& m : ms) {
    for (const auto& [name, e] : m.params()) {
      auto& d = denom.try_emplace(name, 1).first->second;
      d = lcm(d, mpz_class(e.get_den()));
    }
    for (const auto& [name, t] : m.torsion_part()) {
      auto& d = denom.try_emplace(name, 1).first->second;
      d = lcm(d, mpz_class(t.exp.get_den()));
    }
  }
  Assignment a;
  for (const auto& [name, d] : denom) {
    auto it = values.find(name);
    Cyclotomic v = it == values.end() ? Cyclotomic(1) : it->second;
    a[name] = RootValue{principal_root(v, d.get_si()), d.get_si()};
  }
  return a;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw usage_error(path + ": " + e.what());
  }
}

}  // namespace nrack
