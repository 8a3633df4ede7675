#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <sstream>

#include "config.hpp"
#include "nrack/error.hpp"
#include "nrack/fixtures.hpp"
#include "nrack/io.hpp"
#include "nrack/nichols.hpp"

using namespace nrack;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Verification: return 1;
    case ErrorKind::Usage: return 2;
    case ErrorKind::Budget: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Verification: return "verification";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

int report_error(ErrorKind k, const std::string& msg) {
  json j{{"error", kind_name(k)}, {"message", msg}, {"exit_code", exit_code(k)}};
  std::cerr << j.dump() << "\n";
  return exit_code(k);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

bool is_space_doc(const json& j) { return j.contains("R"); }

// R[i][j] = x_{m i + j + 1} for a bare solution document.
SymbolicSpace generic_space(const SetSolution& s) {
  std::vector<Monomial> entries;
  for (const auto& n : coefficient_names(s.size())) entries.push_back(Monomial::param(n));
  return symbolic_space(s, entries);
}

SymbolicSpace load_symbolic(const json& doc) {
  if (is_space_doc(doc)) {
    if (is_concrete_space(doc)) throw usage_error("expected a symbolic space, got a concrete one");
    return symbolic_space_from_json(doc);
  }
  return generic_space(solution_from_json(doc));
}

std::vector<Monomial> parse_branch(const std::vector<std::string>& eqs, const SymbolTable& decl);

struct Family {
  SymbolicSpace space;
  std::vector<Monomial> conditions;  // each = 1
};

// Bare solution: the relation view of the general solution, with its leftover conditions.
Family load_family(const json& doc) {
  if (is_space_doc(doc)) return {load_symbolic(doc), {}};
  SetSolution s = solution_from_json(doc);
  SolveResult r = solve(ybe_coefficient_system(s));
  if (auto* inc = std::get_if<Inconsistency>(&r)) throw verification_error(inc->message);
  const auto& fam = std::get<SolutionFamily>(r);
  return {symbolic_space(s, fam.expr), fam.conditions};
}

// Certificate for a family; the family conditions and branch equalities are appended.
SymbolicCertificate family_certificate(const Family& f, const std::vector<std::string>& branch, json* obstruction) {
  TEquivResult tr = solve_tequiv(f.space);
  if (auto* ob = std::get_if<TEquivObstruction>(&tr)) {
    *obstruction = to_json(*ob);
    return {};
  }
  SymbolicCertificate cert = std::get<SymbolicCertificate>(tr);
  std::vector<Monomial> all = f.conditions;
  all.insert(all.end(), cert.conditions.begin(), cert.conditions.end());
  for (const auto& m : parse_branch(branch, f.space.torsion)) all.push_back(m);
  ConditionLattice lat(all);
  if (!lat.consistent()) throw verification_error("conditions and branch equalities are inconsistent");
  cert.conditions = lat.simplified();
  return cert;
}

std::vector<Monomial> flat_entries(const SymbolicSpace& b) {
  std::vector<Monomial> v;
  for (const auto& row : b.R) v.insert(v.end(), row.begin(), row.end());
  return v;
}

ConcreteSpace load_concrete(const json& doc, const std::string& values) {
  if (is_space_doc(doc) && is_concrete_space(doc)) {
    if (!values.empty()) throw usage_error("--R given for a concrete space");
    return concrete_space_from_json(doc);
  }
  SymbolicSpace b = load_symbolic(doc);
  auto vals = parse_values(values);
  Assignment a = assignment_for(vals, flat_entries(b));
  return instantiate(b, a);
}

std::vector<Monomial> parse_branch(const std::vector<std::string>& eqs, const SymbolTable& decl) {
  std::vector<Monomial> out;
  for (const auto& e : eqs) {
    std::stringstream ss(e);
    std::string part;
    while (std::getline(ss, part, ','))
      if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_equation(part, decl));
  }
  return out;
}

std::string hilbert_line(const HilbertData& h) {
  std::string s;
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    if (h.dims[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(h.dims[k]);
    if (k >= 1) s += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  s = "Hilbert series: " + s;
  if (h.finite == Finiteness::Finite)
    s += " (total " + std::to_string(h.total()) + ", finite";
  else
    s += " (no zero degree up to " + std::to_string(h.dims.size() - 1);
  return s + ", " + h.certification + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-rack solutions, braided vector spaces and Nichols algebra dimensions"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string config_path;
  app.add_flag("--json", as_json, "Print JSON for every subcommand");
  app.add_option("--config", config_path, "TOML file with budgets (memory, cutoff, primes)");

  std::string file;

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution and report its properties");
  verify_cmd->add_option("file", file, "Solution document")->required();

  auto* derive_cmd = app.add_subcommand("derive", "Derived solution and derived rack");
  derive_cmd->add_option("file", file, "Solution document")->required();

  auto* enum_cmd = app.add_subcommand("enum-near-racks", "All near-rack solutions over a rack");
  enum_cmd->add_option("file", file, "Rack document")->required();

  bool conditions_only = false;
  long max_den = 0;
  auto* solve_cmd = app.add_subcommand("solve-coefficients", "Solve the coefficient system of a solution");
  solve_cmd->add_option("file", file, "Solution document")->required();
  solve_cmd->add_flag("--conditions-only", conditions_only, "Print only the residual constraints");
  solve_cmd->add_option("--max-denominator", max_den, "Reject families needing larger roots (0: no cap)");

  std::vector<std::string> branch;
  std::string values;
  bool search_signs = false;
  auto* tequiv_cmd = app.add_subcommand("t-equiv", "Twist a near-rack braiding to its derived rack type");
  tequiv_cmd->add_option("file", file, "Symbolic space or solution document")->required();
  tequiv_cmd->add_option("--branch", branch, "Extra equalities such as \"x2=x1,q^2=1\"");
  tequiv_cmd->add_option("--R,--values", values, "Instantiate and verify at these values, e.g. a=1,b=E(3)");
  tequiv_cmd->add_flag("--search-signs", search_signs, "On failure, try other square-root signs");

  int cutoff = 0;
  std::string mode = "modular";
  std::size_t memory = 0;
  std::size_t primes = 0;
  auto* nichols_cmd = app.add_subcommand("nichols", "Graded dimensions of the Nichols algebra");
  nichols_cmd->add_option("file", file, "Space or solution document")->required();
  nichols_cmd->add_option("--R,--values", values, "Values of the symbols, e.g. a=1,e=1,b=E(3)");
  nichols_cmd->add_option("--cutoff", cutoff, "Highest degree (default 8)");
  nichols_cmd->add_option("--mode", mode, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
  nichols_cmd->add_option("--memory", memory, "Memory budget in bytes");
  nichols_cmd->add_option("--primes", primes, "Candidate primes for modular mode");

  std::string format = "ascii";
  bool twist_flag = false;
  auto* gdd_cmd = app.add_subcommand("gdd", "Generalized Dynkin diagram of a diagonal braiding");
  gdd_cmd->add_option("file", file, "Space or solution document")->required();
  gdd_cmd->add_option("--R,--values", values, "Instantiate at these values");
  gdd_cmd->add_option("--format", format, "ascii or dot")->check(CLI::IsMember({"ascii", "dot"}));
  gdd_cmd->add_flag("--twist", twist_flag, "Use the twisted braiding of a near-rack space");
  gdd_cmd->add_option("--branch", branch, "Extra equalities for the twist");

  auto* classify_cmd = app.add_subcommand("classify", "Match a diagram against the catalogue");
  classify_cmd->add_option("file", file, "Diagram document {vertices, edges}")->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Reference example corpus");
  fixtures_cmd->require_subcommand(1);
  std::vector<std::string> ids;
  auto* fixtures_run = fixtures_cmd->add_subcommand("run", "Run the corpus and print a pass/fail table");
  fixtures_run->add_option("--id", ids, "Run only fixtures whose id starts with this");
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "List fixture ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(ErrorKind::Usage, e.what());
  }

  try {
    cli::Config cfg;
    if (!config_path.empty()) cfg = cli::load_config(config_path);

    if (verify_cmd->parsed()) {
      SetSolution s = solution_from_json(read_json_file(file));
      Report r = verify(s);
      print(to_json(r));
      return r.is_ybe ? 0 : 1;
    }
    if (derive_cmd->parsed()) {
      SetSolution s = solution_from_json(read_json_file(file));
      if (!satisfies_ybe(s)) throw verification_error("input is not a solution of the braid relation");
      json j;
      j["derived_solution"] = to_json(derived_solution(s));
      j["derived_rack"] = to_json(derived_rack(s));
      print(j);
      return 0;
    }
    if (enum_cmd->parsed()) {
      Rack r = rack_from_json(read_json_file(file));
      NearRackEnumeration e = enum_near_racks(r);
      if (as_json) {
        json j;
        j["class_count"] = e.class_count();
        j["taus"] = json::array();
        for (std::size_t k = 0; k < e.taus.size(); ++k)
          j["taus"].push_back({{"tau", print_cycles(e.taus[k])}, {"class", e.class_of[k] + 1}});
        j["representatives"] = json::array();
        for (std::size_t k : e.representatives) j["representatives"].push_back(to_json(near_rack_from(r, e.taus[k])));
        print(j);
      } else {
        std::cout << e.class_count() << (e.class_count() == 1 ? " class" : " classes");
        for (std::size_t k : e.representatives) std::cout << ": tau=" << print_cycles(e.taus[k]);
        std::cout << "\n";
        for (std::size_t k = 0; k < e.taus.size(); ++k)
          std::cout << "  tau=" << print_cycles(e.taus[k]) << "  class " << e.class_of[k] + 1 << "\n";
      }
      return 0;
    }
    if (solve_cmd->parsed()) {
      SetSolution s = solution_from_json(read_json_file(file));
      SolveOptions opt;
      opt.max_denominator = max_den;
      SolveResult r = solve(ybe_coefficient_system(s), opt);
      if (auto* inc = std::get_if<Inconsistency>(&r)) {
        print(to_json(*inc));
        return 1;
      }
      const auto& fam = std::get<SolutionFamily>(r);
      if (conditions_only) {
        json j = json::array();
        for (const auto& c : fam.conditions) j.push_back(c.str() + " = 1");
        print(j);
      } else {
        print(to_json(fam));
      }
      return 0;
    }
    if (tequiv_cmd->parsed()) {
      Family fam = load_family(read_json_file(file));
      json obstruction;
      SymbolicCertificate cert = family_certificate(fam, branch, &obstruction);
      if (!obstruction.is_null()) {
        print(obstruction);
        return 1;
      }
      const SymbolicSpace& b = fam.space;
      json j;
      j["certificate"] = to_json(cert);
      int rc = 0;
      if (!values.empty()) {
        std::vector<Monomial> ms = flat_entries(b);
        ms.insert(ms.end(), cert.z.begin(), cert.z.end());
        ms.insert(ms.end(), cert.conditions.begin(), cert.conditions.end());
        Assignment a = assignment_for(parse_values(values), ms);
        for (std::size_t k = 0; k < cert.conditions.size(); ++k)
          if (!evaluate(cert.conditions[k], a).is_one())
            throw verification_error("condition " + cert.conditions[k].str() + " = 1 fails at the given values");
        ConcreteCertificate cc = instantiate(cert, a);
        CertificateCheck chk = verify_certificate(cc);
        if (!chk.ok && search_signs) {
          if (auto z = search_sign_branches(cc.base, cc.z)) {
            cc = make_certificate(cc.base, *z);
            chk = verify_certificate(cc);
          }
        }
        j["concrete"] = to_json(cc);
        j["check"] = to_json(chk);
        rc = chk.ok ? 0 : 1;
      }
      print(j);
      return rc;
    }
    if (nichols_cmd->parsed()) {
      NicholsOptions opt;
      opt.cutoff = cutoff > 0 ? cutoff : cfg.cutoff.value_or(8);
      opt.mode = mode == "exact" ? RankMode::Exact : RankMode::Modular;
      if (memory > 0)
        opt.memory_budget = memory;
      else if (cfg.memory)
        opt.memory_budget = *cfg.memory;
      if (primes > 0)
        opt.prime_pool = primes;
      else if (cfg.primes)
        opt.prime_pool = *cfg.primes;
      ConcreteSpace b = load_concrete(read_json_file(file), values);
      HilbertData h = graded_dims(b, opt);
      if (as_json)
        print(to_json(h));
      else
        std::cout << hilbert_line(h) << "\n";
      return 0;
    }
    if (gdd_cmd->parsed()) {
      json doc = read_json_file(file);
      RenderFormat rf = format == "dot" ? RenderFormat::Dot : RenderFormat::Ascii;
      auto emit = [&](const auto& g) {
        if (as_json)
          print(to_json(g));
        else
          std::cout << render(g, rf);
      };
      if (!twist_flag) {
        if (values.empty() && !(is_space_doc(doc) && is_concrete_space(doc))) {
          emit(gdd(load_symbolic(doc)));
        } else {
          emit(gdd(load_concrete(doc, values)));
        }
        return 0;
      }
      Family fam = load_family(doc);
      json obstruction;
      SymbolicCertificate cert = family_certificate(fam, branch, &obstruction);
      if (!obstruction.is_null()) {
        print(obstruction);
        return 1;
      }
      const SymbolicSpace& b = fam.space;
      if (values.empty()) {
        emit(gdd(cert.derived));
      } else {
        std::vector<Monomial> ms = flat_entries(b);
        ms.insert(ms.end(), cert.z.begin(), cert.z.end());
        emit(gdd(instantiate(cert, assignment_for(parse_values(values), ms)).derived));
      }
      return 0;
    }
    if (classify_cmd->parsed()) {
      ConcreteGdd g = gdd_from_json(read_json_file(file));
      json j = json::array();
      for (const auto& t : classify(g)) j.push_back(to_json(t));
      print(j);
      return j.empty() ? 1 : 0;
    }
    if (fixtures_list->parsed()) {
      for (const auto& f : enumeration_fixtures()) std::cout << "enum/" << f.id << "  " << f.title << "\n";
      for (const auto& f : coefficient_fixtures()) std::cout << "coeff/" << f.id << "  " << f.title << "\n";
      return 0;
    }
    if (fixtures_run->parsed()) {
      auto wanted = [&](const std::string& id) {
        if (ids.empty()) return true;
        for (const auto& p : ids)
          if (id.rfind(p, 0) == 0) return true;
        return false;
      };
      std::vector<std::future<FixtureResult>> jobs;
      for (const auto& f : enumeration_fixtures())
        if (wanted("enum/" + f.id) || wanted(f.id))
          jobs.push_back(std::async(std::launch::async, [&f] {
            FixtureResult r = run_enumeration_fixture(f);
            r.id = "enum/" + r.id;
            return r;
          }));
      for (const auto& f : coefficient_fixtures())
        if (wanted("coeff/" + f.id) || wanted(f.id))
          jobs.push_back(std::async(std::launch::async, [&f] {
            FixtureResult r = run_coefficient_fixture(f);
            r.id = "coeff/" + r.id;
            return r;
          }));
      if (jobs.empty()) throw usage_error("no fixture matches the given id");
      bool all = true;
      json out = json::array();
      for (auto& job : jobs) {
        FixtureResult r = job.get();
        all = all && r.ok();
        if (as_json) {
          json checks = json::array();
          for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
          out.push_back({{"id", r.id}, {"ok", r.ok()}, {"checks", checks}});
          continue;
        }
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.id << "\n";
        for (const auto& c : r.checks) {
          std::cout << "  " << (c.ok ? "ok   " : "FAIL ") << c.name;
          if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
          std::cout << "\n";
        }
      }
      if (as_json) print(out);
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    return report_error(e.kind(), e.what());
  } catch (const json::exception& e) {
    return report_error(ErrorKind::Usage, std::string("json: ") + e.what());
  } catch (const std::exception& e) {
    return report_error(ErrorKind::Internal, e.what());
  }
  return 0;
}
