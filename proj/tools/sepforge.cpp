// sepforge: construct separating elements for ideals of associative
// algebras and verify every output against brute-force ideal families.
//
// Commands
//   separate-diff  product-form separator for differential ideals of a
//                  polynomial algebra, verified against the monomial family
//   separate-mod   list-form separator for two-sided ideals, verified
//                  against the instance's ideal lattice where one exists
//   witness        prime-subfield element inside a generated ideal of a
//                  free algebra, by iterative deepening
//   chain          cumulative products of a stabilize report, or
//                  re-verification of a previously emitted chain
//
// Exit codes: 0 pass, 1 verification violation, 2 config or parse error,
// 3 no splitting found, 4 search budget exhausted, 5 witness not found,
// 6 chain verification violation.

#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepforge/errors.hpp"
#include "sepforge/oracles.hpp"
#include "sepforge/parse.hpp"
#include "sepforge/separator.hpp"

using json = nlohmann::ordered_json;
using namespace sepforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoSplitting = 3;
constexpr int kExitBudget = 4;
constexpr int kExitNoWitness = 5;
constexpr int kExitChain = 6;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::string out_path;  // empty: stdout
  bool no_timestamp = false;
};

std::string iso_now() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_report(const Options& opt, const json& report) {
  std::string text = report.dump(2);
  text += '\n';
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw ConfigError("cannot write report to " + opt.out_path);
  out << text;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object() || cfg.value("schema", "") != "sepforge/1")
    throw ConfigError("config schema must be \"sepforge/1\"");
  return cfg;
}

FieldSpec field_of(const json& cfg) {
  if (!cfg.contains("field")) throw ConfigError("config needs a \"field\"");
  const json& f = cfg["field"];
  if (f.is_string()) {
    std::string s = f.get<std::string>();
    if (s == "Q") return FieldSpec::rationals();
    if (s == "Q(t)") return FieldSpec::rational_functions();
    throw ConfigError("unknown field \"" + s +
                      "\"; use \"Q\", \"Q(t)\", or {\"p\": prime}");
  }
  if (f.is_object() && f.contains("p") && f["p"].is_number_integer())
    return FieldSpec::prime_field(f["p"].get<std::int64_t>());
  throw ConfigError("field must be \"Q\", \"Q(t)\", or {\"p\": prime}");
}

AlgebraRef algebra_of(const json& cfg) {
  std::string kind = cfg.value("algebra", "");
  FieldSpec spec = field_of(cfg);
  std::vector<std::string> names;
  if (cfg.contains("generator_names")) {
    if (!cfg["generator_names"].is_array())
      throw ConfigError("generator_names must be an array of strings");
    for (const auto& n : cfg["generator_names"]) {
      if (!n.is_string()) throw ConfigError("generator names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  int n = cfg.value("generators", 0);
  if (kind == "jacobson") return AlgebraPresentation::jacobson(spec);
  if (kind == "weyl") return AlgebraPresentation::weyl(spec);
  if (kind == "matrix") {
    if (n < 1) throw ConfigError("matrix algebra needs \"generators\" (the size)");
    return AlgebraPresentation::matrix_algebra(n, spec);
  }
  if (kind == "free") {
    if (n < 1) throw ConfigError("free algebra needs \"generators\" >= 1");
    return AlgebraPresentation::free_algebra(n, spec, names);
  }
  if (kind == "poly") {
    if (n < 1) throw ConfigError("polynomial algebra needs \"generators\" >= 1");
    return AlgebraPresentation::comm_poly(n, spec, names);
  }
  throw ConfigError("unknown algebra \"" + kind +
                    "\"; use free, jacobson, weyl, matrix, or poly");
}

std::vector<AlgebraElement> parse_literals(const AlgebraRef& alg,
                                           const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty())
    throw ConfigError(std::string(what) +
                      " must be a nonempty array of element literals");
  std::vector<AlgebraElement> out;
  for (const auto& s : arr) {
    if (!s.is_string())
      throw ConfigError(std::string(what) + " entries must be strings");
    out.push_back(parse_element(alg, s.get<std::string>()));
  }
  return out;
}

json base_report(const std::string& command, const AlgebraRef& alg,
                 const Options& opt) {
  json r;
  r["schema"] = "sepforge-report/1";
  r["command"] = command;
  if (!opt.no_timestamp) r["generated_at"] = iso_now();
  r["algebra"] = alg->name();
  return r;
}

json trace_json(const TraceNode& node) {
  json j;
  j["dim"] = node.space.dimension();
  if (node.is_leaf()) {
    j["element"] = node.element->str();
    return j;
  }
  j["v"] = node.v->str();
  if (node.x_witness.has_value()) j["x"] = node.x_witness->str();
  if (node.derivation_index >= 0) {
    j["derivation_index"] = node.derivation_index;
    if (node.w_witness.has_value()) j["w"] = node.w_witness->str();
  }
  j["kernel"] = trace_json(*node.kernel_child);
  j["image"] = trace_json(*node.image_child);
  return j;
}

// Structural trace checks run on every separation, independent of any
// ideal family: complementary split dimensions, nonzero parts, v in the
// kernel part, nonzero leaf elements.
void structural_check(const TraceNode& node,
                      std::vector<std::string>& violations) {
  if (node.is_leaf()) {
    if (node.space.dimension() != 1)
      violations.push_back("trace leaf with dimension != 1");
    if (!node.element.has_value() || node.element->is_zero())
      violations.push_back("trace leaf without a nonzero element");
    return;
  }
  if (!node.v.has_value() || !node.kernel_child || !node.image_child) {
    violations.push_back("internal trace node is missing v or children");
    return;
  }
  const Subspace& v1 = node.kernel_child->space;
  const Subspace& v2 = node.image_child->space;
  if (v1.dimension() + v2.dimension() != node.space.dimension())
    violations.push_back("split dimensions do not sum to dim V at a node");
  if (v1.is_zero() || v2.is_zero())
    violations.push_back("split produced a zero part");
  if (!v1.coordinates_of(*node.v).has_value())
    violations.push_back("chosen v lies outside the kernel part");
  structural_check(*node.kernel_child, violations);
  structural_check(*node.image_child, violations);
}

json verification_json(const SeparationResult& res,
                       const std::vector<IdealDescriptor>& family,
                       bool family_available, const Subspace& V,
                       std::vector<std::string> notes) {
  std::vector<std::string> violations;
  structural_check(*res.trace, violations);
  json v;
  if (family_available) {
    json fam = json::array();
    for (const auto& ideal : family) fam.push_back(ideal_str(ideal));
    v["family"] = fam;
    VerificationReport rep = verify_separation(res, family, V);
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json cj;
      cj["ideal"] = c.ideal;
      cj["meets_subspace"] = c.meets_subspace;
      if (c.witness.has_value()) cj["witness"] = *c.witness;
      if (c.violation.has_value()) cj["violation"] = *c.violation;
      checks.push_back(cj);
    }
    v["checks"] = checks;
    for (const auto& viol : rep.violations) violations.push_back(viol);
    for (auto& viol : check_var_coverage(*res.trace, family))
      violations.push_back(std::move(viol));
  }
  v["violations"] = violations;
  v["notes"] = notes;
  v["verdict"] = !violations.empty() ? "fail"
                 : family_available  ? "pass"
                                     : "structural-only";
  return v;
}

bool verdict_fails(const json& verification) {
  return verification["verdict"].get<std::string>() == "fail";
}

std::vector<Derivation> derivations_of(const AlgebraRef& alg, const json& cfg) {
  if (!cfg.contains("derivations") || !cfg["derivations"].is_array() ||
      cfg["derivations"].empty())
    throw ConfigError("separate-diff needs a nonempty \"derivations\" array");
  std::vector<Derivation> ds;
  for (const auto& images : cfg["derivations"]) {
    if (!images.is_array() ||
        static_cast<int>(images.size()) != alg->generator_count())
      throw ConfigError(
          "each derivation must list one image literal per variable");
    std::vector<AlgebraElement> imgs;
    for (const auto& s : images) {
      if (!s.is_string())
        throw ConfigError("derivation images must be element literals");
      imgs.push_back(parse_element(alg, s.get<std::string>()));
    }
    ds.emplace_back(alg, std::move(imgs));
  }
  return ds;
}

// Monomial ideals with generator degree <= bound, keeping only those closed
// under the declared derivations (with a note when any are excluded).
std::vector<IdealDescriptor> monomial_family(const AlgebraRef& alg,
                                             const std::vector<Derivation>& ds,
                                             int gen_degree,
                                             std::vector<std::string>& notes) {
  std::vector<IdealDescriptor> family;
  int excluded = 0;
  for (const auto& ideal : enumerate_monomial_ideals(alg, gen_degree)) {
    if (diff_closure_check(ideal, ds)) {
      family.emplace_back(ideal);
    } else {
      ++excluded;
    }
  }
  if (excluded > 0)
    notes.push_back(std::to_string(excluded) +
                    " monomial ideal(s) not closed under the declared "
                    "derivations were excluded from the family");
  return family;
}

int oracle_int(const json& cfg, const char* key, int fallback) {
  if (!cfg.contains("oracle")) return fallback;
  const json& o = cfg["oracle"];
  if (!o.is_object() || !o.contains(key)) return fallback;
  if (!o[key].is_number_integer() || o[key].get<int>() < 1)
    throw ConfigError(std::string("oracle.") + key + " must be an integer >= 1");
  return o[key].get<int>();
}

int cmd_separate_diff(const Options& opt) {
  json cfg = load_config(opt.config_path);
  AlgebraRef alg = algebra_of(cfg);
  if (!alg->is_commutative())
    throw ConfigError("separate-diff needs \"algebra\": \"poly\"");
  std::vector<Derivation> ds = derivations_of(alg, cfg);
  bool has_v = cfg.contains("V");
  bool has_dmax = cfg.contains("d_max");
  if (has_v == has_dmax)
    throw ConfigError("separate-diff needs exactly one of \"V\" or \"d_max\"");

  json report = base_report("separate-diff", alg, opt);
  json dj = json::array();
  for (const auto& d : ds) dj.push_back(d.str());
  report["derivations"] = dj;

  if (has_v) {
    Subspace V = Subspace::span(alg, parse_literals(alg, cfg["V"], "V"));
    report["V"] = cfg["V"];
    SeparationResult res;
    try {
      res = diff_separate(alg, ds, V);
    } catch (const NoSplittingFound& e) {
      report["error"] = {{"type", "no-splitting-found"},
                         {"subspace", e.subspace}};
      write_report(opt, report);
      return kExitNoSplitting;
    }
    std::vector<std::string> notes;
    int gen_degree = oracle_int(cfg, "monomial_generator_degree",
                                std::max(1, V.max_element_degree()));
    auto family = monomial_family(alg, ds, gen_degree, notes);
    json verification = verification_json(res, family, true, V, notes);
    report["mode"] = "diff-product";
    report["elements"] = json::array({res.elements[0].str()});
    report["trace"] = trace_json(*res.trace);
    report["verification"] = verification;
    write_report(opt, report);
    return verdict_fails(verification) ? kExitViolation : kExitPass;
  }

  int d_max = cfg["d_max"].is_number_integer() ? cfg["d_max"].get<int>() : 0;
  if (d_max < 1) throw ConfigError("\"d_max\" must be an integer >= 1");
  std::vector<StabilizeStep> steps;
  try {
    steps = diff_stabilize(alg, ds, d_max);
  } catch (const NoSplittingFound& e) {
    report["error"] = {{"type", "no-splitting-found"}, {"subspace", e.subspace}};
    write_report(opt, report);
    return kExitNoSplitting;
  }
  bool any_fail = false;
  json sj = json::array();
  for (const auto& step : steps) {
    Subspace ld = degree_filtration(alg, step.d);
    std::vector<std::string> notes;
    int gen_degree =
        oracle_int(cfg, "monomial_generator_degree", std::max(1, step.d));
    auto family = monomial_family(alg, ds, gen_degree, notes);
    json verification =
        verification_json(step.result, family, true, ld, notes);
    any_fail = any_fail || verdict_fails(verification);
    json stepj;
    stepj["d"] = step.d;
    stepj["element"] = step.result.elements[0].str();
    stepj["trace"] = trace_json(*step.result.trace);
    stepj["verification"] = verification;
    sj.push_back(stepj);
  }
  report["mode"] = "diff-stabilize";
  report["stabilize"] = sj;
  write_report(opt, report);
  return any_fail ? kExitViolation : kExitPass;
}

int cmd_separate_mod(const Options& opt) {
  json cfg = load_config(opt.config_path);
  AlgebraRef alg = algebra_of(cfg);
  if (alg->is_commutative())
    throw ConfigError(
        "separate-mod needs a noncommutative presentation "
        "(free, jacobson, weyl, or matrix)");
  if (!cfg.contains("V")) throw ConfigError("separate-mod needs \"V\"");
  long budget = 0;
  if (cfg.contains("budget") && cfg["budget"].is_number_integer())
    budget = cfg["budget"].get<long>();
  if (budget < 1) throw ConfigError("\"budget\" must be an integer >= 1");

  Subspace V = Subspace::span(alg, parse_literals(alg, cfg["V"], "V"));
  json report = base_report("separate-mod", alg, opt);
  report["V"] = cfg["V"];
  report["budget"] = budget;

  SeparationResult res;
  try {
    res = mod_separate(alg, V, budget);
  } catch (const SearchBudgetExhausted& e) {
    report["error"] = {{"type", "search-budget-exhausted"},
                       {"scanned", e.scanned},
                       {"subspace", e.subspace}};
    write_report(opt, report);
    return kExitBudget;
  }

  std::vector<std::string> notes;
  std::vector<IdealDescriptor> family;
  bool family_available = false;
  if (alg->id() == AlgebraId::Jacobson) {
    if (cfg.contains("oracle") && cfg["oracle"].contains("laurent_coeffs")) {
      std::vector<FieldElement> grid;
      for (const auto& c : cfg["oracle"]["laurent_coeffs"]) {
        if (!c.is_number_integer())
          throw ConfigError("oracle.laurent_coeffs must be integers");
        grid.push_back(
            FieldElement::from_integer(alg->field(), c.get<int>()));
      }
      family = jacobson_ideal_family(alg, grid,
                                     oracle_int(cfg, "laurent_width", 3));
    } else {
      family = jacobson_default_family(alg);
    }
    family_available = true;
  } else if (alg->id() == AlgebraId::MatrixAlg) {
    family = {ZeroIdeal{alg}, UnitIdeal{alg}};
    family_available = true;
    notes.push_back("simple algebra: the only ideals are (0) and (1)");
  } else {
    notes.push_back(
        "no ideal oracle family exists for this presentation; "
        "verification is structural only");
  }

  json verification = verification_json(res, family, family_available, V,
                                        std::move(notes));
  report["mode"] = "mod-list";
  json elems = json::array();
  for (const auto& e : res.elements) elems.push_back(e.str());
  report["elements"] = elems;
  report["trace"] = trace_json(*res.trace);
  report["verification"] = verification;
  write_report(opt, report);
  return verdict_fails(verification) ? kExitViolation : kExitPass;
}

int cmd_witness(const Options& opt) {
  json cfg = load_config(opt.config_path);
  AlgebraRef alg = algebra_of(cfg);
  if (alg->id() != AlgebraId::Free)
    throw ConfigError("witness needs \"algebra\": \"free\"");
  if (!cfg.contains("ideal_generators"))
    throw ConfigError("witness needs \"ideal_generators\"");
  std::vector<AlgebraElement> gens =
      parse_literals(alg, cfg["ideal_generators"], "ideal_generators");
  int max_gen_degree = 0;
  for (const auto& g : gens)
    max_gen_degree = std::max(max_gen_degree, g.degree());
  max_gen_degree = std::max(max_gen_degree, 1);
  int start = cfg.value("degree_bound", max_gen_degree);
  if (start < max_gen_degree)
    throw ConfigError(
        "\"degree_bound\" is below the largest generator degree");
  int deepen_to = cfg.value("deepen_to", start);
  if (deepen_to < start)
    throw ConfigError("\"deepen_to\" must be >= the starting degree bound");

  json report = base_report("witness", alg, opt);
  report["ideal_generators"] = cfg["ideal_generators"];

  for (int bound = start; bound <= deepen_to; ++bound) {
    std::optional<AlgebraElement> w = prime_field_witness(alg, gens, bound);
    if (!w.has_value()) continue;
    bool confirmed =
        ideal_contains(TruncatedIdeal(alg, gens, bound), *w) && !w->is_zero();
    report["witness"] = w->str();
    report["bound"] = bound;
    report["confirmed"] = confirmed;
    write_report(opt, report);
    if (!confirmed) {
      std::cerr << "witness failed membership confirmation\n";
      return kExitViolation;
    }
    std::cout << "witness " << w->str() << " at bound " << bound << "\n";
    return kExitPass;
  }
  report["witness"] = nullptr;
  report["searched_to"] = deepen_to;
  write_report(opt, report);
  std::cout << "not found up to " << deepen_to << "\n";
  return kExitNoWitness;
}

int cmd_chain(const Options& opt) {
  json cfg = load_config(opt.config_path);
  AlgebraRef alg = algebra_of(cfg);
  if (!alg->is_commutative())
    throw ConfigError("chain needs \"algebra\": \"poly\"");
  std::string input_path = cfg.value("input_report", "");
  if (input_path.empty()) throw ConfigError("chain needs \"input_report\"");
  std::ifstream in(input_path);
  if (!in) throw ConfigError("cannot open input report: " + input_path);
  json prior;
  try {
    in >> prior;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("input report is not valid JSON: ") +
                      e.what());
  }
  if (!prior.is_object() ||
      prior.value("schema", "") != "sepforge-report/1")
    throw ConfigError("input report schema must be \"sepforge-report/1\"");

  std::vector<AlgebraElement> inputs;
  if (prior.contains("stabilize") && prior["stabilize"].is_array()) {
    for (const auto& step : prior["stabilize"]) {
      if (!step.is_object() || !step.contains("element") ||
          !step["element"].is_string())
        throw ConfigError("stabilize steps must each carry an \"element\"");
      inputs.push_back(parse_element(alg, step["element"].get<std::string>()));
    }
  } else if (prior.contains("inputs") && prior["inputs"].is_array()) {
    for (const auto& s : prior["inputs"]) {
      if (!s.is_string()) throw ConfigError("report inputs must be strings");
      inputs.push_back(parse_element(alg, s.get<std::string>()));
    }
  }
  if (inputs.empty())
    throw ConfigError(
        "input report carries no stabilize elements or chain inputs");

  json report = base_report("chain", alg, opt);
  json input_strs = json::array();
  for (const auto& a : inputs) input_strs.push_back(a.str());
  report["inputs"] = input_strs;

  if (prior.contains("chain")) {
    // Re-verify a recorded chain: b_1 = a_1 and each successive quotient
    // b_{i+1} / b_i must divide exactly back to a_{i+1}.
    if (!prior["chain"].is_array())
      throw ConfigError("recorded chain must be an array of element literals");
    std::vector<AlgebraElement> recorded;
    for (const auto& s : prior["chain"]) {
      if (!s.is_string())
        throw ConfigError("recorded chain entries must be strings");
      recorded.push_back(parse_element(alg, s.get<std::string>()));
    }
    std::vector<std::string> violations;
    if (recorded.size() != inputs.size())
      violations.push_back("recorded chain length differs from input count");
    if (!recorded.empty() && !inputs.empty() && recorded[0] != inputs[0])
      violations.push_back("recorded chain does not start at the first input");
    for (std::size_t i = 0; i + 1 < recorded.size(); ++i) {
      auto q = try_divide_exact(recorded[i + 1], recorded[i]);
      if (!q.has_value()) {
        violations.push_back("entry " + std::to_string(i + 2) +
                             " is not an exact multiple of its predecessor");
      } else if (i + 1 < inputs.size() && *q != inputs[i + 1]) {
        violations.push_back("entry " + std::to_string(i + 2) +
                             " quotient differs from input " +
                             inputs[i + 1].str());
      }
    }
    report["chain"] = prior["chain"];
    report["verification"] = {
        {"violations", violations},
        {"verdict", violations.empty() ? "pass" : "fail"}};
    write_report(opt, report);
    return violations.empty() ? kExitPass : kExitChain;
  }

  std::vector<AlgebraElement> products = chain(inputs);
  json chain_strs = json::array();
  for (const auto& b : products) chain_strs.push_back(b.str());
  report["chain"] = chain_strs;
  report["verification"] = {{"violations", json::array()},
                            {"verdict", "pass"}};
  write_report(opt, report);
  return kExitPass;
}

int dispatch(const std::string& command, const Options& opt) {
  try {
    if (command == "separate-diff") return cmd_separate_diff(opt);
    if (command == "separate-mod") return cmd_separate_mod(opt);
    if (command == "witness") return cmd_witness(opt);
    return cmd_chain(opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separating-element construction with oracle verification"};
  app.require_subcommand(1);

  std::vector<std::pair<std::string, CLI::App*>> commands;
  Options opt;
  for (const char* name :
       {"separate-diff", "separate-mod", "witness", "chain"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config_path, "JSON config file")
        ->required();
    sub->add_option("--out", opt.out_path,
                    "report file (default: standard output)");
    sub->add_flag("--no-timestamp", opt.no_timestamp,
                  "omit the generation timestamp from the report");
    commands.emplace_back(name, sub);
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [name, sub] : commands)
    if (sub->parsed()) return dispatch(name, opt);
  return kExitConfig;
}
