// liegeo: command line front end. Exit codes: 0 affirmative, 1 negative,
// 2 input or usage error.

#include "liegeo/construct.hpp"
#include "liegeo/io.hpp"
#include "liegeo/orthogonal.hpp"
#include "liegeo/report.hpp"
#include "liegeo/structure.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <map>

using namespace liegeo;

namespace {

struct Options {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 256;
  std::size_t attempts = 32;
  unsigned threads = 0;
  std::string algebra;
  std::string second;
  std::string form;
  std::string metric = "identity";
  std::string derivation;
  std::optional<double> einstein_tolerance;
  std::string builder;
  std::vector<std::string> params;
  std::string output;
};

struct Outcome {
  Json result;
  bool affirmative;
};

Metric metric_arg(const std::string& spec, std::size_t dim) {
  if (spec == "identity") return Metric::identity(dim);
  Metric g = load_metric(spec);
  if (g.dim() != dim)
    throw std::invalid_argument("metric has dim " + std::to_string(g.dim()) + ", algebra has dim " + std::to_string(dim));
  return g;
}

Covector form_arg(const std::string& csv, std::size_t dim) {
  Covector eta = parse_csv_vector(csv);
  if (eta.size() != dim)
    throw std::invalid_argument("form has " + std::to_string(eta.size()) + " entries, algebra has dim " +
                                std::to_string(dim));
  return eta;
}

std::size_t count_param(const std::vector<std::string>& p, std::size_t at, const char* what) {
  if (at >= p.size()) throw std::invalid_argument(std::string("missing parameter: ") + what);
  const Rational v = parse_rational(p[at]);
  if (v.get_den() != 1 || sgn(v) < 0) throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return v.get_num().get_ui();
}

LieAlgebra build(const std::string& name, const std::vector<std::string>& p) {
  auto arity = [&](std::size_t n) {
    if (p.size() != n)
      throw std::invalid_argument(name + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(p.size()));
  };
  if (name == "heisenberg") return arity(1), heisenberg(count_param(p, 0, "n"));
  if (name == "hyperbolic") return arity(1), hyperbolic(count_param(p, 0, "n"));
  if (name == "abelian") {
    arity(1);
    const std::size_t n = count_param(p, 0, "n");
    return LieAlgebra::abelian(n, "r" + std::to_string(n) + "_abelian");
  }
  if (name == "sl2") return arity(0), sl2();
  if (name == "so3") return arity(0), so3();
  if (name == "e2") return arity(0), e2();
  if (name == "oscillator") return arity(0), oscillator();
  if (name == "aff1") return arity(0), aff1();
  if (name == "r4so3") return arity(0), r4_so3();
  if (name == "flat5") return arity(0), flat5();
  if (name == "ch2") return arity(0), ch2_solvable();
  if (name == "gn") {
    if (p.empty()) return gn_default();
    const std::size_t n = count_param(p, 0, "n");
    arity(n + 3);
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back(parse_rational(p[2 + i]));
    return gn_family(n, parse_rational(p[1]), weights, parse_rational(p[2 + n]));
  }
  if (name == "sum") {
    arity(2);
    return direct_sum(load_algebra(p[0]), load_algebra(p[1]));
  }
  throw std::invalid_argument("unknown builder '" + name + "'");
}

Outcome run(const std::string& command, const Options& o) {
  SearchOptions search{o.seed, o.attempts, o.threads};
  if (command == "validate") {
    const AlgebraFile file = parse_algebra_file(read_file(o.algebra));
    const auto violations = validate(StructureConstants::from_entries(file.dim, file.brackets));
    return {validate_report(file, violations), violations.empty()};
  }
  if (command == "construct") {
    const LieAlgebra L = build(o.builder, o.params);
    if (!o.output.empty()) save_algebra(L, o.output);
    Json j = algebra_json(L);
    if (!o.output.empty()) j["written"] = o.output;
    return {j, true};
  }

  const LieAlgebra L = load_algebra(o.algebra);
  if (command == "info") return {info_report(L), true};
  if (command == "contact check") {
    Json j = contact_check_report(L, form_arg(o.form, L.dim()));
    const bool yes = j["contact"].get<bool>();
    return {j, yes};
  }
  if (command == "contact decide") {
    const DecisionOutcome out = decide_contact_exists(L, search);
    return {decision_report(out), out.verdict == Verdict::Exists};
  }
  if (command == "symplectic decide") {
    if (L.dim() % 2 == 1) {
      return {Json{{"verdict", "NONE"}, {"note", "odd dimension"}}, false};
    }
    const DecisionOutcome out = decide_exact_symplectic_exists(L, search);
    return {decision_report(out), out.verdict == Verdict::Exists};
  }
  if (command == "biinvariant") {
    const BiinvariantReport rep = find_biinvariant_metric(L, search);
    return {biinvariant_report(rep), rep.found()};
  }
  if (command == "curvature") {
    const Metric g = metric_arg(o.metric, L.dim());
    Json j = curvature_report(L, g, o.einstein_tolerance);
    const bool flat = j["flat"].get<bool>();
    return {j, flat};
  }
  if (command == "heintze") {
    const HeintzeReport rep = heintze_negative_possible(L, o.budget, o.seed);
    return {heintze_report(rep), rep.passes};
  }
  if (command == "kcontact") {
    const Metric g = metric_arg(o.metric, L.dim());
    Json j = kcontact_report(L, g, form_arg(o.form, L.dim()));
    const bool yes = j["k_contact"].get<bool>();
    return {j, yes};
  }
  if (command == "extend") {
    const Metric g = metric_arg(o.metric, L.dim());
    const Matrix d = parse_metric_matrix(read_file(o.derivation));
    const auto res = einstein_contact_extension(L, form_arg(o.form, L.dim()), g, d,
                                                o.einstein_tolerance.value_or(1e-12));
    if (!o.output.empty()) save_algebra(res.algebra, o.output);
    return {einstein_extension_report(res), res.einstein_found && res.witness.has_value()};
  }
  throw std::logic_error("unhandled command " + command);
}

void print_human(const Json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_human(value, indent + "  ");
    } else if (value.is_string()) {
      std::cout << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      std::cout << indent << key << ": " << value.dump() << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print a JSON report");
  app.add_flag("--timing", o.timing, "Include wall time in the JSON report");
  app.add_option("--seed", o.seed, "Seed for random witness search");
  app.add_option("--budget", o.budget, "Random samples for the Heintze search");
  app.add_option("--threads", o.threads, "Worker threads for grid sweeps (0 = hardware)");

  std::string command;
  auto on = [&](CLI::App* sub, std::string name) { sub->callback([&command, name] { command = name; }); };

  auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and Jacobi");
  validate_cmd->add_option("algebra", o.algebra)->required();
  on(validate_cmd, "validate");

  auto* info = app.add_subcommand("info", "Structural invariants");
  info->add_option("algebra", o.algebra)->required();
  on(info, "info");

  auto* contact = app.add_subcommand("contact", "Contact forms");
  contact->require_subcommand(1);
  auto* check = contact->add_subcommand("check", "Evaluate (d eta)^n ^ eta");
  check->add_option("algebra", o.algebra)->required();
  check->add_option("--form", o.form, "Covector as comma separated rationals")->required();
  on(check, "contact check");
  auto* decide = contact->add_subcommand("decide", "Decide whether a contact form exists");
  decide->add_option("algebra", o.algebra)->required();
  decide->add_option("--attempts", o.attempts, "Random covectors before the grid sweep");
  on(decide, "contact decide");

  auto* symplectic = app.add_subcommand("symplectic", "Exact symplectic forms");
  symplectic->require_subcommand(1);
  auto* sdecide = symplectic->add_subcommand("decide", "Decide whether d alpha can be nondegenerate");
  sdecide->add_option("algebra", o.algebra)->required();
  sdecide->add_option("--attempts", o.attempts, "Random covectors before the grid sweep");
  on(sdecide, "symplectic decide");

  auto* bi = app.add_subcommand("biinvariant", "Search for an ad-invariant nondegenerate form");
  bi->add_option("algebra", o.algebra)->required();
  on(bi, "biinvariant");

  auto* curv = app.add_subcommand("curvature", "Left-invariant curvature of a metric");
  curv->add_option("algebra", o.algebra)->required();
  curv->add_option("--metric", o.metric, "Metric file or 'identity'");
  curv->add_option("--einstein-tolerance", o.einstein_tolerance, "Also report the Einstein fit against this bound");
  on(curv, "curvature");

  auto* heintze = app.add_subcommand("heintze", "Negative curvature criterion");
  heintze->add_option("algebra", o.algebra)->required();
  on(heintze, "heintze");

  auto* kc = app.add_subcommand("kcontact", "Contact metric and K-contact checks");
  kc->add_option("algebra", o.algebra)->required();
  kc->add_option("--metric", o.metric, "Metric file or 'identity'");
  kc->add_option("--form", o.form, "Contact form as comma separated rationals")->required();
  on(kc, "kcontact");

  auto* ext = app.add_subcommand("extend", "Einstein contact extension H + R e");
  ext->add_option("algebra", o.algebra)->required();
  ext->add_option("--form", o.form, "Exact symplectic covector alpha")->required();
  ext->add_option("--metric", o.metric, "Standard Einstein metric on H");
  ext->add_option("--derivation", o.derivation, "Derivation D in metric file format")->required();
  ext->add_option("--einstein-tolerance", o.einstein_tolerance, "Tolerance for irrational scales");
  ext->add_option("-o,--output", o.output, "Write the extended algebra here");
  on(ext, "extend");

  auto* cons = app.add_subcommand("construct", "Build a named algebra");
  cons->add_option("name", o.builder,
                   "heisenberg N | hyperbolic N | abelian N | sl2 | so3 | e2 | oscillator | aff1 | "
                   "gn [N P P1..PN Q] | r4so3 | flat5 | ch2 | sum A.lie B.lie")
      ->required();
  cons->add_option("params", o.params);
  cons->add_option("-o,--output", o.output, "Output file (default: report only)");
  on(cons, "construct");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = run(command, o);
    if (o.json) {
      Json report{{"command", command}};
      if (!o.algebra.empty()) report["input"] = o.algebra;
      report["seed"] = o.seed;
      report["result"] = std::move(out.result);
      report["affirmative"] = out.affirmative;
      if (o.timing)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cout << report.dump(2) << '\n';
    } else {
      print_human(out.result);
    }
    return out.affirmative ? 0 : 1;
  } catch (const InvalidAlgebra& e) {
    std::cerr << "invalid algebra: " << e.what() << '\n';
    for (const auto& v : e.violations()) std::cerr << "  " << v.describe() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
