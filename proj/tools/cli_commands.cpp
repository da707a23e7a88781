#include "cli_commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "urns/closed_form.hpp"
#include "urns/exact_dp.hpp"
#include "urns/limit_check.hpp"
#include "urns/montecarlo.hpp"
#include "urns/presets.hpp"
#include "urns/spec_io.hpp"

namespace urns::cli {

namespace {

using nlohmann::json;

struct ModelArgs {
  std::string model;
  std::string spec_file;
  std::string start;
  std::string format = "csv";
};

struct Model {
  std::string name;
  UrnSpec spec;
};

Model resolve_model(const ModelArgs& args) {
  if (!args.spec_file.empty()) return {"custom", load_spec_file(args.spec_file)};
  if (args.model.empty()) throw SpecError("either --model or --spec is required");
  return {args.model, presets::by_name(args.model)};
}

State resolve_start(const ModelArgs& args, const UrnSpec& spec) {
  if (args.start.empty()) throw SpecError("--start is required");
  State s = parse_state(args.start);
  check_state(spec, s);
  return s;
}

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"float", to_double(q)}};
}

void add_model_options(CLI::App* cmd, ModelArgs& args, bool needs_start = true) {
  cmd->add_option("--model", args.model,
                  "pills, rpills:<r>, pills-variant, cannibal, cannibal-unmodified, okcorral, "
                  "sampling");
  cmd->add_option("--spec", args.spec_file, "JSON urn spec file (instead of --model)");
  if (needs_start) {
    cmd->add_option("--start", args.start,
                    "comma-separated counts: black,white for 2 colors; n1,...,nr otherwise");
  }
  cmd->add_option("--format", args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  ModelArgs model;
  int order = 3;
  std::optional<double> v1;
  std::optional<double> v2;
  bool dump_spec = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const Model model = resolve_model(args.model);
  if (args.dump_spec) {
    out << spec_to_json(model.spec).dump(2) << "\n";
    return kExitOk;
  }
  const State start = resolve_start(args.model, model.spec);
  if (args.order < 1) throw SpecError("--order must be >= 1");
  const auto dist = absorption_distribution(model.spec, start);
  const std::size_t color = observed_color(model.spec);
  const auto moments = factorial_moments(dist, color, args.order);
  std::optional<double> pgf;
  if (args.v1 || args.v2) {
    std::vector<double> point(model.spec.colors(), 1.0);
    if (model.spec.colors() == 2) {
      point[kBlack] = args.v1.value_or(1.0);
      point[kWhite] = args.v2.value_or(1.0);
    } else {
      point[0] = args.v1.value_or(1.0);
    }
    pgf = pgf_eval(dist, point);
  }

  if (args.model.format == "json") {
    json doc;
    doc["model"] = model.name;
    doc["start"] = start.counts();
    doc["type"] = to_string(validate(model.spec));
    doc["distribution"] = json::array();
    for (const auto& [s, p] : dist.entries()) {
      doc["distribution"].push_back({{"state", s.counts()},
                                     {"prob_num", p.get_num().get_str()},
                                     {"prob_den", p.get_den().get_str()},
                                     {"prob_float", to_double(p)}});
    }
    json factorial = json::array();
    for (std::size_t r = 0; r < moments.factorial_moments.size(); ++r) {
      json entry = rational_json(moments.factorial_moments[r]);
      entry["order"] = r + 1;
      factorial.push_back(entry);
    }
    doc["moments"] = {{"color", color}, {"factorial", factorial},
                      {"mean", rational_json(moments.mean)}};
    if (args.order >= 2) doc["moments"]["variance"] = rational_json(moments.variance);
    if (pgf) doc["pgf"] = *pgf;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "state,prob_num,prob_den,prob_float\n";
  for (const auto& [s, p] : dist.entries()) {
    out << s.to_string(';') << ',' << p.get_num().get_str() << ',' << p.get_den().get_str()
        << ',' << fmt_double(to_double(p)) << "\n";
  }
  out << "\nmoment,order,num,den,float\n";
  for (std::size_t r = 0; r < moments.factorial_moments.size(); ++r) {
    const auto& m = moments.factorial_moments[r];
    out << "factorial," << r + 1 << ',' << m.get_num().get_str() << ',' << m.get_den().get_str()
        << ',' << fmt_double(to_double(m)) << "\n";
  }
  if (args.order >= 2) {
    out << "variance,2," << moments.variance.get_num().get_str() << ','
        << moments.variance.get_den().get_str() << ','
        << fmt_double(to_double(moments.variance)) << "\n";
  }
  if (pgf) out << "\npgf\n" << fmt_double(*pgf) << "\n";
  return kExitOk;
}

// ---- formula --------------------------------------------------------------

struct FormulaArgs {
  ModelArgs model;
  std::string quantity;
  std::optional<double> v;
  std::optional<Count> k;
};

struct FormulaValue {
  std::optional<Rational> exact;
  double value = 0.0;
  double tolerance = 0.0;
};

struct Unsupported : SpecError {
  using SpecError::SpecError;
};

FormulaValue evaluate_formula(const std::string& name, const State& start, const FormulaArgs& a) {
  namespace cf = closed_form;
  auto need_k = [&]() {
    if (!a.k) throw SpecError("--k is required for quantity pmf");
    return *a.k;
  };
  auto need_v = [&]() {
    if (!a.v) throw SpecError("--v is required for quantity pgf");
    return *a.v;
  };
  auto exact = [](Rational q) { return FormulaValue{q, to_double(q), 0.0}; };
  const std::string& q = a.quantity;
  if (name.starts_with("rpills:")) {
    if (q == "pgf") return {std::nullopt, cf::rpills_pgf(start.counts(), need_v()), 1e-8};
  } else if (start.colors() == 2) {
    const Count m = start[kBlack];
    const Count n = start[kWhite];
    if (name == "pills" && q == "pgf") return {std::nullopt, cf::pills_pgf(n, m, need_v()), 1e-10};
    if (name == "pills" && q == "expectation") return exact(cf::pills_expectation(n, m));
    if (name == "pills-variant" && q == "expectation") {
      if (m % 2 != 0) throw Unsupported("the variant expectation formula needs an even black count");
      return exact(cf::variant_pills_expectation(n, m / 2));
    }
    if (name == "cannibal" && q == "pmf") return exact(cf::cannibal_pmf(n, m, need_k()));
    if (name == "okcorral" && q == "survive") return exact(cf::okcorral_survive_prob(n, m));
    if (name == "okcorral" && q == "pmf") return exact(cf::okcorral_survivor_pmf(n, m, need_k()));
    if (name == "sampling" && q == "survive") return exact(cf::sampling_survive_prob(n, m));
    if (name == "sampling" && q == "pmf") return exact(cf::sampling_pmf(n, m, need_k()));
  }
  throw Unsupported("no closed form for quantity '" + q + "' of model '" + name + "'");
}

int cmd_formula(const FormulaArgs& args, std::ostream& out) {
  const Model model = resolve_model(args.model);
  const State start = resolve_start(args.model, model.spec);
  FormulaValue value;
  try {
    value = evaluate_formula(model.name, start, args);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  if (args.model.format == "json") {
    json doc = {{"model", model.name}, {"start", start.counts()}, {"quantity", args.quantity}};
    if (args.v) doc["v"] = *args.v;
    if (args.k) doc["k"] = *args.k;
    if (value.exact) {
      doc["exact"] = true;
      doc["value"] = rational_json(*value.exact);
    } else {
      doc["exact"] = false;
      doc["value"] = {{"float", value.value}, {"abs_tolerance", value.tolerance}};
    }
    out << doc.dump(2) << "\n";
  } else if (value.exact) {
    out << to_fraction_string(*value.exact) << "\n";
  } else {
    out << fmt_double(value.value) << " +/- " << value.tolerance << "\n";
  }
  return kExitOk;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  ModelArgs model;
  std::uint64_t reps = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool dump_spec = false;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  const Model model = resolve_model(args.model);
  if (args.dump_spec) {
    out << spec_to_json(model.spec).dump(2) << "\n";
    return kExitOk;
  }
  const State start = resolve_start(args.model, model.spec);
  if (args.reps < 1) throw SpecError("--reps must be >= 1");
  const auto sim = run_batch(SimConfig{model.spec, start, args.reps, args.seed}, args.workers);
  if (args.model.format == "json") {
    json doc = {{"model", model.name},   {"start", start.counts()}, {"replications", args.reps},
                {"seed", args.seed},     {"states", json::array()}};
    for (const auto& [s, n] : sim.counts()) {
      doc["states"].push_back({{"state", s.counts()},
                               {"count", n},
                               {"frequency", sim.frequency(s)},
                               {"half_width_99", sim.half_width_99(s)}});
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "state,count,frequency,half_width_99\n";
  for (const auto& [s, n] : sim.counts()) {
    out << s.to_string(';') << ',' << n << ',' << fmt_double(sim.frequency(s)) << ','
        << fmt_double(sim.half_width_99(s)) << "\n";
  }
  return kExitOk;
}

// ---- limit-check ----------------------------------------------------------

struct LimitArgs {
  std::string model;
  std::string scaling;
  std::string sizes;
  std::optional<Count> fixed;
  std::string format = "csv";
};

int cmd_limit_check(const LimitArgs& args, std::ostream& out) {
  const State sizes_state = parse_state(args.sizes);
  const auto check = run_limit_check(args.model, args.scaling, sizes_state.counts(), args.fixed);
  if (args.format == "json") {
    json doc = {{"model", check.model}, {"scaling", check.scaling}, {"law", check.law},
                {"decreasing", check.decreasing}, {"points", json::array()}};
    for (const auto& p : check.points) {
      doc["points"].push_back({{"size", p.size},
                               {"start", p.start.counts()},
                               {"shift", p.map.shift},
                               {"scale", p.map.scale},
                               {"ks", p.ks}});
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "size,start,shift,scale,ks\n";
  for (const auto& p : check.points) {
    out << p.size << ',' << p.start.to_string(';') << ',' << fmt_double(p.map.shift) << ','
        << fmt_double(p.map.scale) << ',' << fmt_double(p.ks) << "\n";
  }
  out << "# " << check.law << ": KS " << (check.decreasing ? "decreasing: PASS" : "not decreasing: FAIL")
      << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated absorption laws of diminishing urn models", "urns"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "exact absorption distribution and moments");
  add_model_options(solve_cmd, solve.model);
  solve_cmd->add_option("--order", solve.order, "highest factorial moment (default 3)");
  solve_cmd->add_option("--v1", solve.v1, "pgf argument for the black (or first) count");
  solve_cmd->add_option("--v2", solve.v2, "pgf argument for the white count");
  solve_cmd->add_flag("--dump-spec", solve.dump_spec, "print the model as a JSON spec and exit");

  FormulaArgs formula;
  auto* formula_cmd = app.add_subcommand("formula", "closed-form value for a model");
  add_model_options(formula_cmd, formula.model);
  formula_cmd->add_option("--quantity", formula.quantity, "pgf, expectation, pmf or survive")
      ->required()
      ->check(CLI::IsMember({"pgf", "expectation", "pmf", "survive"}));
  formula_cmd->add_option("--v", formula.v, "pgf argument in [0, 1]");
  formula_cmd->add_option("--k", formula.k, "remaining count for pmf");

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo absorption frequencies");
  add_model_options(simulate_cmd, simulate.model);
  simulate_cmd->add_option("--reps", simulate.reps, "replications (default 10000)");
  simulate_cmd->add_option("--seed", simulate.seed, "64-bit seed (default 1)");
  simulate_cmd->add_option("--workers", simulate.workers, "threads; 0 = all cores");
  simulate_cmd->add_flag("--dump-spec", simulate.dump_spec,
                         "print the model as a JSON spec and exit");

  LimitArgs limit;
  auto* limit_cmd = app.add_subcommand("limit-check", "KS distance to a limit law across sizes");
  limit_cmd->add_option("--model", limit.model, "pills, pills-variant or cannibal")->required();
  limit_cmd->add_option("--scaling", limit.scaling,
                        "exponential, beta, rayleigh, sqrtbeta or normal")
      ->required();
  limit_cmd->add_option("--sizes", limit.sizes, "comma-separated growing sizes")->required();
  limit_cmd->add_option("--fixed", limit.fixed, "value of the parameter held fixed");
  limit_cmd->add_option("--format", limit.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*formula_cmd) return cmd_formula(formula, out);
    if (*simulate_cmd) return cmd_simulate(simulate, out);
    return cmd_limit_check(limit, out);
  } catch (const NonTerminatingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonTerminating;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NegativeCountError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace urns::cli
