#include "oblivcrn/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "oblivcrn/builtins.hpp"
#include "oblivcrn/compile_1d.hpp"
#include "oblivcrn/compile_spec.hpp"
#include "oblivcrn/compose.hpp"
#include "oblivcrn/crn_text.hpp"
#include "oblivcrn/dickson.hpp"
#include "oblivcrn/semilinear1d.hpp"
#include "oblivcrn/simulate.hpp"
#include "oblivcrn/spec.hpp"
#include "oblivcrn/spec_json.hpp"
#include "oblivcrn/verify.hpp"

namespace obliv {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kCapped = 3;

// Thrown for malformed inputs (exit 2), as opposed to well-formed inputs
// that fail a semantic check (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<long long> parse_int_list(const std::string& text,
                                      const std::string& what) {
  std::vector<long long> values;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(what + ": expected comma-separated integers, got \"" +
                       text + "\"");
    }
  }
  if (values.empty()) throw UsageError(what + ": empty list");
  return values;
}

// A single bound broadcasts to all axes.
std::vector<long long> window_for(const std::string& text, int dim) {
  std::vector<long long> w = parse_int_list(text, "--window");
  if (w.size() == 1) w.assign(dim, w[0]);
  if (static_cast<int>(w.size()) != dim)
    throw UsageError("--window: expected 1 or " + std::to_string(dim) +
                     " bounds");
  for (long long b : w)
    if (b < 0) throw UsageError("--window: bounds must be >= 0");
  return w;
}

Caps caps_from(const std::string& flag) {
  try {
    if (!flag.empty()) return Caps::from_string(flag);
    if (const char* env = std::getenv("OBLIVIOUS_CRN_CAPS"))
      if (*env) return Caps::from_string(env);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());  // malformed caps are a usage problem
  }
  return Caps{};
}

ObliviousSpec parse_spec_file(const std::string& path) {
  return parse_spec_json_text(read_file(path));
}

Semilinear1D parse_fn_file(const std::string& path) {
  return parse_sl1d_json_text(read_file(path));
}

Crn parse_crn_file(const std::string& path) {
  return parse_crn(read_file(path));
}

// Reference evaluator taken from whichever of --spec/--fn/--builtin is set.
struct Reference {
  int dim = 0;
  PointFn fn;
  std::optional<ObliviousSpec> spec;  // kept for default windows
};

Reference make_reference(const std::string& spec_path,
                         const std::string& fn_path,
                         const std::string& builtin_name) {
  const int sources = (!spec_path.empty()) + (!fn_path.empty()) +
                      (!builtin_name.empty());
  if (sources != 1)
    throw UsageError("exactly one of --spec, --fn, --builtin is required");
  Reference ref;
  if (!spec_path.empty()) {
    ObliviousSpec spec = parse_spec_file(spec_path);
    const auto free_axes = spec.free_axes();
    ref.dim = static_cast<int>(free_axes.size());
    ref.spec = spec;
    ref.fn = [spec, free_axes](const std::vector<long long>& x) {
      std::vector<long long> full(spec.dim(), 0);
      for (const auto& [axis, value] : spec.fixed()) full[axis - 1] = value;
      for (std::size_t i = 0; i < free_axes.size(); ++i)
        full[free_axes[i] - 1] = x[i];
      return spec_eval(spec, full);
    };
  } else if (!fn_path.empty()) {
    Semilinear1D f = parse_fn_file(fn_path);
    ref.dim = 1;
    ref.fn = [f](const std::vector<long long>& x) {
      return sl1d_eval(f, x[0]);
    };
  } else {
    try {
      const Builtin& b = builtin_function(builtin_name);
      ref.dim = b.dim;
      ref.fn = b.fn;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());  // a typo'd name is a usage problem
    }
  }
  return ref;
}

json verdict_json(const Crn& crn, const Verdict& v) {
  json steps = json::array();
  for (const TraceStep& step : v.witness)
    steps.push_back({{"reaction", print_reaction(crn, crn.reactions()[step.reaction])},
                     {"config", format_configuration(crn, step.config)}});
  return {{"status", to_string(v.status)},
          {"detail", v.detail},
          {"witness", steps},
          {"graph_size", v.explored}};
}

int exit_for(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return kOk;
    case VerdictStatus::Refuted: return kRefuted;
    case VerdictStatus::Capped: return kCapped;
  }
  return kUsage;
}

struct CompileOptions {
  std::string spec_path, out_path;
  bool as_json = false;
};

int run_compile(const CompileOptions& opt, std::ostream& out,
                std::ostream& err) {
  const ObliviousSpec spec = parse_spec_file(opt.spec_path);
  const SpecReport report = spec_validate(spec);
  if (!report.ok) {
    if (opt.as_json)
      out << json{{"status", "invalid"}, {"detail", report.detail}}.dump(2)
          << "\n";
    err << "spec validation failed: " << report.detail << "\n";
    return kRefuted;
  }
  const Crn crn = compile_spec(spec);
  const std::string text = print_crn(crn);
  if (opt.as_json) {
    out << json{{"status", "ok"},
                {"species", crn.species_count()},
                {"reactions", crn.reactions().size()},
                {"crn", text}}
               .dump(2)
        << "\n";
    if (!opt.out_path.empty()) write_output(opt.out_path, text, out);
    return kOk;
  }
  write_output(opt.out_path, text, out);
  return kOk;
}

struct Compile1dOptions {
  std::string fn_path, out_path;
  bool leaderless = false;
  long long bound = 0;
  bool as_json = false;
};

int run_compile_1d(const Compile1dOptions& opt, std::ostream& out,
                   std::ostream& err) {
  const Semilinear1D f = parse_fn_file(opt.fn_path);
  const Crn crn = opt.leaderless ? compile_1d_leaderless(f, opt.bound)
                                 : compile_1d(f);
  const std::string text = print_crn(crn);
  if (opt.as_json) {
    out << json{{"status", "ok"},
                {"species", crn.species_count()},
                {"reactions", crn.reactions().size()},
                {"crn", text}}
               .dump(2)
        << "\n";
    if (!opt.out_path.empty()) write_output(opt.out_path, text, out);
    return kOk;
  }
  write_output(opt.out_path, text, out);
  return kOk;
}

struct VerifyOptions {
  std::string crn_path, spec_path, fn_path, builtin_name;
  std::string window, caps;
  bool as_json = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream&) {
  const Crn crn = parse_crn_file(opt.crn_path);
  const Reference ref = make_reference(opt.spec_path, opt.fn_path,
                                       opt.builtin_name);
  if (ref.dim != crn.dimension())
    throw UsageError("network has " + std::to_string(crn.dimension()) +
                     " inputs but the reference function has " +
                     std::to_string(ref.dim));
  std::vector<long long> window;
  if (!opt.window.empty()) {
    window = window_for(opt.window, crn.dimension());
  } else if (ref.spec) {
    window.assign(crn.dimension(), default_validation_window(*ref.spec));
  } else {
    throw UsageError("--window is required with --fn/--builtin");
  }
  const Caps caps = caps_from(opt.caps);
  const WindowReport report = verify_window(crn, ref.fn, window, caps);

  if (opt.as_json) {
    json inputs = json::array();
    for (const WindowResult& r : report.results) {
      json one = verdict_json(crn, r.verdict);
      one["input"] = r.input;
      one["expected"] = r.expected;
      inputs.push_back(std::move(one));
    }
    out << json{{"status", to_string(report.status)},
                {"detail", report.detail},
                {"window", window},
                {"inputs", inputs}}
               .dump(2)
        << "\n";
  } else {
    // The detail line already names the status.
    out << report.detail << "\n";
    for (const WindowResult& r : report.results) {
      if (r.verdict.status == VerdictStatus::Refuted) {
        out << trace_text(crn, initial_configuration(crn, r.input),
                          r.verdict.witness);
        break;
      }
    }
  }
  return exit_for(report.status);
}

struct SimulateOptions {
  std::string crn_path, input, spec_path, fn_path, builtin_name, out_path;
  uint64_t seed = 1;
  int runs = 1;
  long long steps = 100000;
  bool csv = false;
  bool as_json = false;
};

int run_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream&) {
  const Crn crn = parse_crn_file(opt.crn_path);
  const std::vector<long long> input =
      parse_int_list(opt.input, "--input");
  if (static_cast<int>(input.size()) != crn.dimension())
    throw UsageError("--input: expected " + std::to_string(crn.dimension()) +
                     " counts");
  for (long long v : input)
    if (v < 0) throw UsageError("--input: counts must be >= 0");
  if (opt.runs < 1) throw UsageError("--runs must be >= 1");
  if (opt.steps < 1) throw UsageError("--steps must be >= 1");

  const bool has_ref = !opt.spec_path.empty() || !opt.fn_path.empty() ||
                       !opt.builtin_name.empty();
  std::optional<long long> expected;
  if (has_ref) {
    const Reference ref = make_reference(opt.spec_path, opt.fn_path,
                                         opt.builtin_name);
    if (ref.dim != crn.dimension())
      throw UsageError("reference function arity mismatch");
    expected = ref.fn(input);
  }

  if (opt.runs == 1) {
    const SimResult run = simulate(crn, input, opt.seed, opt.steps);
    if (opt.csv) write_output(opt.out_path, trace_csv(run), out);
    const long long y = output_count_of(crn, run.terminal);
    if (opt.as_json) {
      json report = {{"seed", run.seed},
                     {"steps", run.steps.size()},
                     {"converged", run.converged},
                     {"terminal", format_configuration(crn, run.terminal)},
                     {"output", y}};
      if (expected) report["expected"] = *expected;
      out << report.dump(2) << "\n";
    } else if (!opt.csv) {
      out << "seed " << run.seed << ": " << run.steps.size() << " steps, "
          << (run.converged ? "converged" : "step limit") << ", output " << y;
      if (expected) out << " (expected " << *expected << ")";
      out << "\n";
    }
    return kOk;
  }

  if (opt.csv) throw UsageError("--csv needs a single run");
  std::vector<uint64_t> seeds;
  for (int i = 0; i < opt.runs; ++i) seeds.push_back(opt.seed + i);
  if (expected) {
    const ConvergenceStats stats =
        convergence_stats(crn, input, *expected, seeds, opt.steps);
    if (opt.as_json) {
      out << json{{"runs", stats.runs},
                  {"correct", stats.correct},
                  {"fraction_correct", stats.fraction_correct},
                  {"mean_steps", stats.mean_steps},
                  {"max_steps", stats.max_steps_seen},
                  {"expected", *expected}}
                 .dump(2)
          << "\n";
    } else {
      out << stats.correct << "/" << stats.runs
          << " runs converged to the expected output " << *expected
          << " (mean " << stats.mean_steps << " steps, max "
          << stats.max_steps_seen << ")\n";
    }
    return kOk;
  }
  int converged = 0;
  long long max_steps_seen = 0;
  std::map<long long, int> outputs;
  for (uint64_t seed : seeds) {
    const SimResult run = simulate(crn, input, seed, opt.steps);
    converged += run.converged ? 1 : 0;
    max_steps_seen =
        std::max(max_steps_seen, static_cast<long long>(run.steps.size()));
    ++outputs[output_count_of(crn, run.terminal)];
  }
  if (opt.as_json) {
    json by_output = json::object();
    for (const auto& [y, count] : outputs)
      by_output[std::to_string(y)] = count;
    out << json{{"runs", opt.runs},
                {"converged", converged},
                {"max_steps", max_steps_seen},
                {"outputs", by_output}}
               .dump(2)
        << "\n";
  } else {
    out << converged << "/" << opt.runs << " runs converged; outputs:";
    for (const auto& [y, count] : outputs)
      out << " " << y << "x" << count;
    out << "\n";
  }
  return kOk;
}

struct CheckObliviousOptions {
  std::string crn_path, out_path;
  bool as_json = false;
};

int run_check_oblivious(const CheckObliviousOptions& opt, std::ostream& out,
                        std::ostream&) {
  const Crn crn = parse_crn_file(opt.crn_path);
  const bool oblivious = is_output_oblivious(crn);
  const bool monotonic = is_output_monotonic(crn);
  std::string transformed;
  if (monotonic) transformed = print_crn(monotonic_to_oblivious(crn));
  if (opt.as_json) {
    json report = {{"output_oblivious", oblivious},
                   {"output_monotonic", monotonic}};
    if (monotonic) report["oblivious_form"] = transformed;
    out << report.dump(2) << "\n";
  } else {
    out << (oblivious ? "output-oblivious"
                      : (monotonic ? "output-monotonic but not oblivious"
                                   : "not output-monotonic"))
        << "\n";
  }
  if (!opt.out_path.empty()) {
    if (!monotonic)
      throw UsageError("no oblivious form: network is not output-monotonic");
    write_output(opt.out_path, transformed, out);
  }
  return oblivious ? kOk : kRefuted;
}

struct Extract1dOptions {
  std::string fn_path;
  bool as_json = false;
};

int run_extract_1d(const Extract1dOptions& opt, std::ostream& out,
                   std::ostream&) {
  const Semilinear1D f = parse_fn_file(opt.fn_path);
  Eventual1DForm e = [&] {
    try {
      return extract_eventual_1d(f);
    } catch (const std::domain_error& ex) {
      throw std::invalid_argument(ex.what());
    }
  }();
  if (opt.as_json) {
    out << json{{"n", e.n}, {"p", e.p}, {"prefix", e.prefix},
                {"deltas", e.deltas}}
               .dump(2)
        << "\n";
  } else {
    out << "n = " << e.n << ", p = " << e.p << "\nprefix:";
    for (long long v : e.prefix) out << " " << v;
    out << "\ndeltas:";
    for (long long v : e.deltas) out << " " << v;
    out << "\n";
  }
  return kOk;
}

struct DicksonOptions {
  std::string spec_path, builtin_name;
  long long bound = 5;
  bool as_json = false;
};

int run_dickson(const DicksonOptions& opt, std::ostream& out, std::ostream&) {
  const Reference ref = make_reference(opt.spec_path, "", opt.builtin_name);
  const auto witness = dickson_search(ref.fn, ref.dim, opt.bound);
  if (opt.as_json) {
    if (witness) {
      out << json{{"status", "witness"},
                  {"base", witness->base},
                  {"direction", witness->direction},
                  {"probe_direction", witness->delta_direction},
                  {"family_size", witness->family_size},
                  {"a1", witness->a1},
                  {"a2", witness->a2},
                  {"delta", witness->delta},
                  {"lhs", witness->lhs},
                  {"rhs", witness->rhs}}
                 .dump(2)
          << "\n";
    } else {
      out << json{{"status", "none"}, {"bound", opt.bound}}.dump(2) << "\n";
    }
  } else if (witness) {
    out << witness_text(*witness) << "\n";
  } else {
    out << "no witness up to bound " << opt.bound
        << ": differences are family-monotone on the box\n";
  }
  return witness ? kRefuted : kOk;
}

struct ScalingLimitOptions {
  std::string spec_path;
  bool as_json = false;
};

int run_scaling_limit(const ScalingLimitOptions& opt, std::ostream& out,
                      std::ostream&) {
  const ObliviousSpec spec = parse_spec_file(opt.spec_path);
  const auto gradients = scaling_limit(spec);
  if (opt.as_json) {
    json list = json::array();
    for (const auto& grad : gradients) {
      json vec = json::array();
      for (const Rational& r : grad) vec.push_back(r.str());
      list.push_back(std::move(vec));
    }
    out << json{{"gradients", list}}.dump(2) << "\n";
  } else {
    for (const auto& grad : gradients) {
      out << "(";
      for (std::size_t i = 0; i < grad.size(); ++i) {
        if (i) out << ", ";
        out << grad[i].str();
      }
      out << ")\n";
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"compile, verify and simulate output-oblivious reaction "
               "networks"};
  app.require_subcommand(1);

  CompileOptions compile_opt;
  auto* compile = app.add_subcommand(
      "compile", "compile a function spec into a reaction network");
  compile->add_option("--spec", compile_opt.spec_path, "spec JSON file")
      ->required();
  compile->add_option("-o,--output", compile_opt.out_path, "output file");
  compile->add_flag("--json", compile_opt.as_json, "machine-readable report");

  Compile1dOptions c1_opt;
  auto* compile_1d_cmd = app.add_subcommand(
      "compile-1d", "compile a one-dimensional function (with leader)");
  compile_1d_cmd->add_option("--fn", c1_opt.fn_path, "function JSON file")
      ->required();
  compile_1d_cmd->add_option("-o,--output", c1_opt.out_path, "output file");
  compile_1d_cmd->add_flag("--json", c1_opt.as_json, "machine-readable report");

  Compile1dOptions cl_opt;
  cl_opt.leaderless = true;
  auto* leaderless_cmd = app.add_subcommand(
      "compile-1d-leaderless",
      "compile a superadditive one-dimensional function without a leader");
  leaderless_cmd->add_option("--fn", cl_opt.fn_path, "function JSON file")
      ->required();
  leaderless_cmd->add_option("--bound", cl_opt.bound,
                             "superadditivity check horizon");
  leaderless_cmd->add_option("-o,--output", cl_opt.out_path, "output file");
  leaderless_cmd->add_flag("--json", cl_opt.as_json,
                           "machine-readable report");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "decide stable computation on a window of inputs");
  verify->add_option("--crn", verify_opt.crn_path, "network text file")
      ->required();
  verify->add_option("--spec", verify_opt.spec_path, "spec JSON file");
  verify->add_option("--fn", verify_opt.fn_path, "1D function JSON file");
  verify->add_option("--builtin", verify_opt.builtin_name,
                     "builtin reference function");
  verify->add_option("--window", verify_opt.window,
                     "per-axis bounds, e.g. 4,4 (one value broadcasts)");
  verify->add_option("--caps", verify_opt.caps,
                     "exploration caps \"configs,percount\"");
  verify->add_flag("--json", verify_opt.as_json, "machine-readable report");

  SimulateOptions sim_opt;
  auto* sim = app.add_subcommand("simulate",
                                 "run the uniform random scheduler");
  sim->add_option("--crn", sim_opt.crn_path, "network text file")->required();
  sim->add_option("--input", sim_opt.input, "input counts, e.g. 3,5")
      ->required();
  sim->add_option("--seed", sim_opt.seed, "first seed");
  sim->add_option("--runs", sim_opt.runs, "number of seeds");
  sim->add_option("--steps", sim_opt.steps, "step budget per run");
  sim->add_option("--spec", sim_opt.spec_path, "spec JSON for expectations");
  sim->add_option("--fn", sim_opt.fn_path, "1D function JSON for expectations");
  sim->add_option("--builtin", sim_opt.builtin_name,
                  "builtin reference function");
  sim->add_option("-o,--output", sim_opt.out_path, "output file for --csv");
  sim->add_flag("--csv", sim_opt.csv, "emit step,reaction_index,Y_count CSV");
  sim->add_flag("--json", sim_opt.as_json, "machine-readable report");

  CheckObliviousOptions check_opt;
  auto* check = app.add_subcommand(
      "check-oblivious", "classify a network and derive its oblivious form");
  check->add_option("--crn", check_opt.crn_path, "network text file")
      ->required();
  check->add_option("-o,--output", check_opt.out_path,
                    "write the oblivious form here");
  check->add_flag("--json", check_opt.as_json, "machine-readable report");

  Extract1dOptions ex_opt;
  auto* extract = app.add_subcommand(
      "extract-1d", "threshold/period/increment form of a 1D function");
  extract->add_option("--fn", ex_opt.fn_path, "function JSON file")
      ->required();
  extract->add_flag("--json", ex_opt.as_json, "machine-readable report");

  DicksonOptions dk_opt;
  auto* dickson = app.add_subcommand(
      "dickson", "search for growing-difference witness families");
  dickson->add_option("--builtin", dk_opt.builtin_name,
                      "builtin function to probe");
  dickson->add_option("--spec", dk_opt.spec_path, "spec JSON to probe");
  dickson->add_option("--bound", dk_opt.bound, "search bound (default 5)");
  dickson->add_flag("--json", dk_opt.as_json, "machine-readable report");

  ScalingLimitOptions sl_opt;
  auto* scaling = app.add_subcommand(
      "scaling-limit", "gradients of the spec's scaling limit");
  scaling->add_option("--spec", sl_opt.spec_path, "spec JSON file")
      ->required();
  scaling->add_flag("--json", sl_opt.as_json, "machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (compile->parsed()) return run_compile(compile_opt, out, err);
    if (compile_1d_cmd->parsed()) return run_compile_1d(c1_opt, out, err);
    if (leaderless_cmd->parsed()) return run_compile_1d(cl_opt, out, err);
    if (verify->parsed()) return run_verify(verify_opt, out, err);
    if (sim->parsed()) return run_simulate(sim_opt, out, err);
    if (check->parsed()) return run_check_oblivious(check_opt, out, err);
    if (extract->parsed()) return run_extract_1d(ex_opt, out, err);
    if (dickson->parsed()) return run_dickson(dk_opt, out, err);
    if (scaling->parsed()) return run_scaling_limit(sl_opt, out, err);
    err << "error: no verb\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecJsonError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Well-formed input that fails a semantic gate: witness on stderr.
    err << e.what() << "\n";
    return kRefuted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace obliv
