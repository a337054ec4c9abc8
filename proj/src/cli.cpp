#include "imaginarity/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "imaginarity/descriptor.hpp"
#include "imaginarity/errors.hpp"
#include "imaginarity/harness.hpp"
#include "imaginarity/monotones.hpp"
#include "imaginarity/states.hpp"

namespace imag::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string printf_string(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) throw IoError("cannot write " + path.string());
}

DensityMatrix load_state(const std::string& arg) {
  return parse_state(!arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg);
}

const std::vector<std::string> kMeasures{"mh", "me", "mr", "mt", "maz", "lin"};

struct Params {
  double alpha = 0.5;
  double beta = 0.5;
  std::optional<double> z;
  std::optional<double> u;
  OptimizerConfig opt;
  bool numeric = false;
};

double evaluate(const std::string& measure, const DensityMatrix& rho, const Params& p, MEResult* detail = nullptr) {
  if (measure == "mh") return mh(rho, {p.alpha, p.beta});
  if (measure == "me") {
    MEResult r = p.numeric ? me_numeric(rho, {p.alpha, p.beta}, p.opt) : me(rho, {p.alpha, p.beta}, p.opt);
    const double v = r.value;
    if (detail) *detail = std::move(r);
    return v;
  }
  if (measure == "mr") return m_relative_entropy(rho);
  if (measure == "mt") return m_tsallis(rho, p.u.value_or(p.alpha));
  if (measure == "maz") {
    if (!p.z) throw ParseError("measure maz requires --z");
    return m_alpha_z(rho, {p.alpha, *p.z});
  }
  if (measure == "lin") return 1.0 - purity(rho);
  throw ParseError("unknown measure " + measure);
}

void add_param_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--alpha", p.alpha, "alpha in (0, 1)")->capture_default_str();
  cmd->add_option("--beta", p.beta, "beta in (0, 1]")->capture_default_str();
  cmd->add_option("--z", p.z, "z for maz, max(alpha, 1 - alpha) <= z < 1");
  cmd->add_option("--u", p.u, "u for mt (defaults to alpha)");
  cmd->add_option("--seed", p.opt.rng_seed, "optimizer seed")->capture_default_str();
  cmd->add_option("--restarts", p.opt.restarts, "optimizer restarts")->capture_default_str();
  cmd->add_option("--grid", p.opt.grid_resolution, "candidates screened per random restart")->capture_default_str();
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string measure;
  std::string state;
  Params params;
  bool detail = false;
  std::string method;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  Params p = a.params;
  if (!a.method.empty()) {
    if (a.measure != "me" || a.method != "numeric") throw ParseError("--method numeric applies to --measure me only");
    p.numeric = true;
  }
  const DensityMatrix rho = load_state(a.state);
  std::optional<MEResult> detail;
  MEResult scratch{0.0, rho, MeMethod::spectral, 0, 1.0, true, {}};
  const double v = evaluate(a.measure, rho, p, &scratch);
  if (a.measure == "me") detail = std::move(scratch);
  out << format_scalar(v) << "\n";
  if (a.detail) {
    nlohmann::ordered_json j{{"measure", a.measure}, {"value", v}};
    if (detail) {
      j["method"] = to_string(detail->method);
      j["achieved_trace"] = detail->achieved_trace;
      j["iterations"] = detail->iterations;
      j["converged"] = detail->converged;
      j["minimizer"] = nlohmann::ordered_json(to_dense_descriptor(detail->minimizer));
      j["diagnostics"] = detail->diagnostics;
    }
    out << j.dump() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct Axis {
  std::string name;
  std::vector<double> values;
};

Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
  if (parts.size() != 4) throw ParseError("axis must be name:start:stop:count, got " + spec);
  static const std::vector<std::string> names{"alpha", "beta", "k", "F", "z", "u"};
  if (std::find(names.begin(), names.end(), parts[0]) == names.end()) {
    throw ParseError("unknown axis " + parts[0] + " (expected alpha, beta, k, F, z or u)");
  }
  double start = 0.0, stop = 0.0;
  long count = 0;
  try {
    std::size_t used = 0;
    start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("start");
    stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("stop");
    count = std::stol(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("count");
  } catch (const std::logic_error&) {
    throw ParseError("malformed axis " + spec);
  }
  if (count < 2) throw ParseError("axis count must be >= 2");
  const std::string& n = parts[0];
  auto inside = [&](double v) {
    if (n == "alpha" || n == "z" || n == "u") return v > 0.0 && v < 1.0;
    if (n == "beta") return v > 0.0 && v <= 1.0;
    return v >= 0.0 && v <= 1.0;
  };
  if (!inside(start) || !inside(stop)) throw ParamOutOfRange("axis " + spec + " leaves the legal range of " + n);
  Axis axis{n, {}};
  for (long i = 0; i < count; ++i) axis.values.push_back(start + (stop - start) * static_cast<double>(i) / (count - 1));
  return axis;
}

struct SweepArgs {
  std::string measure;
  std::string state;
  std::vector<std::string> axes;
  Params params;
  std::string out_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.axes.empty() || a.axes.size() > 2) throw ParseError("sweep takes one or two --axis options");
  std::vector<Axis> axes;
  for (const auto& s : a.axes) axes.push_back(parse_axis(s));
  if (axes.size() == 2 && axes[0].name == axes[1].name) throw ParseError("sweep axes must differ");
  const bool state_axis = std::any_of(axes.begin(), axes.end(), [](const Axis& x) { return x.name == "k" || x.name == "F"; });
  if (axes.size() == 2 && (axes[0].name == "k" || axes[0].name == "F") && (axes[1].name == "k" || axes[1].name == "F")) {
    throw ParseError("axes k and F both select the state");
  }
  if (state_axis && !a.state.empty()) throw ParseError("--state conflicts with a k or F axis");
  if (!state_axis && a.state.empty()) throw ParseError("sweep requires --state unless an axis is k or F");
  std::optional<DensityMatrix> fixed;
  if (!state_axis) fixed = load_state(a.state);

  std::string csv;
  for (const auto& x : axes) csv += x.name + ",";
  csv += "value\n";
  const std::size_t n0 = axes[0].values.size(), n1 = axes.size() == 2 ? axes[1].values.size() : 1;
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Params p = a.params;
      std::optional<DensityMatrix> rho = fixed;
      for (std::size_t ax = 0; ax < axes.size(); ++ax) {
        const double v = axes[ax].values[ax == 0 ? i : j];
        const std::string& n = axes[ax].name;
        if (n == "alpha") p.alpha = v;
        if (n == "beta") p.beta = v;
        if (n == "z") p.z = v;
        if (n == "u") p.u = v;
        if (n == "k") rho = werner(v);
        if (n == "F") rho = isotropic(v);
        csv += format_csv(v) + ",";
      }
      csv += format_csv(evaluate(a.measure, *rho, p)) + "\n";
    }
  if (a.out_path.empty() || a.out_path == "-") {
    out << csv;
  } else {
    write_file(a.out_path, csv);
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 42;
  long trials = 0;
  std::optional<double> tol;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteConfig cfg;
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  cfg.record_timing = !a.no_timing;
  std::vector<std::string> ids;
  if (a.suite == "all") {
    for (const auto& info : check_registry()) ids.push_back(info.id);
  } else {
    std::stringstream ss(a.suite);
    for (std::string id; std::getline(ss, id, ',');) {
      const auto& reg = check_registry();
      if (std::none_of(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.id == id; })) {
        throw ParseError("unknown check id: " + id);
      }
      ids.push_back(id);
    }
  }
  if (a.tol)
    for (const auto& id : ids) cfg.tolerance_overrides[id] = *a.tol;
  bool all_pass = true;
  for (const auto& id : ids) {
    const CheckReport r = run_check(id, cfg);
    all_pass = all_pass && r.passed();
    out << to_json_line(r) << "\n" << std::flush;
  }
  return all_pass ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- figures

std::string surface_csv(const BlochVector& v, bool use_me) {
  constexpr int kN = 60;
  std::string csv = "alpha,beta,value\n";
  const DensityMatrix rho = bloch_to_density(v);
  for (int i = 0; i < kN; ++i) {
    const double alpha = 0.01 + 0.98 * i / (kN - 1);
    for (int j = 0; j < kN; ++j) {
      const double beta = 0.01 + 0.99 * j / (kN - 1);
      const MonotoneParams p{alpha, beta};
      const double value = use_me ? me_qubit_closed_form(v, p).value : mh(rho, p);
      csv += format_csv(alpha) + "," + format_csv(beta) + "," + format_csv(value) + "\n";
    }
  }
  return csv;
}

}  // namespace

std::string format_scalar(double v) {
  if (v == 0.0) return "0";
  return printf_string("%#.12g", v);
}

std::string format_csv(double v) {
  if (v == 0.0) return "0";
  return printf_string("%.12g", v);
}

std::vector<CsvFile> figure_data(const std::string& which) {
  if (which == "1a" || which == "1b") {
    const BlochVector v = which == "1a" ? BlochVector{0.0, 1.0, 0.0} : BlochVector{0.5, 0.25, 0.5};
    return {{"fig" + which + "_mh.csv", surface_csv(v, false)}, {"fig" + which + "_me.csv", surface_csv(v, true)}};
  }
  if (which == "2") {
    struct Series {
      std::string name;
      MonotoneParams p;
    };
    const std::vector<Series> series{{"mh_0.5_0.5", {0.5, 0.5}}, {"mh_0.25_0.666667", {0.25, 2.0 / 3.0}}};
    std::string csv = "k,value,series\n";
    for (const auto& s : series)
      for (int i = 0; i <= 200; ++i) {
        const double k = i / 200.0;
        csv += format_csv(k) + "," + format_csv(mh(werner(k), s.p)) + "," + s.name + "\n";
      }
    for (int i = 0; i <= 200; ++i) {
      const double k = i / 200.0;
      csv += format_csv(k) + "," + format_csv(werner_linear_entropy(k)) + ",L\n";
    }
    return {{"fig2.csv", csv}};
  }
  throw ParseError("unknown figure " + which + " (expected 1a, 1b or 2)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Imaginarity measures from the unified (alpha, beta)-relative entropy", "imagtool"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one measure on one state");
  eval_cmd->add_option("--measure", eval.measure, "mh | me | mr | mt | maz | lin")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  eval_cmd->add_option("--state", eval.state, "state JSON, or @file")->required();
  eval_cmd->add_flag("--detail", eval.detail, "print a JSON detail line (minimizer for me)");
  eval_cmd->add_option("--method", eval.method, "numeric: force the multi-start optimizer for me")
      ->check(CLI::IsMember({"numeric"}));
  add_param_flags(eval_cmd, eval.params);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a measure over one or two parameter axes (CSV)");
  sweep_cmd->add_option("--measure", sweep.measure, "mh | me | mr | mt | maz | lin")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  sweep_cmd->add_option("--state", sweep.state, "state JSON, or @file (omit with a k or F axis)");
  sweep_cmd->add_option("--axis", sweep.axes, "name:start:stop:count, name in alpha beta k F z u")->required();
  sweep_cmd->add_option("--out", sweep.out_path, "output CSV path (default stdout)");
  add_param_flags(sweep_cmd, sweep.params);

  std::string figure_id, outdir = ".";
  auto* figure_cmd = app.add_subcommand("figure", "write figure CSV data");
  figure_cmd->add_option("which", figure_id, "1a | 1b | 2")->required()->check(CLI::IsMember({"1a", "1b", "2"}));
  figure_cmd->add_option("--outdir", outdir, "output directory")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the property checks, one JSON report per line");
  verify_cmd->add_option("--suite", verify.suite, "all, or comma-separated check ids")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "suite seed")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "trials per check (0 = check default)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol", verify.tol, "tolerance override for the selected checks");
  verify_cmd->add_flag("--no-timing", verify.no_timing, "report elapsed_ms as 0 for reproducible output");
  auto* list_cmd = app.add_subcommand("list", "list registered check ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (list_cmd->parsed()) {
      for (const auto& info : check_registry()) out << info.id << "\t" << to_string(info.kind) << "\t" << info.statement << "\n";
      return kOk;
    }
    if (figure_cmd->parsed()) {
      std::filesystem::create_directories(outdir);
      for (const auto& f : figure_data(figure_id)) {
        const auto path = std::filesystem::path(outdir) / f.name;
        write_file(path, f.content);
        out << path.string() << "\n";
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kParseError;
}

}  // namespace imag::cli
