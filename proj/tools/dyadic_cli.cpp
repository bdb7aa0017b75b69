#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyadic/dense_operator.hpp"
#include "dyadic/error.hpp"
#include "dyadic/experiments.hpp"
#include "dyadic/hilbert.hpp"
#include "dyadic/io.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/paraproduct.hpp"
#include "dyadic/projection.hpp"
#include "dyadic/shifts.hpp"

using namespace dyadic;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitUsage = 64;

const std::vector<std::string> kSubcommands{"haar",    "bmo",   "lmo",        "paraproduct", "opnorm",
                                            "sigma",   "commutator", "hilbert", "experiment"};

struct Options {
  std::string input;
  std::string output;
  std::string symbol;
  std::string method;
  std::string depth;
  std::string k;
  std::string beta;
  std::string x;
  std::string signature = "pi";
  std::string op;
  std::string experiment;
  std::optional<std::uint64_t> seed;
  int axis = 1;
  int trials = 20;
  int samples = 2000;
  double tolerance = 1e-10;
  int max_iterations = 10000;
  bool tolerance_given = false;
  bool forward = false;
  bool inverse = false;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string("cannot parse ") + what + ": " + text);
    }
  }
  if (out.empty()) throw ValidationError(std::string("empty ") + what);
  return out;
}

std::array<int, 2> parse_pair(const std::string& text, const char* what) {
  const std::vector<double> v = parse_list(text, what);
  if (v.size() > 2) throw ValidationError(std::string(what) + " takes one or two integers");
  for (double x : v) {
    if (x != std::floor(x)) throw ValidationError(std::string(what) + " must be integer");
  }
  const int a = static_cast<int>(v[0]);
  return {a, v.size() == 2 ? static_cast<int>(v[1]) : a};
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw ValidationError(std::string("missing ") + flag);
}

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw ValidationError("--seed is required for stochastic subcommands");
  return *o.seed;
}

json config_echo(const std::string& sub, const Options& o) {
  json c{{"subcommand", sub}};
  const auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) c[key] = v;
  };
  put("input", o.input);
  put("symbol", o.symbol);
  put("method", o.method);
  put("depth", o.depth);
  put("k", o.k);
  put("beta", o.beta);
  put("x", o.x);
  put("operator", o.op);
  if (sub == "paraproduct" || o.op == "paraproduct") c["signature"] = o.signature;
  if (o.seed) c["seed"] = *o.seed;
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    io::write_atomic(o.output, text);
  }
}

void emit(const Options& o, const json& j) { emit(o, io::dump(j)); }

json cells_of(const CellMask& m) {
  json cells = json::array();
  for (int i = 0; i < m.depth.cells_s(); ++i) {
    for (int j = 0; j < m.depth.cells_t(); ++j) {
      if (m.contains(i, j)) cells.push_back({i, j});
    }
  }
  return cells;
}

json interval_json(const DyadicInterval& i) { return {i.level, i.index}; }

HaarSpectrum2D load_spectrum_of_function(const std::string& path) { return haar_forward_2d(io::load_function(path)); }

void run_haar(const Options& o) {
  require(o.input, "--input");
  if (o.forward == o.inverse) throw ValidationError("exactly one of --forward and --inverse is required");
  if (o.forward) {
    emit(o, io::spectrum_to_json(haar_forward_2d(io::load_function(o.input))));
  } else {
    emit(o, io::function_to_json(haar_inverse_2d(io::load_spectrum(o.input))));
  }
}

void run_bmo(const Options& o) {
  require(o.input, "--input");
  const HaarSpectrum2D c = load_spectrum_of_function(o.input);
  const std::string method = o.method.empty() ? "exact" : o.method;
  json out{{"config", config_echo("bmo", o)}};
  if (method == "exact") {
    const BmoResult r = bmo_d_norm_sq(c);
    out["norm_sq"] = r.norm_sq;
    out["omega_cells"] = cells_of(r.omega);
    out["iterations"] = r.iterations;
  } else if (method == "brute") {
    out["norm_sq"] = bmo_d_norm_sq_bruteforce(c);
  } else if (method == "rect") {
    const RectBmoResult r = bmo_rect_norm_sq(c);
    out["norm_sq"] = r.norm_sq;
    out["rect"] = r.rect ? json{{"s", interval_json(r.rect->s)}, {"t", interval_json(r.rect->t)}} : json(nullptr);
  } else {
    throw ValidationError("bmo --method must be exact, brute or rect");
  }
  emit(o, out);
}

void run_lmo(const Options& o) {
  require(o.input, "--input");
  const HaarSpectrum2D c = load_spectrum_of_function(o.input);
  const std::string method = o.method.empty() ? "def" : o.method;
  double value = 0.0;
  if (method == "def") {
    value = lmo_d_norm(c);
  } else if (method == "char") {
    value = lmo_char_norm(c);
  } else if (method == "dir") {
    value = lmo_directional_norm(c, o.axis);
  } else if (method == "beta") {
    require(o.beta, "--beta");
    value = lmo_beta_char_norm(c, parse_pair(o.beta, "--beta"));
  } else {
    throw ValidationError("lmo --method must be def, char, dir or beta");
  }
  emit(o, json{{"value", value}, {"config", config_echo("lmo", o)}});
}

void run_paraproduct(const Options& o) {
  require(o.symbol, "--symbol");
  require(o.input, "--input");
  const GridFunction2D out =
      paraproduct(parse_signature(o.signature), load_spectrum_of_function(o.symbol), io::load_function(o.input));
  json j = io::function_to_json(out);
  j["config"] = config_echo("paraproduct", o);
  emit(o, j);
}

void run_opnorm(const Options& o) {
  if (!(o.tolerance >= 0.0)) throw ValidationError("--tolerance must be non-negative");
  if (o.max_iterations < 1) throw ValidationError("--max-iterations must be positive");
  OperatorNormOptions opts;
  opts.tolerance = o.tolerance;
  opts.max_iterations = o.max_iterations;
  if (o.method == "power") {
    opts.svd_limit = 0;
  } else if (!o.method.empty() && o.method != "auto") {
    throw ValidationError("opnorm --method must be auto or power");
  }
  std::optional<DenseOperator> op;
  if (o.op == "paraproduct") {
    require(o.symbol, "--symbol");
    const HaarSpectrum2D phi = load_spectrum_of_function(o.symbol);
    const Signature sig = parse_signature(o.signature);
    op = assemble_grid_map([&](const GridFunction2D& f) { return paraproduct(sig, phi, f); }, phi.depth());
  } else if (o.op == "truncated-paraproduct") {
    require(o.symbol, "--symbol");
    require(o.k, "--k");
    const HaarSpectrum2D b = load_spectrum_of_function(o.symbol).hh_part();
    const auto k = parse_pair(o.k, "--k");
    op = assemble(
        [&](const HaarSpectrum2D& c) {
          return haar_forward_2d(
              paraproduct(Signature::pi(), b, haar_inverse_2d(conditional_expectation(c, {k[0], k[1]}))));
        },
        b.depth());
  } else if (o.op == "commutator") {
    require(o.symbol, "--symbol");
    const GridFunction2D phi = io::load_function(o.symbol);
    const AmbientEmbedding amb(phi.depth());
    const GridFunction2D phi_amb = amb.embed(phi);
    const DenseOperator m =
        assemble_grid_map([&](const GridFunction2D& g) { return pointwise_product(phi_amb, g); }, amb.ambient);
    op = commutator(shift_operator(amb.ambient, 1), commutator(shift_operator(amb.ambient, 2), m));
  } else if (o.op == "shift") {
    require(o.depth, "--depth");
    const auto d = parse_pair(o.depth, "--depth");
    op = shift_operator({d[0], d[1]}, o.axis);
  } else {
    throw ValidationError("opnorm --operator must be paraproduct, truncated-paraproduct, commutator or shift");
  }
  emit(o, json{{"norm", operator_norm(*op, opts)}, {"dimension", op->dimension()}, {"config", config_echo("opnorm", o)}});
}

void run_sigma(const Options& o) {
  require(o.input, "--input");
  require(o.k, "--k");
  const HaarSpectrum2D b = load_spectrum_of_function(o.input);
  const auto k = parse_pair(o.k, "--k");
  const std::string method = o.method.empty() ? "both" : o.method;
  HaarSpectrum2D s(b.depth());
  if (method == "both") {
    s = sigma_k(b, {k[0], k[1]});
  } else if (method == "first") {
    s = sigma1_k(b, k[0]);
  } else {
    throw ValidationError("sigma --method must be both or first");
  }
  json j = io::function_to_json(haar_inverse_2d(s));
  j["config"] = config_echo("sigma", o);
  emit(o, j);
}

void run_commutator(const Options& o) {
  require(o.symbol, "--symbol");
  require(o.input, "--input");
  const GridFunction2D phi = io::load_function(o.symbol);
  const GridFunction2D b = io::load_function(o.input);
  const std::string method = o.method.empty() ? "dyadic" : o.method;
  if (method == "dyadic") {
    const GridFunction2D image = iterated_commutator_apply(phi, b);
    json j = io::function_to_json(image);
    j["bmo_norm_sq"] = bmo_d_norm_sq(haar_forward_2d(image)).norm_sq;
    j["config"] = config_echo("commutator", o);
    emit(o, j);
  } else if (method == "report") {
    json rows = json::array();
    for (const PartNormRow& r : commutator_part_norm_report(phi, b)) {
      rows.push_back({{"part", r.part},
                      {"commutator_norm", r.commutator_norm},
                      {"controlling_norm", r.controlling_norm},
                      {"controlling_value", r.controlling_value},
                      {"ratio", r.ratio}});
    }
    emit(o, json{{"parts", rows}, {"config", config_echo("commutator", o)}});
  } else {
    throw ValidationError("commutator --method must be dyadic or report");
  }
}

StepFunction1D load_step(const std::string& path) {
  if (path.empty()) return StepFunction1D::indicator(0.0, 1.0);
  const json j = io::read_json(path);
  if (!j.contains("breakpoints") || !j.contains("values")) {
    throw ValidationError("step function file needs \"breakpoints\" and \"values\"");
  }
  return {j["breakpoints"].get<std::vector<double>>(), j["values"].get<std::vector<double>>()};
}

void run_hilbert(const Options& o) {
  require(o.x, "--x");
  const StepFunction1D f = load_step(o.input);
  const std::vector<double> xs = parse_list(o.x, "--x");
  const std::string method = o.method.empty() ? "mc" : o.method;
  json points = json::array();
  if (method == "mc") {
    for (const McEstimate& e : mc_hilbert(f, xs, o.samples, require_seed(o))) {
      points.push_back({{"x", e.x}, {"estimate", e.estimate}, {"stderr", e.stderr_}});
    }
  } else if (method == "oracle") {
    for (double x : xs) points.push_back({{"x", x}, {"value", analytic_hilbert_step(f, x)}});
  } else {
    throw ValidationError("hilbert --method must be mc or oracle");
  }
  emit(o, json{{"points", points}, {"config", config_echo("hilbert", o)}});
}

void run_experiment(const Options& o) {
  experiments::ExperimentConfig cfg;
  cfg.seed = require_seed(o);
  cfg.trials = o.trials;
  if (!o.depth.empty()) {
    const auto d = parse_pair(o.depth, "--depth");
    if (d[0] != d[1]) throw ValidationError("experiments run on square depths");
    cfg.depth = d[0];
  }
  if (o.tolerance_given) cfg.tolerance = o.tolerance;
  cfg.samples = o.samples;
  emit(o, experiments::run_experiment(o.experiment, cfg).to_string());
}

void usage(std::ostream& out) {
  out << "usage: dyadic_cli <subcommand> [options]\nsubcommands:";
  for (const auto& s : kSubcommands) out << ' ' << s;
  out << "\nrun 'dyadic_cli <subcommand> --help' for the options of one subcommand\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage(std::cerr);
    return kExitUsage;
  }
  const std::string first = argv[1];
  if (first == "--help" || first == "-h") {
    usage(std::cout);
    return 0;
  }
  if (std::find(kSubcommands.begin(), kSubcommands.end(), first) == kSubcommands.end()) {
    std::cerr << "unknown subcommand: " << first << "\n";
    usage(std::cerr);
    return kExitUsage;
  }

  CLI::App app{"dyadic product-space toolkit"};
  app.require_subcommand(1);
  Options o;
  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "input JSON file");
    sub->add_option("--output", o.output, "output path (stdout if omitted)");
  };

  CLI::App* haar = app.add_subcommand("haar", "forward or inverse 2D Haar transform");
  add_io(haar);
  haar->add_flag("--forward", o.forward);
  haar->add_flag("--inverse", o.inverse);

  CLI::App* bmo = app.add_subcommand("bmo", "product dyadic BMO norm");
  add_io(bmo);
  bmo->add_option("--method", o.method, "exact | brute | rect");

  CLI::App* lmo = app.add_subcommand("lmo", "logarithmic mean oscillation norms");
  add_io(lmo);
  lmo->add_option("--method", o.method, "def | char | dir | beta");
  lmo->add_option("--axis", o.axis);
  lmo->add_option("--beta", o.beta, "b1,b2");

  CLI::App* para = app.add_subcommand("paraproduct", "apply a paraproduct");
  add_io(para);
  para->add_option("--symbol", o.symbol, "symbol function file");
  para->add_option("--signature", o.signature, "pi | delta | 01 | 10");

  CLI::App* opnorm = app.add_subcommand("opnorm", "operator norm of a named operator");
  opnorm->add_option("--output", o.output);
  opnorm->add_option("--operator", o.op, "paraproduct | truncated-paraproduct | commutator | shift")->required();
  opnorm->add_option("--symbol", o.symbol);
  opnorm->add_option("--signature", o.signature);
  opnorm->add_option("--k", o.k, "k1,k2");
  opnorm->add_option("--depth", o.depth, "J or J1,J2");
  opnorm->add_option("--axis", o.axis);
  opnorm->add_option("--tolerance", o.tolerance);
  opnorm->add_option("--method", o.method, "auto | power");
  opnorm->add_option("--max-iterations", o.max_iterations, "power iteration cap");

  CLI::App* sigma = app.add_subcommand("sigma", "boundary-generation rearrangement of a symbol");
  add_io(sigma);
  sigma->add_option("--k", o.k, "k1,k2 (or k for --method first)");
  sigma->add_option("--method", o.method, "both | first");

  CLI::App* comm = app.add_subcommand("commutator", "iterated shift commutator");
  add_io(comm);
  comm->add_option("--symbol", o.symbol, "multiplier function file");
  comm->add_option("--method", o.method, "dyadic | report");

  CLI::App* hil = app.add_subcommand("hilbert", "shift-average Hilbert transform");
  add_io(hil);
  hil->add_option("--method", o.method, "mc | oracle");
  hil->add_option("--x", o.x, "comma-separated evaluation points");
  hil->add_option("--samples", o.samples);
  hil->add_option("--seed", o.seed);

  CLI::App* exp = app.add_subcommand("experiment", "deterministic experiment tables (CSV)");
  exp->add_option("name", o.experiment)->required()->check(CLI::IsMember(experiments::experiment_names()));
  exp->add_option("--output", o.output);
  exp->add_option("--depth", o.depth);
  exp->add_option("--trials", o.trials);
  exp->add_option("--seed", o.seed);
  exp->add_option("--tolerance", o.tolerance);
  exp->add_option("--samples", o.samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "haar") run_haar(o);
    else if (name == "bmo") run_bmo(o);
    else if (name == "lmo") run_lmo(o);
    else if (name == "paraproduct") run_paraproduct(o);
    else if (name == "opnorm") run_opnorm(o);
    else if (name == "sigma") run_sigma(o);
    else if (name == "commutator") run_commutator(o);
    else if (name == "hilbert") run_hilbert(o);
    else {
      o.tolerance_given = exp->count("--tolerance") > 0;
      if (exp->count("--samples") == 0) o.samples = 4;
      run_experiment(o);
    }
  } catch (const NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (last bound " << e.last_bound() << ")\n";
    return kExitNonConvergence;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
