// sipsamp command-line front end: kernel comparisons, sampling
// reconstruction sweeps, converse-theorem verification, and bound
// estimation, with CSV/JSON output suitable for regression diffing.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sipsamp/csv.hpp"
#include "sipsamp/report_json.hpp"
#include "sipsamp/verifier.hpp"

using namespace sipsamp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  double lo = -5.0, hi = 5.0;
  int count = 41;
};

Range parse_range(const std::string& text) {
  Range r;
  char c1, c2;
  std::istringstream ss(text);
  if (!(ss >> r.lo >> c1 >> r.hi >> c2 >> r.count) || c1 != ':' || c2 != ':')
    throw UsageError("bad range '" + text + "', expected lo:hi:count");
  if (r.count < 1 || (r.count > 1 && r.hi < r.lo))
    throw UsageError("bad range '" + text + "'");
  return r;
}

std::vector<double> range_values(const Range& r) {
  std::vector<double> v;
  if (r.count == 1) {
    v.push_back(r.lo);
    return v;
  }
  for (int i = 0; i < r.count; ++i)
    v.push_back(r.lo + (r.hi - r.lo) * i / (r.count - 1));
  return v;
}

struct CliConfig {
  double p = 2.0;
  int n_trunc = 32;
  int grid_order = 16;
  std::uint64_t seed = 42;
  int trials = 2000;
  double tol = 1e-8;
  std::string format = "json";
  std::string out;
  double weight = 1.0;
  std::vector<std::string> perturb;
};

void validate(const CliConfig& c) {
  if (!(c.p > 1.0) || !std::isfinite(c.p)) throw UsageError("--p must lie in (1, inf)");
  if (c.n_trunc < 1) throw UsageError("--n-trunc must be >= 1");
  if (c.grid_order < 8) throw UsageError("--grid-order must be >= 8");
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  if (!(c.tol > 0.0)) throw UsageError("--tol must be > 0");
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be csv or json");
  if (c.weight == 0.0) throw UsageError("--weights must be nonzero");
}

std::map<int, double> parse_perturbations(const std::vector<std::string>& specs) {
  std::map<int, double> shifts;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("bad --perturb-node '" + s + "', expected J=delta");
    try {
      shifts[std::stoi(s.substr(0, eq))] = std::stod(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad --perturb-node '" + s + "'");
    }
  }
  return shifts;
}

// The only environment hook: SIPSAMP_CONFIG points at a JSON file whose
// values become the defaults; explicit flags still win.
void load_env_config(CliConfig& cfg) {
  const char* path = std::getenv("SIPSAMP_CONFIG");
  if (!path) return;
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("config file '") + path + "' not readable");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("config file parse error: ") + e.what());
  }
  if (j.contains("p")) cfg.p = j["p"].get<double>();
  if (j.contains("n_trunc")) cfg.n_trunc = j["n_trunc"].get<int>();
  if (j.contains("grid_order")) cfg.grid_order = j["grid_order"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_kernel(const CliConfig& cfg, const Range& srange, const Range& trange) {
  const auto ss = range_values(srange);
  const auto ts = range_values(trange);
  double span = 0.0;
  for (const double s : ss)
    for (const double t : ts) span = std::max(span, std::abs(t - s));
  const GridPtr grid = make_grid(cfg.grid_order, std::max(8, static_cast<int>(span) + 1));
  const Kernel quad = kernel_G(cfg.p, KernelBackend::Quadrature, grid);

  Output out(cfg.out);
  out.stream() << "s,t,closed,quad_re,quad_im,abs_diff\n";
  double maxdiff = 0.0;
  for (const double s : ss)
    for (const double t : ts) {
      const double closed = sinc(t - s);
      const Complex q = quad(s, t);
      const double diff = std::abs(q - Complex(closed));
      maxdiff = std::max(maxdiff, diff);
      out.stream() << format_double(s) << ',' << format_double(t) << ',' << format_double(closed)
                   << ',' << format_double(q.real()) << ',' << format_double(q.imag()) << ','
                   << format_double(diff) << '\n';
    }
  std::cerr << "kernel: max |quadrature - closed| = " << format_double(maxdiff) << "\n";
  return maxdiff <= cfg.tol ? 0 : 1;
}

int cmd_reconstruct(const CliConfig& cfg, const std::string& spectrum_name,
                    const std::string& spectrum_csv, const Range& trange,
                    const std::string& dump_samples) {
  const std::vector<int> ns = {4, 8, 16, 32, 64};
  const int max_n = ns.back();
  const GridPtr grid = make_grid(cfg.grid_order, std::max(8, max_n));
  const Exponent e = Exponent::from_p(cfg.p);

  Spectrum spectrum = Spectrum::constant();
  bool closed_form = true;
  if (!spectrum_csv.empty()) {
    GridFn data = read_gridfn_csv(spectrum_csv);
    spectrum = Spectrum::from_grid(std::move(data), spectrum_csv);
    closed_form = false;
  } else {
    try {
      spectrum = Spectrum::from_name(spectrum_name);
    } catch (const std::invalid_argument& err) {
      throw UsageError(err.what());
    }
  }
  const GridPtr fgrid = closed_form ? grid : spectrum.data().grid;
  const BandlimitedFn f = make_bandlimited(spectrum, e, fgrid);
  const double fhat_norm = spectrum_norm(f, cfg.p);

  if (!dump_samples.empty()) {
    const SamplingSystem sys = make_sinc_system(max_n, e, fgrid);
    write_samples_csv(dump_samples, sys, sample_at_nodes(sys, f));
  }

  struct Row {
    double t;
    int n;
    Complex value, exact;
    double abs_err, bound;
  };
  const auto ts = range_values(trange);

  // Every t is independent; evaluate them concurrently and assemble in order.
  auto eval_t = [&](double t) {
    std::vector<Row> rows;
    for (const int N : ns) {
      const SamplingSystem sys = make_sinc_system(N, e, fgrid);
      const CVec samples = sample_at_nodes(sys, f);
      const auto res = reconstruct(sys, samples, t);
      Row row;
      row.t = t;
      row.n = N;
      row.value = res.value;
      row.exact = closed_form ? f.spectrum.time_eval(t) : bandlimited_eval(f, t);
      row.abs_err = std::abs(row.value - row.exact);
      row.bound = fhat_norm * tail_factor(t, N, e.q, fgrid);
      rows.push_back(row);
    }
    return rows;
  };

  std::vector<std::future<std::vector<Row>>> futs;
  futs.reserve(ts.size());
  for (const double t : ts)
    futs.push_back(std::async(std::launch::async, eval_t, t));

  Output out(cfg.out);
  out.stream() << "t,n,value_re,value_im,exact_re,exact_im,abs_err,bound\n";
  bool ok = true;
  for (auto& fut : futs)
    for (const Row& r : fut.get()) {
      out.stream() << format_double(r.t) << ',' << r.n << ',' << format_double(r.value.real())
                   << ',' << format_double(r.value.imag()) << ',' << format_double(r.exact.real())
                   << ',' << format_double(r.exact.imag()) << ',' << format_double(r.abs_err)
                   << ',' << format_double(r.bound) << '\n';
      if (closed_form && r.abs_err > r.bound + 1e-13) ok = false;
    }
  if (!ok) std::cerr << "reconstruct: truncation bound violated\n";
  return ok ? 0 : 1;
}

int cmd_verify(const CliConfig& cfg, const std::string& dump_prefix) {
  VerifyConfig vc;
  vc.p = cfg.p;
  vc.half_width = cfg.n_trunc;
  vc.grid_order = cfg.grid_order;
  vc.seed = cfg.seed;
  vc.trials = cfg.trials;
  vc.weight = Complex(cfg.weight, 0.0);
  vc.node_shifts = parse_perturbations(cfg.perturb);

  const SamplingSystem sys = system_from_config(vc);
  const VerificationReport rep = run_verification(sys, vc);

  Output out(cfg.out);
  if (cfg.format == "json") {
    out.stream() << to_json(rep).dump(2) << '\n';
  } else {
    const Json j = to_json(rep);
    out.stream() << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      out.stream() << it.key() << ',' << it.value().dump() << '\n';
  }

  if (!dump_prefix.empty()) {
    write_matrix_csv(dump_prefix + "_biorth_SM.csv", biorth_SM_matrix(sys));
    const Kernel G = kernel_G(cfg.p, KernelBackend::Quadrature, sys.grid);
    write_matrix_csv(dump_prefix + "_biorth_SG.csv", sampling_basis_matrix(sys, G, cfg.p));
    write_matrix_csv(dump_prefix + "_gram_feature.csv", feature_gram_matrix(sys, cfg.p));
    write_matrix_csv(dump_prefix + "_gram_samp.csv", samp_gram_matrix(sys));
  }

  return rep.max_deterministic_dev() <= cfg.tol ? 0 : 1;
}

int cmd_bounds(const CliConfig& cfg, const std::string& target, bool n_sweep) {
  if (target != "bessel" && target != "frame" && target != "riesz")
    throw UsageError("unknown --target '" + target + "' (bessel|frame|riesz)");

  auto estimate_at = [&](int N) {
    VerifyConfig vc;
    vc.p = cfg.p;
    vc.half_width = N;
    vc.grid_order = cfg.grid_order;
    vc.seed = cfg.seed;
    vc.trials = cfg.trials;
    const SamplingSystem sys = system_from_config(vc);
    if (target == "bessel") return bessel_bound(sys, cfg.p, cfg.trials, cfg.seed);
    if (target == "frame") return frame_bounds_M(sys, cfg.p, cfg.trials, cfg.seed);
    return riesz_bounds_S(sys, cfg.p, cfg.trials, cfg.seed);
  };

  Json j;
  j["target"] = target;
  j["p"] = cfg.p;
  if (n_sweep) {
    // Finite-section trend: the same estimate at a ladder of truncations.
    // No convergence rate is asserted, only the observed values.
    Json arr = Json::array();
    for (const int N : {4, 8, 16, 32}) {
      Json entry;
      entry["n_trunc"] = N;
      entry["estimate"] = to_json(estimate_at(N));
      arr.push_back(entry);
    }
    j["sweep"] = arr;
  } else {
    j["n_trunc"] = cfg.n_trunc;
    j["estimate"] = to_json(estimate_at(cfg.n_trunc));
  }

  Output out(cfg.out);
  if (cfg.format == "json") {
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      out.stream() << it.key() << ',' << it.value().dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  std::string srange_text = "-5:5:41", trange_text = "-5:5:41", rec_trange_text = "0.05:4.05:9";
  std::string spectrum_name = "const", spectrum_csv, bounds_target = "bessel", dump_prefix;
  std::string dump_samples;
  bool bounds_n_sweep = false;

  CLI::App app{"semi-inner-product sampling numerics"};
  app.require_subcommand(1);

  try {
    load_env_config(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "exponent p in (1, inf)");
    sub->add_option("--n-trunc", cfg.n_trunc, "truncation half-width N");
    sub->add_option("--grid-order", cfg.grid_order, "quadrature nodes per panel (>= 8)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "random trials for bound estimates");
    sub->add_option("--tol", cfg.tol, "pass/fail tolerance");
    sub->add_option("--format", cfg.format, "output format: csv|json");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  CLI::App* kernel = app.add_subcommand("kernel", "closed-form vs quadrature kernel lattice");
  add_common(kernel);
  kernel->add_option("--srange", srange_text, "s lattice as lo:hi:count");
  kernel->add_option("--trange", trange_text, "t lattice as lo:hi:count");

  CLI::App* rec = app.add_subcommand("reconstruct", "truncated sampling-series sweep");
  add_common(rec);
  rec->add_option("--spectrum", spectrum_name, "named spectrum: const, shift:T0, coswin");
  rec->add_option("--spectrum-csv", spectrum_csv, "tabulated spectrum CSV (node,weight,re,im)");
  rec->add_option("--trange", rec_trange_text, "t sweep as lo:hi:count");
  rec->add_option("--dump-samples", dump_samples, "write the node samples as CSV (j,t_j,re,im)");

  CLI::App* verify = app.add_subcommand("verify", "converse-theorem verification report");
  add_common(verify);
  verify->add_option("--perturb-node", cfg.perturb, "node perturbation J=delta (repeatable)");
  verify->add_option("--weights", cfg.weight, "uniform weight a_j (atoms scaled consistently)");
  verify->add_option("--dump-matrices", dump_prefix, "CSV dump prefix for biorthogonality matrices");

  CLI::App* bounds = app.add_subcommand("bounds", "single bound estimate");
  add_common(bounds);
  bounds->add_option("--target", bounds_target, "bessel|frame|riesz");
  bounds->add_flag("--n-sweep", bounds_n_sweep, "estimate at N in {4, 8, 16, 32}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << "usage error\n";
    return 2;
  }

  try {
    validate(cfg);
    if (kernel->parsed())
      return cmd_kernel(cfg, parse_range(srange_text), parse_range(trange_text));
    if (rec->parsed())
      return cmd_reconstruct(cfg, spectrum_name, spectrum_csv, parse_range(rec_trange_text),
                             dump_samples);
    if (verify->parsed()) return cmd_verify(cfg, dump_prefix);
    if (bounds->parsed()) return cmd_bounds(cfg, bounds_target, bounds_n_sweep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
