#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lyap/asymptotics.hpp"
#include "lyap/closed_forms.hpp"
#include "lyap/error.hpp"
#include "lyap/lyapunov.hpp"
#include "lyap/parallel.hpp"
#include "lyap/simulate.hpp"
#include "lyap/spectrum.hpp"

namespace lyap::cli {
namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  int beta = 0;
  std::string sigma2;
  int spike_d = 0;
  double spike_theta = 0.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  std::uint64_t seed = 1;
  long steps = 100000;
  int reps = 32;
  int top_k = 1;
  int renorm_every = 1;
  std::string format = "json";
  std::string out_path;

  // figure only
  std::string which;
  double t_min = 0.1;
  double t_max = 10.0;
  int t_points = 20;
  std::vector<int> dims;
  double theta_min = 1.0;
  double theta_max = 10.0;
  int theta_points = 20;

  // set after parsing
  bool have_sigma2 = false;
  bool have_spike = false;
  bool have_steps = false;
  bool have_reps = false;
};

struct Entry {
  std::string method;
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<double> quad_error;
};

struct Comparison {
  std::string method;
  std::string reference;
  double delta = 0.0;
  std::optional<double> z;
  std::string flag;
};

struct Report {
  json request;
  std::vector<Entry> results;
  std::vector<Comparison> deltas;
  std::string verdict = "n/a";
};

struct Source {
  Spectrum spectrum;
  std::optional<SpikeModel> spike;
};

constexpr double kExactAgreementTol = 1e-8;

std::string label(const std::string& method, int k) {
  return k == 1 ? method : method + ":mu_" + std::to_string(k);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Source resolve_source(const Options& o) {
  if (o.have_sigma2 == o.have_spike)
    throw ValidationError("give exactly one spectrum source: --sigma2, or --spike-d with --spike-theta");
  if (o.have_sigma2) {
    const std::string text = !o.sigma2.empty() && o.sigma2.front() == '@' ? read_file(o.sigma2.substr(1)) : o.sigma2;
    return {spectrum_from_json(text), std::nullopt};
  }
  const SpikeModel m{o.spike_d, o.spike_theta};
  return {spike_spectrum(m), m};
}

Beta resolve_beta(const Options& o) { return beta_from_int(o.beta); }

QuadConfig quad_config(const Options& o) {
  QuadConfig cfg;
  cfg.rel_tol = o.rel_tol;
  cfg.abs_tol = o.abs_tol;
  cfg.max_subdivisions = o.max_subdivisions;
  cfg.validate();
  return cfg;
}

sim::SimConfig sim_config(const Options& o) {
  sim::SimConfig cfg;
  cfg.seed = o.seed;
  cfg.n_steps = o.steps;
  cfg.n_reps = o.reps;
  cfg.top_k = o.top_k;
  cfg.renorm_every = o.renorm_every;
  return cfg;
}

json request_json(const std::string& command, const Options& o, const Source* src, bool with_sim) {
  json r;
  r["command"] = command;
  if (o.beta != 0) r["beta"] = o.beta;
  if (src) {
    r["sigma2"] = std::vector<double>(src->spectrum.sigma_sq().begin(), src->spectrum.sigma_sq().end());
    if (src->spike) r["spike"] = {{"d", src->spike->d}, {"theta", src->spike->theta}};
  }
  r["rel_tol"] = o.rel_tol;
  r["abs_tol"] = o.abs_tol;
  r["max_subdivisions"] = o.max_subdivisions;
  if (with_sim) {
    r["seed"] = o.seed;
    r["steps"] = o.steps;
    r["reps"] = o.reps;
    r["top_k"] = o.top_k;
    r["renorm_every"] = o.renorm_every;
  }
  r["format"] = o.format;
  return r;
}

Entry to_entry(const std::string& method, const ExponentEstimate& e) {
  return {method, e.value, e.std_error, e.quad_error};
}

// Closed forms for mu_1 that apply to this (beta, spectrum). Forms whose
// preconditions fail (degenerate gaps, wrong shape) are left out.
std::vector<Entry> closed_forms_mu1(Beta beta, const Source& src) {
  const Spectrum& s = src.spectrum;
  const int d = static_cast<int>(s.dim());
  std::vector<Entry> out;
  auto attempt = [&](const std::string& name, const std::function<double()>& f) {
    try {
      out.push_back({name, f(), std::nullopt, std::nullopt});
    } catch (const Error&) {
    }
  };
  if (closed::is_isotropic(s)) {
    static const char* names[] = {"", "newman", "complex_isotropic", "", "quaternion_isotropic"};
    attempt(names[static_cast<int>(beta)],
            [&] { return closed::isotropic_exponents(beta, d, s.sigma_sq()[0]).front(); });
  }
  const bool distinct = relative_gap(s) >= kDegeneracyThreshold;
  switch (beta) {
    case Beta::Real:
      if (d == 2) attempt("mannion", [&] { return closed::mannion_2x2(s); });
      if (d == 3) attempt("elliptic_3x3", [&] { return closed::real_3x3_elliptic(s); });
      if (d % 2 == 0 && !closed::is_isotropic(s)) {
        const auto halves = closed::paired_halves(s);
        if (!halves.empty()) attempt("paired", [&] { return closed::real_paired_spectrum(halves); });
      }
      break;
    case Beta::Complex:
      if (distinct && d >= 2) attempt("forrester", [&] { return closed::forrester_kth_complex(1, s); });
      if (src.spike) attempt("spike_exact", [&] { return 0.5 * asym::spike_exact_complex(src.spike->theta, d); });
      break;
    case Beta::Quaternion:
      if (distinct && d >= 2) attempt("quaternion_residue", [&] { return closed::quaternion_largest(s); });
      break;
  }
  return out;
}

// Analytic reference for mu_k, k >= 2, when a closed form exists.
std::optional<double> analytic_mu_k(Beta beta, const Spectrum& s, int k) {
  try {
    if (closed::is_isotropic(s))
      return closed::isotropic_exponents(beta, static_cast<int>(s.dim()), s.sigma_sq()[0])[static_cast<std::size_t>(k - 1)];
    if (beta == Beta::Complex && relative_gap(s) >= kDegeneracyThreshold) return closed::forrester_kth_complex(k, s);
  } catch (const Error&) {
  }
  return std::nullopt;
}

json entry_json(const Entry& e) {
  json j = {{"method", e.method}, {"value", e.value}};
  if (e.std_error) j["std_error"] = *e.std_error;
  if (e.quad_error) j["quad_error"] = *e.quad_error;
  return j;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "csv") {
    std::string s = "method,value,std_error,quad_error\n";
    for (const auto& e : r.results) {
      s += e.method + "," + format_number(e.value) + ",";
      if (e.std_error) s += format_number(*e.std_error);
      s += ",";
      if (e.quad_error) s += format_number(*e.quad_error);
      s += "\n";
    }
    return s;
  }
  json j;
  j["request"] = r.request;
  j["results"] = json::array();
  for (const auto& e : r.results) j["results"].push_back(entry_json(e));
  j["deltas"] = json::array();
  for (const auto& c : r.deltas) {
    json d = {{"method", c.method}, {"reference", c.reference}, {"delta", c.delta}};
    if (c.z) d["z"] = *c.z;
    if (!c.flag.empty()) d["flag"] = c.flag;
    j["deltas"].push_back(d);
  }
  j["verdict"] = r.verdict;
  return j.dump(2) + "\n";
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + o.out_path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to '" + o.out_path + "' failed");
}

void require_beta(const Options& o) {
  if (o.beta == 0) throw ValidationError("--beta is required");
}

int cmd_exact(const Options& o, std::ostream& out) {
  require_beta(o);
  const Beta beta = resolve_beta(o);
  const Source src = resolve_source(o);
  Report r;
  r.request = request_json("exact", o, &src, false);
  const ExponentEstimate q = largest_exponent(beta, src.spectrum, quad_config(o));
  r.results.push_back(to_entry("quadrature", q));
  double worst = 0.0;
  for (const Entry& e : closed_forms_mu1(beta, src)) {
    r.results.push_back(e);
    const double delta = e.value - q.value;
    worst = std::max(worst, std::abs(delta));
    r.deltas.push_back({e.method, "quadrature", delta, std::nullopt, ""});
  }
  r.verdict = worst <= kExactAgreementTol ? "PASS" : "FAIL";
  emit(render(r, o.format), o, out);
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  require_beta(o);
  const Beta beta = resolve_beta(o);
  const Source src = resolve_source(o);
  Report r;
  r.request = request_json("simulate", o, &src, true);
  const auto est = sim::mc_top_k(beta, src.spectrum, sim_config(o));
  for (std::size_t i = 0; i < est.size(); ++i)
    r.results.push_back(to_entry(label("monte_carlo", static_cast<int>(i) + 1), est[i]));
  emit(render(r, o.format), o, out);
  return kOk;
}

int cmd_spike(const Options& o, std::ostream& out) {
  require_beta(o);
  const Beta beta = resolve_beta(o);
  if (!o.have_spike || o.have_sigma2) throw ValidationError("spike needs --spike-d and --spike-theta (and no --sigma2)");
  const Source src = resolve_source(o);
  const int d = src.spike->d;
  const double t = src.spike->t();
  Report r;
  r.request = request_json("spike", o, &src, false);
  r.request["t"] = t;
  const ExponentEstimate q = largest_exponent(beta, src.spectrum, quad_config(o));
  r.results.push_back(to_entry("quadrature", q));
  if (beta == Beta::Complex) {
    const double v = 0.5 * asym::spike_exact_complex(src.spike->theta, d);
    r.results.push_back({"spike_exact", v, std::nullopt, std::nullopt});
    r.deltas.push_back({"spike_exact", "quadrature", v - q.value, std::nullopt, ""});
  }
  const double a = 0.5 * asym::spike_asymptotics(beta, d, t).value_2mu1;
  r.results.push_back({"spike_asymptotic", a, std::nullopt, std::nullopt});
  r.deltas.push_back({"spike_asymptotic", "quadrature", a - q.value, std::nullopt, ""});
  r.results.push_back({"free_prediction", 0.5 * std::log(1.0 + 1.0 / t), std::nullopt, std::nullopt});
  emit(render(r, o.format), o, out);
  return kOk;
}

int cmd_free_limit(const Options& o, std::ostream& out) {
  require_beta(o);
  const Beta beta = resolve_beta(o);
  const Source src = resolve_source(o);
  Report r;
  r.request = request_json("free-limit", o, &src, false);
  const ExponentEstimate q = largest_exponent(beta, src.spectrum, quad_config(o));
  const auto s2 = src.spectrum.sigma_sq();
  double mean = 0.0;
  for (double v : s2) mean += v;
  mean /= static_cast<double>(s2.size());
  const double f = asym::free_limit(mean);
  r.results.push_back(to_entry("quadrature", q));
  r.results.push_back({"free_limit", f, std::nullopt, std::nullopt});
  r.deltas.push_back({"quadrature", "free_limit", q.value - f, std::nullopt, ""});
  emit(render(r, o.format), o, out);
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  require_beta(o);
  const Beta beta = resolve_beta(o);
  const Source src = resolve_source(o);
  Report r;
  r.request = request_json("compare", o, &src, true);
  const sim::SimConfig scfg = sim_config(o);
  scfg.validate(src.spectrum.dim());

  const ExponentEstimate q = largest_exponent(beta, src.spectrum, quad_config(o));
  std::vector<Entry> analytic{to_entry("quadrature", q)};
  for (const Entry& e : closed_forms_mu1(beta, src)) analytic.push_back(e);
  const auto mc = sim::mc_top_k(beta, src.spectrum, scfg);

  // (analytic entry, k) pairs to check against the Monte Carlo estimate of mu_k.
  std::vector<std::pair<Entry, int>> checks;
  for (const Entry& e : analytic) checks.emplace_back(e, 1);
  for (int k = 2; k <= o.top_k; ++k) {
    if (const auto v = analytic_mu_k(beta, src.spectrum, k)) {
      const std::string name = closed::is_isotropic(src.spectrum) ? "isotropic" : "forrester";
      checks.emplace_back(Entry{label(name, k), *v, std::nullopt, std::nullopt}, k);
    }
  }

  for (const auto& [e, k] : checks) r.results.push_back(e);
  for (std::size_t i = 0; i < mc.size(); ++i)
    r.results.push_back(to_entry(label("monte_carlo", static_cast<int>(i) + 1), mc[i]));

  double worst_z = 0.0;
  for (const auto& [e, k] : checks) {
    const ExponentEstimate& m = mc[static_cast<std::size_t>(k - 1)];
    const double delta = m.value - e.value;
    const double se = *m.std_error;
    const double z = se > 0.0 ? delta / se : (delta == 0.0 ? 0.0 : INFINITY);
    worst_z = std::max(worst_z, std::abs(z));
    r.deltas.push_back({label("monte_carlo", k), e.method, delta, z, std::abs(z) <= 3.0 ? "PASS" : "FAIL"});
  }
  r.verdict = compare_verdict(worst_z);
  emit(render(r, o.format), o, out);
  return compare_exit_code(worst_z);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0.0) || !(hi >= lo)) throw ValidationError("grid needs n >= 1 and 0 < min <= max");
  std::vector<double> g(static_cast<std::size_t>(n));
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::string figure_spike(const Options& o) {
  const QuadConfig qcfg = quad_config(o);
  const std::vector<int> dims = o.dims.empty() ? std::vector<int>{2, 100} : o.dims;
  const std::vector<double> ts = log_grid(o.t_min, o.t_max, o.t_points);
  struct Row {
    double t;
    int d;
    Beta beta;
  };
  std::vector<Row> rows;
  for (int d : dims) {
    if (d < 2) throw ValidationError("spike figure needs d >= 2");
    for (Beta b : {Beta::Real, Beta::Complex})
      for (double t : ts) rows.push_back({t, d, b});
  }
  std::vector<std::string> lines(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const Row& row = rows[i];
    const double theta = row.d / row.t;
    std::vector<double> s2(static_cast<std::size_t>(row.d), 1.0);
    s2.back() = theta;
    const double exact = largest_exponent(row.beta, Spectrum(std::move(s2)), qcfg).value;
    std::string asym_field;
    if (theta > 1.0) asym_field = format_number(0.5 * asym::spike_asymptotics(row.beta, row.d, row.t).value_2mu1);
    lines[i] = format_number(row.t) + "," + std::to_string(row.d) + "," + std::to_string(static_cast<int>(row.beta)) +
               "," + format_number(exact) + "," + asym_field + "," + format_number(0.5 * std::log(1.0 + 1.0 / row.t)) +
               "," + format_number(exact - 0.5 * std::log(static_cast<double>(row.d))) + "\n";
  });
  std::string s = "t,d,beta,mu1_exact,mu1_asymptotic,free_prediction,mu1_scaled\n";
  for (const auto& l : lines) s += l;
  return s;
}

std::vector<double> profile(const std::string& name, int d) {
  std::vector<double> theta(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    if (name == "half")
      theta[static_cast<std::size_t>(i)] = i < d / 2 ? 1.0 : 3.0;
    else
      theta[static_cast<std::size_t>(i)] = d == 1 ? 2.0 : 1.0 + 2.0 * i / (d - 1);
  }
  return theta;
}

std::string figure_free_error(const Options& o) {
  const QuadConfig qcfg = quad_config(o);
  const std::vector<int> dims = o.dims.empty() ? std::vector<int>{10, 20, 50, 100, 200} : o.dims;
  struct Row {
    int d;
    Beta beta;
    std::string profile;
  };
  std::vector<Row> rows;
  for (int d : dims) {
    if (d < 2) throw ValidationError("free-error figure needs d >= 2");
    for (Beta b : {Beta::Real, Beta::Complex})
      for (const char* p : {"half", "uniform"}) rows.push_back({d, b, p});
  }
  std::vector<std::string> lines(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const Row& row = rows[i];
    const double err = asym::free_limit_error(row.beta, profile(row.profile, row.d), qcfg);
    lines[i] = std::to_string(row.d) + "," + std::to_string(static_cast<int>(row.beta)) + "," + row.profile + "," +
               format_number(err) + "\n";
  });
  std::string s = "d,beta,profile,error\n";
  for (const auto& l : lines) s += l;
  return s;
}

std::string figure_beta_compare(const Options& o) {
  const QuadConfig qcfg = quad_config(o);
  sim::SimConfig scfg = sim_config(o);
  if (!o.have_steps) scfg.n_steps = 10000;
  if (!o.have_reps) scfg.n_reps = 16;
  scfg.top_k = 1;
  scfg.validate(2);
  const std::vector<double> thetas = log_grid(o.theta_min, o.theta_max, o.theta_points);
  std::string s = "theta,beta,mu1,mu1_mc,mu1_mc_se\n";
  std::size_t row = 0;
  // Rows run in sequence; each simulation parallelizes over its replicates.
  for (double theta : thetas) {
    for (Beta b : {Beta::Real, Beta::Complex, Beta::Quaternion}) {
      const Spectrum sp({1.0, theta});
      const double exact = largest_exponent(b, sp, qcfg).value;
      sim::SimConfig c = scfg;
      c.seed = scfg.seed + 0x9E3779B97F4A7C15ULL * (row + 1);
      const ExponentEstimate mc = sim::mc_largest(b, sp, c);
      s += format_number(theta) + "," + std::to_string(static_cast<int>(b)) + "," + format_number(exact) + "," +
           format_number(mc.value) + "," + format_number(*mc.std_error) + "\n";
      ++row;
    }
  }
  return s;
}

int cmd_figure(const Options& o, std::ostream& out) {
  std::string text;
  if (o.which == "spike")
    text = figure_spike(o);
  else if (o.which == "free-error")
    text = figure_free_error(o);
  else if (o.which == "beta-compare")
    text = figure_beta_compare(o);
  else
    throw ValidationError("--which must be spike, free-error or beta-compare");
  emit(text, o, out);
  return kOk;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message,
                 const std::optional<std::size_t>& index = std::nullopt) {
  json j = {{"error", {{"kind", kind}, {"message", message}}}};
  if (index) j["error"]["index"] = *index;
  err << j.dump() << "\n";
}

}  // namespace

std::string compare_verdict(double worst_abs_z) { return worst_abs_z <= 3.0 ? "PASS" : "FAIL"; }

int compare_exit_code(double worst_abs_z) { return worst_abs_z > 5.0 ? kStatisticalFail : kOk; }

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lyapunov exponents of products of Gaussian random matrices"};
  app.require_subcommand(1);

  auto add_spectrum = [&](CLI::App* c) {
    c->add_option("--beta", o.beta, "Field: 1 real, 2 complex, 4 quaternion");
    c->add_option("--sigma2", o.sigma2, "sigma^2 values as a JSON array, or @path to a file holding one");
    c->add_option("--spike-d", o.spike_d, "Spike model dimension");
    c->add_option("--spike-theta", o.spike_theta, "Spike model eigenvalue theta");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
    c->add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance");
    c->add_option("--max-subdivisions", o.max_subdivisions, "Quadrature subdivision budget");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out_path, "Write output to this path instead of stdout");
  };
  auto add_sim = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--steps", o.steps, "Matrices per product");
    c->add_option("--reps", o.reps, "Independent replicates");
    c->add_option("--top-k", o.top_k, "Number of leading exponents to estimate");
    c->add_option("--renorm-every", o.renorm_every, "Steps between re-orthonormalizations (1..64)");
  };

  CLI::App* exact = app.add_subcommand("exact", "Quadrature value of mu_1 and every applicable closed form");
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the leading exponents");
  CLI::App* spike = app.add_subcommand("spike", "Spike model: exact, asymptotic and free-probability values");
  CLI::App* free_limit = app.add_subcommand("free-limit", "Quadrature value against the free-probability limit");
  CLI::App* figure = app.add_subcommand("figure", "Write figure data as CSV");
  CLI::App* compare = app.add_subcommand("compare", "Analytic values against Monte Carlo");
  for (CLI::App* c : {exact, simulate, spike, free_limit, compare}) {
    add_spectrum(c);
    add_common(c);
  }
  add_sim(simulate);
  add_sim(compare);
  add_common(figure);
  add_sim(figure);
  figure->add_option("--which", o.which, "spike, free-error or beta-compare")->required();
  figure->add_option("--t-min", o.t_min, "Smallest t (spike)");
  figure->add_option("--t-max", o.t_max, "Largest t (spike)");
  figure->add_option("--t-points", o.t_points, "Number of log-spaced t values (spike)");
  figure->add_option("--dims", o.dims, "Dimensions (spike, free-error), comma separated")->delimiter(',');
  figure->add_option("--theta-min", o.theta_min, "Smallest theta (beta-compare)");
  figure->add_option("--theta-max", o.theta_max, "Largest theta (beta-compare)");
  figure->add_option("--theta-points", o.theta_points, "Number of log-spaced theta values (beta-compare)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kValidation;
  }

  CLI::App* chosen = app.get_subcommands().front();
  auto given = [&](const char* name) { return chosen->get_option_no_throw(name) != nullptr && chosen->count(name) > 0; };
  o.have_sigma2 = given("--sigma2");
  o.have_spike = given("--spike-d") || given("--spike-theta");
  if (o.have_spike && !(given("--spike-d") && given("--spike-theta"))) {
    write_error(err, "validation", "--spike-d and --spike-theta must be given together");
    return kValidation;
  }
  o.have_steps = given("--steps");
  o.have_reps = given("--reps");

  try {
    if (chosen == exact) return cmd_exact(o, out);
    if (chosen == simulate) return cmd_simulate(o, out);
    if (chosen == spike) return cmd_spike(o, out);
    if (chosen == free_limit) return cmd_free_limit(o, out);
    if (chosen == compare) return cmd_compare(o, out);
    return cmd_figure(o, out);
  } catch (const ValidationError& e) {
    if (e.index() != ValidationError::kNoIndex)
      write_error(err, "validation", e.what(), e.index());
    else
      write_error(err, "validation", e.what());
    return kValidation;
  } catch (const DegenerateSpectrumError& e) {
    write_error(err, "degenerate_spectrum", e.what());
    return kValidation;
  } catch (const DomainError& e) {
    write_error(err, "domain", e.what());
    return kValidation;
  } catch (const IoError& e) {
    write_error(err, "io", e.what());
    return kValidation;
  } catch (const ConvergenceError& e) {
    write_error(err, "convergence", e.what());
    return kConvergence;
  } catch (const SimulationError& e) {
    write_error(err, "simulation", e.what());
    return kConvergence;
  }
}

}  // namespace lyap::cli
