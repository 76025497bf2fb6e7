#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfmle/bfmle.hpp"

namespace bfmle::cli {
namespace {

using nlohmann::ordered_json;

// Raised for problems with the invocation itself (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return in;
}

// Two-column CSV: group (x or y), value. A leading header row is skipped;
// blank lines and lines starting with '#' are ignored.
void read_grouped_csv(const std::string& path, std::vector<double>& xs, std::vector<double>& ys) {
  auto in = open_input(path);
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": expected 'group,value'");
    }
    const std::string group = trim(std::string_view(t).substr(0, comma));
    const std::string value = trim(std::string_view(t).substr(comma + 1));
    const auto v = parse_double(value);
    if (first && !v && group == "group") {
      first = false;
      continue;
    }
    first = false;
    if (!v) throw DomainError(path + ":" + std::to_string(lineno) + ": bad value '" + value + "'");
    if (group == "x") {
      xs.push_back(*v);
    } else if (group == "y") {
      ys.push_back(*v);
    } else {
      throw DomainError(path + ":" + std::to_string(lineno) + ": group must be x or y, got '" + group + "'");
    }
  }
}

// One value per line; a non-numeric first line is taken as a header.
std::vector<double> read_column(const std::string& path) {
  auto in = open_input(path);
  std::vector<double> vals;
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto v = parse_double(t);
    if (!v) {
      if (first) {
        first = false;
        continue;
      }
      throw DomainError(path + ":" + std::to_string(lineno) + ": bad value '" + t + "'");
    }
    first = false;
    vals.push_back(*v);
  }
  return vals;
}

const char* to_string(PointKind k) { return k == PointKind::LocalMax ? "LocalMax" : "Saddle"; }

struct FitArgs {
  std::string data;
  std::string x_file;
  std::string y_file;
  std::optional<int> nx, ny;
  std::optional<double> mx, my, vx, vy;
  bool unbiased = false;
};

SummaryStats load_stats(const FitArgs& a) {
  const bool have_summary = a.nx || a.ny || a.mx || a.my || a.vx || a.vy;
  const int sources = int(!a.data.empty()) + int(!a.x_file.empty() || !a.y_file.empty()) + int(have_summary);
  if (sources != 1) {
    throw UsageError("give exactly one input: --data, --x-file/--y-file, or --nx --mx --vx --ny --my --vy");
  }
  if (have_summary) {
    if (!(a.nx && a.ny && a.mx && a.my && a.vx && a.vy)) {
      throw UsageError("summary input needs all of --nx --mx --vx --ny --my --vy");
    }
    SummaryStats s{*a.nx, *a.ny, *a.mx, *a.my, *a.vx, *a.vy};
    if (a.unbiased) {
      s.var_x = unbiased_to_mle_variance(s.var_x, s.n);
      s.var_y = unbiased_to_mle_variance(s.var_y, s.m);
    }
    validate(s);
    return s;
  }
  if (a.unbiased) throw UsageError("--unbiased applies only to summary-statistic input");
  std::vector<double> xs, ys;
  if (!a.data.empty()) {
    read_grouped_csv(a.data, xs, ys);
  } else {
    if (a.x_file.empty() || a.y_file.empty()) throw UsageError("--x-file and --y-file must be given together");
    xs = read_column(a.x_file);
    ys = read_column(a.y_file);
  }
  return summarize(xs, ys);
}

ordered_json fit_json(const SummaryStats& s) {
  const NullFit null_fit = fit_null(s);
  const AltFit alt = fit_alternative(s);
  ordered_json pts = ordered_json::array();
  for (const auto& p : null_fit.all_points) {
    pts.push_back({{"mu", p.params.mu},
                   {"var_x", p.params.var_x},
                   {"var_y", p.params.var_y},
                   {"loglik", p.loglik},
                   {"kind", to_string(p.kind)}});
  }
  return {{"n", s.n},
          {"m", s.m},
          {"mu_hat", null_fit.mle.params.mu},
          {"var_x_hat", null_fit.mle.params.var_x},
          {"var_y_hat", null_fit.mle.params.var_y},
          {"loglik_null", null_fit.mle.loglik},
          {"loglik_alt", alt.loglik},
          {"lrt", std::max(0.0, 2.0 * (alt.loglik - null_fit.mle.loglik))},
          {"discriminant", null_fit.discriminant},
          {"multimodal", null_fit.multimodal},
          {"degenerate", null_fit.degenerate},
          {"stationary_points", pts}};
}

ordered_json sim_header(const SimConfig& c) {
  // workers is deliberately absent: output must not depend on it.
  return {{"n", c.n},       {"m", c.m},
          {"mu_x", c.mu_x}, {"mu_y", c.mu_y},
          {"var_x", c.var_x}, {"var_y", c.var_y},
          {"replications", c.replications}, {"seed", c.seed}};
}

void write_sim_row(std::ostream& out, double delta, const SimResult& r) {
  out << fmt_double(delta) << ',' << fmt_double(r.p_hat) << ',' << fmt_double(r.std_err) << ','
      << r.replications << ',' << r.degenerate_count << '\n';
}

constexpr const char* kSimColumns = "delta,p_hat,std_err,replications,degenerate_count";

void add_sim_options(CLI::App* sub, SimConfig& cfg, bool with_means) {
  sub->add_option("--n", cfg.n, "first sample size")->required();
  sub->add_option("--m", cfg.m, "second sample size")->required();
  if (with_means) {
    sub->add_option("--mux", cfg.mu_x, "population mean of x")->capture_default_str();
    sub->add_option("--muy", cfg.mu_y, "population mean of y")->capture_default_str();
  }
  sub->add_option("--vx", cfg.var_x, "population variance of x")->capture_default_str();
  sub->add_option("--vy", cfg.var_y, "population variance of y")->capture_default_str();
  sub->add_option("--reps", cfg.replications, "replications per point")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "64-bit seed")->envname("BF_SEED")->capture_default_str();
  sub->add_option("--workers", cfg.workers, "worker threads (does not affect results)")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum likelihood and multimodality analysis for the two-sample common-mean normal model",
               "bfmle"};
  app.require_subcommand(1);

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "fit the common-mean model; prints JSON");
  fit->add_option("--data", fa.data, "CSV with columns group,value (group is x or y)");
  fit->add_option("--x-file", fa.x_file, "single-column file with the x sample");
  fit->add_option("--y-file", fa.y_file, "single-column file with the y sample");
  fit->add_option("--nx", fa.nx, "size of the x sample");
  fit->add_option("--mx", fa.mx, "mean of the x sample");
  fit->add_option("--vx", fa.vx, "variance of the x sample, divisor n (see --unbiased)");
  fit->add_option("--ny", fa.ny, "size of the y sample");
  fit->add_option("--my", fa.my, "mean of the y sample");
  fit->add_option("--vy", fa.vy, "variance of the y sample, divisor m (see --unbiased)");
  fit->add_flag("--unbiased", fa.unbiased, "--vx/--vy use divisor n-1; convert before fitting");

  Cubic cub;
  double root_tol = kDefaultDegenerateTol;
  auto* roots = app.add_subcommand("roots", "real roots of a3 x^3 + a2 x^2 + a1 x + a0; prints JSON");
  roots->add_option("--a3", cub.a3)->required();
  roots->add_option("--a2", cub.a2)->required();
  roots->add_option("--a1", cub.a1)->required();
  roots->add_option("--a0", cub.a0)->required();
  roots->add_option("--tol", root_tol, "relative discriminant tolerance")->capture_default_str();

  double gamma = 1.0, delta = 0.0, r = 1.0, cusp_tol = kDefaultCuspTol;
  auto* classify = app.add_subcommand("classify", "region of (gamma, delta) for ratio r; prints JSON");
  classify->add_option("--gamma", gamma)->required();
  classify->add_option("--delta", delta)->required();
  classify->add_option("--r", r)->required();
  classify->add_option("--cusp-tol", cusp_tol, "distance to the cusp that counts as singular")->capture_default_str();

  double gamma_min = 0.1, gamma_max = 5.0;
  int steps = 200;
  auto* curve = app.add_subcommand("curve", "points on the curve D_r = 0; prints CSV gamma,delta");
  curve->add_option("--r", r)->required();
  curve->add_option("--gamma-min", gamma_min)->capture_default_str();
  curve->add_option("--gamma-max", gamma_max)->capture_default_str();
  curve->add_option("--steps", steps)->capture_default_str();

  auto* cusps_cmd = app.add_subcommand("cusps", "cusps, tangent ray and asymptote slope; prints JSON");
  cusps_cmd->add_option("--r", r)->required();

  std::optional<int> bn;
  std::optional<double> br;
  int bm = 0;
  double bgamma = 1.0;
  auto* bound_cmd = app.add_subcommand("bound", "finite-sample multimodality bound; prints JSON");
  auto* bn_opt = bound_cmd->add_option("--n", bn, "first sample size");
  auto* br_opt = bound_cmd->add_option("--r", br, "ratio n/m, instead of --n");
  bn_opt->excludes(br_opt);
  bound_cmd->add_option("--m", bm, "second sample size")->required();
  bound_cmd->add_option("--gamma", bgamma, "population sd_x / sd_y")->required();

  SimConfig sim;
  sim.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo P(three roots) at one point; prints CSV");
  add_sim_options(simulate, sim, true);

  std::vector<double> deltas;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo P(three roots) over mu_x = delta, mu_y = 0; prints CSV");
  add_sim_options(sweep, sim, false);
  sweep->add_option("--deltas", deltas, "comma-separated delta values")->delimiter(',')->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (fit->parsed()) {
      out << fit_json(load_stats(fa)).dump(2) << '\n';
    } else if (roots->parsed()) {
      if (!(root_tol > 0.0)) throw UsageError("--tol must be positive");
      const RootSet rs = solve_cubic(cub, root_tol);
      const RootCount count = count_real_roots(cub, root_tol);
      ordered_json j = {{"roots", rs.roots},
                        {"discriminant", rs.discriminant},
                        {"degenerate", rs.degenerate},
                        {"count", count == RootCount::One     ? "One"
                                  : count == RootCount::Three ? "Three"
                                                              : "Degenerate"}};
      out << j.dump(2) << '\n';
    } else if (classify->parsed()) {
      const RegionPoint pt = classify_point(gamma, delta, r, cusp_tol);
      const AsymptoticPrediction pred = asymptotic_prediction(gamma, delta, r, cusp_tol);
      ordered_json j = {{"gamma", pt.gamma},
                        {"delta", pt.delta},
                        {"r", pt.r},
                        {"d_value", pt.d_value},
                        {"region", to_string(pt.region)},
                        {"prediction",
                         {{"limit_prob_three_roots", pred.limit_prob_three_roots},
                          {"case", to_string(pred.limit_case)}}}};
      out << j.dump(2) << '\n';
    } else if (curve->parsed()) {
      out << "gamma,delta\n";
      for (const auto& p : trace_curve(r, gamma_min, gamma_max, steps)) {
        out << fmt_double(p.gamma) << ',' << fmt_double(p.delta) << '\n';
      }
    } else if (cusps_cmd->parsed()) {
      const CuspSet c = cusps(r);
      const Point2 ray = cusp_tangent_ray(r);
      ordered_json points = ordered_json::array();
      for (const auto& p : c.points()) points.push_back({{"gamma", p.gamma}, {"delta", p.delta}});
      ordered_json j = {{"r", r},
                        {"gamma_c", c.gamma_c},
                        {"delta_c", c.delta_c},
                        {"points", points},
                        {"tangent_ray", {{"gamma", ray.gamma}, {"delta", ray.delta}}},
                        {"asymptote_slope", asymptote_slope(r)}};
      out << j.dump(2) << '\n';
    } else if (bound_cmd->parsed()) {
      if (!bn && !br) throw UsageError("bound needs --n or --r");
      const BoundResult b = bn ? multimodality_bound(*bn, bm, bgamma) : multimodality_bound_from_ratio(*br, bm, bgamma);
      ordered_json j;
      if (bn) j["n"] = *bn;
      j["m"] = bm;
      j["r"] = bn ? static_cast<double>(*bn) / bm : *br;
      j["gamma"] = bgamma;
      j["degrees_of_freedom"] = bm - 1;
      j["c_n"] = b.c_n;
      j["t_threshold"] = b.t_threshold;
      j["bound"] = b.bound;
      out << j.dump(2) << '\n';
    } else if (simulate->parsed()) {
      const SimResult res = estimate_prob_three(sim);
      out << "# " << sim_header(sim).dump() << '\n' << kSimColumns << '\n';
      write_sim_row(out, (sim.mu_x - sim.mu_y) / std::sqrt(sim.var_y), res);
    } else if (sweep->parsed()) {
      validate(sim);
      const auto rows = sweep_delta(sim, deltas);
      auto header = sim_header(sim);
      header.erase("mu_x");
      header.erase("mu_y");
      header["deltas"] = deltas;
      out << "# " << header.dump() << '\n' << kSimColumns << '\n';
      for (const auto& row : rows) write_sim_row(out, row.delta, row.result);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace bfmle::cli
