#include "commands.hpp"

#include <algorithm>
#include <fstream>

#include "heatdens/csv.hpp"
#include "heatdens/errors.hpp"
#include "heatdens/hypothesis.hpp"
#include "heatdens/moments.hpp"

namespace heatdens::cli {

namespace {

namespace fs = std::filesystem;

Metadata base_metadata(const RunConfig& cfg, const char* command) {
  const HeatProblem& p = cfg.problem;
  return {
      {"command", command},
      {"config_hash", cfg.hash_hex()},
      {"seed", std::to_string(cfg.run.seed)},
      {"L1", format_number(p.L1())},
      {"L2", format_number(p.L2())},
      {"alpha2", p.alpha2().describe()},
      {"bc_A", p.bc_A().describe()},
      {"bc_B", p.bc_B().describe()},
      {"psi", p.psi().describe()},
  };
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name, CommandResult& res) {
  fs::create_directories(cfg.output.directory);
  const fs::path path = cfg.output.directory / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  res.files.push_back(path);
  return out;
}

DensityOptions density_options(const RunConfig& cfg) {
  DensityOptions o;
  o.estimator = cfg.run.estimator;
  o.mc_samples = cfg.run.samples;
  o.seed = cfg.run.seed;
  return o;
}

std::vector<int> sorted_orders(const RunConfig& cfg) {
  auto n = cfg.run.N;
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  return n;
}

std::vector<double> shared_grid(const RunConfig& cfg, const std::vector<int>& orders) {
  const auto& g = cfg.run.grid;
  if (g.lo && g.hi) return linspace(*g.lo, *g.hi, g.points);
  // The widest curve has the largest order, so its grid covers the others.
  return default_grid(cfg.problem, cfg.run.x, cfg.run.t, orders.back(), g.points, cfg.run.seed);
}

std::vector<DensityCurve> curves(const RunConfig& cfg, const std::vector<int>& orders,
                                 const std::vector<double>& grid, std::ostream& log) {
  std::vector<DensityCurve> out;
  for (int N : orders) {
    log << "density N=" << N << " ..." << std::flush;
    out.push_back(density_uN(cfg.problem, cfg.run.x, cfg.run.t, N, grid, density_options(cfg)));
    log << " mass " << out.back().mass() << "\n";
  }
  return out;
}

bool mass_ok(double m) { return m >= 0.98 && m <= 1.002; }

}  // namespace

CommandResult cmd_paths(const RunConfig& cfg, std::ostream& log) {
  CommandResult res;
  const HeatProblem& p = cfg.problem;
  const auto xs = linspace(p.L1(), p.L2(), std::max<std::size_t>(cfg.run.path_points, 2));
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = p.to_canonical(xs[i]);
  for (int k = 0; k < cfg.run.paths; ++k) {
    Rng rng = make_rng(cfg.run.seed, static_cast<std::uint64_t>(k));
    const auto psi = p.psi().sample_path(ys, cfg.run.path_terms, rng);
    const double a = p.bc_A().sample(rng);
    const double b = p.bc_B().sample(rng);
    auto out = open_output(cfg, "paths_" + std::to_string(k + 1) + ".csv", res);
    Metadata meta = base_metadata(cfg, "paths");
    meta.emplace_back("draw", std::to_string(k + 1));
    meta.emplace_back("terms", std::to_string(cfg.run.path_terms));
    meta.emplace_back("A", format_number(a));
    meta.emplace_back("B", format_number(b));
    write_metadata(out, meta);
    out << "x,phi\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
      out << format_number(xs[i]) << "," << format_number(psi[i] + p.boundary_line(xs[i], a, b))
          << "\n";
  }
  log << "wrote " << res.files.size() << " path files to " << cfg.output.directory.string() << "\n";
  return res;
}

CommandResult cmd_density(const RunConfig& cfg, std::ostream& log) {
  CommandResult res;
  const auto orders = sorted_orders(cfg);
  const auto grid = shared_grid(cfg, orders);
  for (const auto& c : curves(cfg, orders, grid, log)) {
    auto out = open_output(cfg, "density_N" + std::to_string(c.N) + ".csv", res);
    write_density_csv(out, c, base_metadata(cfg, "density"));
    if (!mass_ok(c.mass())) {
      log << "warning: N=" << c.N << " curve mass " << c.mass()
          << " outside [0.98, 1.002]; widen the grid\n";
      res.exit_code = 2;
    }
  }
  return res;
}

CommandResult cmd_moments(const RunConfig& cfg, std::ostream& log) {
  CommandResult res;
  const auto orders = sorted_orders(cfg);
  const auto grid = shared_grid(cfg, orders);
  const auto cs = curves(cfg, orders, grid, log);
  auto out = open_output(cfg, "moments.csv", res);
  Metadata meta = base_metadata(cfg, "moments");
  meta.emplace_back("x", format_number(cfg.run.x));
  meta.emplace_back("t", format_number(cfg.run.t));
  meta.emplace_back("mc_samples", std::to_string(cfg.run.samples));
  write_metadata(out, meta);
  out << "N,mean_density,var_density,grid_mass,mean_mc,mean_mc_se,var_mc,var_mc_se\n";
  for (const auto& c : cs) {
    const auto mc = moments_mc(cfg.problem, cfg.run.x, cfg.run.t, c.N, cfg.run.samples,
                               cfg.run.seed + static_cast<std::uint64_t>(c.N));
    const auto r = moment_report(c, mc);
    out << r.N << "," << format_number(r.mean_density) << "," << format_number(r.var_density)
        << "," << format_number(r.grid_mass) << "," << format_number(mc.mean) << ","
        << format_number(mc.mean_se) << "," << format_number(mc.variance) << ","
        << format_number(mc.variance_se) << "\n";
    log << "N=" << r.N << " mean " << r.mean_density << " var " << r.var_density << " (mc "
        << mc.mean << " / " << mc.variance << ")\n";
  }
  return res;
}

CommandResult cmd_converge(const RunConfig& cfg, std::ostream& log) {
  CommandResult res;
  const auto orders = sorted_orders(cfg);
  if (orders.size() < 2) throw InvalidParameter("converge needs at least two orders in run.N");
  const auto grid = shared_grid(cfg, orders);
  const auto cs = curves(cfg, orders, grid, log);
  auto out = open_output(cfg, "converge.csv", res);
  Metadata meta = base_metadata(cfg, "converge");
  meta.emplace_back("x", format_number(cfg.run.x));
  meta.emplace_back("t", format_number(cfg.run.t));
  meta.emplace_back("grid_points", std::to_string(grid.size()));
  write_metadata(out, meta);
  out << "N,N_next,sup_diff,bound\n";
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    const double d = sup_diff(cs[i], cs[i + 1]);
    const auto b = tail_bound(cfg.problem, cfg.run.x, cfg.run.t, cs[i].N);
    out << cs[i].N << "," << cs[i + 1].N << "," << format_number(d) << ","
        << (b ? format_number(*b) : std::string()) << "\n";
    log << "N=" << cs[i].N << " -> " << cs[i + 1].N << ": sup diff " << d;
    if (b) log << " (bound " << *b << ")";
    log << "\n";
  }
  return res;
}

CommandResult cmd_check(const RunConfig& cfg, std::ostream& log) {
  CommandResult res;
  const auto report = classify(cfg.problem, cfg.run.t);
  const std::string text = report.render();
  auto out = open_output(cfg, "check.txt", res);
  write_metadata(out, base_metadata(cfg, "check"));
  out << text;
  log << text;
  return res;
}

}  // namespace heatdens::cli
