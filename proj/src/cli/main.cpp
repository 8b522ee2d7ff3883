#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "homoflow/asympt.hpp"
#include "homoflow/branch.hpp"
#include "homoflow/csvio.hpp"
#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"
#include "homoflow/flowfield.hpp"
#include "homoflow/pressure.hpp"
#include "homoflow/sweeps.hpp"
#include "homoflow/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace homoflow;

namespace {

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  json cfg;
  in >> cfg;
  return cfg;
}

MuGamma params_from(const json& j) {
  return {j.at("mu").get<double>(), j.at("gamma").get<double>()};
}

std::vector<double> uniform_grid(const json& cfg) {
  const double lo = cfg.value("x_lo", -0.99);
  const double hi = cfg.value("x_hi", 0.99);
  const int n = cfg.value("n", 101);
  if (!(lo < hi) || !(lo > -1.0) || !(hi <= 1.0) || n < 2)
    throw ConfigError("bad x grid: need -1 < x_lo < x_hi <= 1 and n >= 2");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

std::string seq_name(const char* stem, std::size_t k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%03zu.csv", stem, k);
  return buf;
}

constexpr const char* kProfileHeader = "x,U_theta,U_phi,u_r,u_theta,u_phi,p";

int cmd_exact(const json& cfg, const fs::path& out) {
  std::vector<MuGamma> ps;
  const json& jp = cfg.at("params");
  if (jp.is_array())
    for (const auto& e : jp) ps.push_back(params_from(e));
  else
    ps.push_back(params_from(jp));
  const auto xs = uniform_grid(cfg);

  for (std::size_t k = 0; k < ps.size(); ++k) {
    const MuGamma p = ps[k];
    if (classify(p).region == Region::Exterior) {
      const double ds = delta_star(p);
      if (xs.front() <= ds)
        throw OutOfDomain("x range crosses the blow-up point: delta_star = " +
                          csvio::format_g17(ds));
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
      const FieldSample f = field_at(p, x);
      const double U = eval_U_theta(p, x);
      rows.push_back({x, U, 0.0, f.u_r, f.u_theta, 0.0, f.p});
    }
    csvio::write_csv((out / seq_name("exact", k)).string(), kProfileHeader,
                     rows);
  }
  return 0;
}

int cmd_branch(const json& cfg, const fs::path& out) {
  const MuGamma p = params_from(cfg.at("params"));
  std::vector<double> betas;
  for (const auto& b : cfg.at("betas")) betas.push_back(b.get<double>());
  BranchOptions opt;
  opt.grid_n = cfg.value("grid_n", 256);
  opt.beta1 = cfg.value("beta1", 0.0);
  opt.newton_tol = cfg.value("newton_tol", 1e-10);
  opt.max_iter = cfg.value("max_iter", 30);
  const auto xs = uniform_grid(cfg);

  std::vector<std::vector<double>> summary;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const BranchPoint bp = solve_branch(p, betas[k], opt);
    summary.push_back({bp.beta, bp.mu_hat, bp.newton_residual, bp.sup_Uphi});
    const auto pr = pressure_at(bp.total, bp.mu_hat, xs);
    std::vector<std::vector<double>> rows;
    rows.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      const double st = std::sqrt(1 - x * x);
      rows.push_back({x, bp.total.utheta(x), bp.total.uphi(x),
                      bp.total.dutheta(x), bp.total.utheta(x) / st,
                      bp.total.uphi(x) / st, pr[i]});
    }
    csvio::write_csv((out / seq_name("branch", k)).string(), kProfileHeader,
                     rows);
  }
  csvio::write_csv((out / "branch_summary.csv").string(),
                   "beta,mu_hat,newton_residual,sup_Uphi", summary);
  return 0;
}

const char* case_name(ExpansionCase c) {
  switch (c) {
    case ExpansionCase::Generic: return "Generic";
    case ExpansionCase::TauZeroLog: return "TauZeroLog";
    case ExpansionCase::TauTwoLog4: return "TauTwoLog4";
    case ExpansionCase::TauTwoLog0: return "TauTwoLog0";
    case ExpansionCase::TauIn23: return "TauIn23";
    case ExpansionCase::TauGe3: return "TauGe3";
  }
  return "Unknown";
}

void append_fit(std::string& body, const std::string& prefix,
                const ExpansionFit& fit) {
  body += prefix + "case," + case_name(fit.case_tag) + "\n";
  body += prefix + "pole_value," + csvio::format_g17(fit.pole_value) + "\n";
  body += prefix + "alpha0," + csvio::format_g17(fit.alpha0) + "\n";
  for (const auto& [k, v] : fit.coefficients)
    body += prefix + k + "," + csvio::format_g17(v) + "\n";
  body += prefix + "residual_norm," + csvio::format_g17(fit.residual_norm) + "\n";
  body += prefix + "remainder_edge," + csvio::format_g17(fit.remainder_edge) + "\n";
}

int cmd_asympt(const json& cfg, const fs::path& out) {
  const MuGamma p = params_from(cfg.at("params"));
  const double beta = cfg.value("beta", 0.0);
  WindowSpec win;
  if (cfg.contains("window")) {
    const json& w = cfg.at("window");
    win.lo = w.value("lo", win.lo);
    win.hi = w.value("hi", win.hi);
    win.n = w.value("n", win.n);
  }

  SolutionProfile prof;
  if (beta == 0.0) {
    std::vector<double> xs;
    for (double k = 12.0; k >= 1.25; k -= 0.25)
      xs.push_back(-1 + std::pow(10.0, -k));
    for (int j = 0; j <= 240; ++j) xs.push_back(-0.9 + j * 1.8999 / 240);
    prof = closed_form_profile(p, xs);
  } else {
    prof = solve_branch(p, beta).total;
  }

  std::string body = "key,value\n";
  const ExpansionFit tfit = fit_theta_expansion(prof, win);
  append_fit(body, "theta_", tfit);
  if (beta != 0.0) {
    const ExpansionFit pfit = fit_phi_expansion(prof, tfit, win);
    append_fit(body, "phi_", pfit);
  }
  csvio::write_text_atomic((out / "asympt.csv").string(), body);
  return 0;
}

int cmd_jetmap(const json& cfg, const fs::path& out) {
  JetmapSpec spec;
  if (cfg.contains("mu")) {
    spec.mu_lo = cfg.at("mu").value("lo", spec.mu_lo);
    spec.mu_hi = cfg.at("mu").value("hi", spec.mu_hi);
    spec.n_mu = cfg.at("mu").value("n", spec.n_mu);
  }
  if (cfg.contains("gamma")) {
    spec.gamma_lo = cfg.at("gamma").value("lo", spec.gamma_lo);
    spec.gamma_hi = cfg.at("gamma").value("hi", spec.gamma_hi);
    spec.n_gamma = cfg.at("gamma").value("n", spec.n_gamma);
  }
  if (spec.n_mu < 0 || spec.n_gamma < 0)
    throw ConfigError("jetmap: negative grid count");
  const bool parallel = cfg.value("parallel", true);
  const auto rows = parallel ? jetmap_parallel(spec) : jetmap_serial(spec);
  std::vector<std::vector<double>> out_rows;
  out_rows.reserve(rows.size());
  for (const auto& r : rows)
    out_rows.push_back({r[0], r[1], r[2], r[3], r[4]});
  csvio::write_csv((out / "jetmap.csv").string(),
                   "mu,gamma,in_Ip,u_r_north,p_slope_north", out_rows);
  return 0;
}

int cmd_streamlines(const json& cfg, const fs::path& out) {
  const json& jf = cfg.at("field");
  const MuGamma p = params_from(jf.at("params"));
  const double beta = jf.value("beta", 0.0);
  CrossSection field = beta == 0.0
                           ? CrossSection::from_exact(p)
                           : CrossSection::from_profile(solve_branch(p, beta).total);

  TraceOptions opt;
  const json& ann = cfg.at("annulus");
  opt.r_min = ann.at("r_min").get<double>();
  opt.r_max = ann.at("r_max").get<double>();
  if (!(opt.r_min > 0) || !(opt.r_max > opt.r_min))
    throw ConfigError("streamlines: need 0 < r_min < r_max");
  opt.h_over_rmin = cfg.value("h_over_rmin", 1e-3);
  opt.max_steps = cfg.value("max_steps", std::size_t{100000});

  std::vector<Streamline> lines;
  for (const auto& seed : cfg.at("seeds")) {
    if (!seed.is_array() || seed.size() != 2)
      throw ConfigError("streamlines: each seed is [x2, x3]");
    lines.push_back(trace_streamline(field, seed[0].get<double>(),
                                     seed[1].get<double>(), opt));
  }
  csvio::write_streamline_csv((out / "streamlines.csv").string(), lines);
  if (cfg.value("svg", false))
    csvio::write_streamline_svg((out / "streamlines.svg").string(), lines,
                                opt.r_max);
  return 0;
}

int cmd_verify(const json& cfg) {
  const bool inject = cfg.value("inject_error", false);
  const auto results = run_verification(inject);
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s %s (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(-1)-homogeneous axisymmetric flow toolbox"};
  app.require_subcommand(1);
  std::string config_path, out_dir = ".";
  const char* names[] = {"exact",  "branch",      "asympt",
                         "jetmap", "streamlines", "verify"};
  const char* descs[] = {"closed-form no-swirl profiles to CSV",
                         "swirl branch continuation runs",
                         "pole expansion fits",
                         "jet classification sweep",
                         "cross-section streamline export",
                         "library invariant suite"};
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("--config", config_path, "JSON config path")->required();
    sub->add_option("--out", out_dir, "output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const json cfg = load_config(config_path);
    const fs::path out(out_dir);
    fs::create_directories(out);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "exact") return cmd_exact(cfg, out);
    if (cmd == "branch") return cmd_branch(cfg, out);
    if (cmd == "asympt") return cmd_asympt(cfg, out);
    if (cmd == "jetmap") return cmd_jetmap(cfg, out);
    if (cmd == "streamlines") return cmd_streamlines(cfg, out);
    return cmd_verify(cfg);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const NoConvergence& e) {
    std::fprintf(stderr, "no convergence: %s\n", e.what());
    return 4;
  } catch (const RegionUnsupported& e) {
    std::fprintf(stderr, "region unsupported: %s\n", e.what());
    return 5;
  } catch (const Error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 3;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
