// Batch front end: every computation is exposed as a subcommand writing
// deterministic CSV/JSON artifacts plus a checksum manifest.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "sg/bifurcation.hpp"
#include "sg/bvp.hpp"
#include "sg/dynamics.hpp"
#include "sg/io.hpp"
#include "sg/slowfast.hpp"
#include "sg/spectrum.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Output {
  fs::path dir;
  json manifest;
  std::vector<std::string> files;

  void csv(const std::string &name, const std::vector<std::string> &header,
           const std::vector<std::vector<double>> &cols) {
    fs::create_directories(dir);
    sg::write_csv((dir / name).string(), header, cols);
    files.push_back(name);
  }
  void js(const std::string &name, const json &j) {
    fs::create_directories(dir);
    std::ofstream f(dir / name);
    f << j.dump(2) << "\n";
    files.push_back(name);
  }
  void finish(const json &config) {
    manifest["config"] = config;
    manifest["format"] = "fmt17 CSV / JSON";
    json sums = json::object();
    for (const auto &f : files) sums[f] = sg::fnv1a_file((dir / f).string());
    manifest["checksums"] = sums;
    std::ofstream f(dir / "manifest.json");
    f << manifest.dump(2) << "\n";
  }
};

sg::InhomogeneityProfile make_profile(const std::string &kind, double Delta,
                                      double delta, double d) {
  if (kind == "piecewise") return sg::InhomogeneityProfile::piecewise(Delta, d);
  if (kind == "tanh") return sg::InhomogeneityProfile::tanh_hat(Delta, delta, d);
  if (kind == "gardner")
    return sg::InhomogeneityProfile::gardner(Delta, delta, d);
  throw CLI::ValidationError("--profile must be piecewise|tanh|gardner");
}

// Apply file values for options the user did not pass on the command line.
void apply_config(CLI::App *cmd, const json &params) {
  for (auto &[key, val] : params.items()) {
    CLI::Option *opt = cmd->get_option_no_throw("--" + key);
    if (!opt || opt->count() > 0) continue;
    std::string s = val.is_string() ? val.get<std::string>() : val.dump();
    opt->add_result(s);
    opt->run_callback();
  }
}

json config_echo(const std::string &command, CLI::App *cmd) {
  json p = json::object();
  for (const CLI::Option *opt : cmd->get_options()) {
    if (opt->get_name().size() < 3 || opt->count() == 0) continue;
    p[opt->get_name().substr(2)] = opt->results().back();
  }
  return {{"command", command}, {"parameters", p}};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Stationary fronts, pitchfork loci, and dynamics of the coupled "
               "inhomogeneous sine-Gordon system"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  int threads = 0;
  bool verbose = false;
  app.add_option("--config", config_path, "JSON config file (flags override)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_flag("--verbose", verbose, "progress on stderr");

  // ---- front ----
  auto *c_front = app.add_subcommand("front", "stationary scalar/coupled front");
  double f_d = 1.0, f_Delta = 1.0, f_delta = 1.0 / 15.0, f_alpha = 0.25;
  std::string f_profile = "piecewise", f_method = "matching";
  c_front->add_option("--d", f_d);
  c_front->add_option("--Delta", f_Delta);
  c_front->add_option("--delta", f_delta);
  c_front->add_option("--alpha", f_alpha);
  c_front->add_option("--profile", f_profile, "piecewise|tanh|gardner");
  c_front->add_option("--method", f_method, "matching|bvp");

  // ---- spectrum ----
  auto *c_spec = app.add_subcommand("spectrum", "leading eigenpair of the front");
  double s_d = 1.0, s_Delta = 1.0;
  std::string s_method = "numeric";
  c_spec->add_option("--d", s_d);
  c_spec->add_option("--Delta", s_Delta);
  c_spec->add_option("--method", s_method, "implicit|numeric");

  // ---- locus ----
  auto *c_locus = app.add_subcommand("locus", "pitchfork locus curve");
  std::string l_plane = "alpha-delta", l_profile = "piecewise",
              l_method = "numeric";
  double l_fixed = 1.0, l_lo = 0.3, l_hi = 5.0, l_delta = 1.0 / 15.0;
  int l_n = 24;
  c_locus->add_option("--plane", l_plane, "alpha-delta|d-delta|alpha-d");
  c_locus->add_option("--fixed", l_fixed, "value of the held parameter");
  c_locus->add_option("--d", l_fixed, "alias for --fixed in the alpha-delta plane");
  c_locus->add_option("--lo", l_lo);
  c_locus->add_option("--hi", l_hi);
  c_locus->add_option("--n", l_n);
  c_locus->add_option("--profile", l_profile, "piecewise|tanh");
  c_locus->add_option("--delta", l_delta);
  c_locus->add_option("--method", l_method, "numeric|closed");

  // ---- branch ----
  auto *c_branch = app.add_subcommand("branch", "continuation / pitchfork diagram");
  double b_d = 1.0, b_Delta = 1.0, b_alpha = 0.25, b_from = 0.05, b_to = 0.45,
         b_delta = 1.0 / 15.0;
  std::string b_param = "alpha", b_profile = "piecewise";
  c_branch->add_option("--d", b_d);
  c_branch->add_option("--Delta", b_Delta);
  c_branch->add_option("--alpha", b_alpha, "held alpha when continuing in d/Delta");
  c_branch->add_option("--param", b_param, "alpha|d|Delta");
  c_branch->add_option("--from", b_from);
  c_branch->add_option("--to", b_to);
  c_branch->add_option("--profile", b_profile, "piecewise|tanh|gardner");
  c_branch->add_option("--delta", b_delta);

  // ---- simulate ----
  auto *c_sim = app.add_subcommand("simulate", "PDE time integration scenarios");
  std::string m_scenario = "separate";
  double m_T = 100.0, m_dx = 0.05, m_dt = 0.04;
  c_sim->add_option("--scenario", m_scenario, "separate|pin|bifurcate");
  c_sim->add_option("--T", m_T);
  c_sim->add_option("--dx", m_dx);
  c_sim->add_option("--dt", m_dt);

  // ---- slowfast ----
  auto *c_sf = app.add_subcommand("slowfast", "persistence ladder study");
  double sf_alpha = 0.1, sf_d = 1.0, sf_Delta = 1.0;
  std::string sf_branch = "trivial";
  std::vector<double> sf_deltas = {0.2, 0.1, 0.05, 0.025};
  c_sf->add_option("--alpha", sf_alpha);
  c_sf->add_option("--d", sf_d);
  c_sf->add_option("--Delta", sf_Delta);
  c_sf->add_option("--branch", sf_branch, "trivial|nontrivial");
  c_sf->add_option("--deltas", sf_deltas);

  for (CLI::App *sc : app.get_subcommands([](const CLI::App *) { return true; }))
    sc->fallthrough(); // allow global flags after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  CLI::App *cmd = app.get_subcommands().front();
  json file_cfg;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) {
      std::cerr << "cannot open config " << config_path << "\n";
      return 2;
    }
    try {
      f >> file_cfg;
      if (file_cfg.contains("command") &&
          file_cfg["command"].get<std::string>() != cmd->get_name()) {
        std::cerr << "config command mismatch\n";
        return 2;
      }
      if (file_cfg.contains("output_dir") && out_dir == "out")
        out_dir = file_cfg["output_dir"].get<std::string>();
      apply_config(cmd, file_cfg.value("parameters", json::object()));
    } catch (const json::exception &e) {
      std::cerr << "config parse error: " << e.what() << "\n";
      return 2;
    }
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  Output out;
  out.dir = out_dir;
  json echo = config_echo(cmd->get_name(), cmd);

  try {
    if (cmd == c_front) {
      sg::FrontSolution sol;
      if (f_method == "matching") {
        if (f_profile != "piecewise")
          throw CLI::ValidationError("matching method requires --profile piecewise");
        sol = sg::front_numeric(f_d, f_Delta);
      } else if (f_method == "bvp") {
        sg::BvpProblem prob;
        prob.profile = make_profile(f_profile, f_Delta, f_delta, f_d);
        prob.alpha = f_alpha;
        sol = sg::bvp_solve(prob, sg::bvp_initial_guess(prob));
      } else {
        throw CLI::ValidationError("--method must be matching|bvp");
      }
      out.csv("front.csv", {"x", "u", "p", "v", "q"},
              {sol.x, sol.u, sol.p, sol.v, sol.q});
      out.js("front.json",
             {{"d", sol.d},
              {"Delta", sol.Delta},
              {"alpha", sol.alpha},
              {"residual_norm", sol.residual_norm},
              {"v_norm_l2", sol.v_norm_l2()}});
    } else if (cmd == c_spec) {
      sg::FrontSolution f = sg::front_numeric(s_d, s_Delta);
      json j;
      if (s_method == "implicit") {
        if (s_d != 1.0)
          throw CLI::ValidationError("implicit method is the d = 1 relation");
        double L = sg::eig_d1_implicit(s_Delta);
        sg::EigenResult e = sg::eigenfunction_d1(s_Delta, L);
        j = {{"Lambda", L}, {"alpha_star", -L / 2}, {"A", e.A}, {"R", e.R}};
        out.csv("eigenfunction.csv", {"x", "psi"}, {e.x, e.psi});
      } else if (s_method == "numeric") {
        sg::EigenResult e = sg::eig_numeric(f);
        j = {{"Lambda", e.Lambda},
             {"alpha_star", -e.Lambda / 2},
             {"error_estimate", e.error_estimate},
             {"no_bound_state", e.no_bound_state}};
        out.csv("eigenfunction.csv", {"x", "psi"}, {e.x, e.psi});
      } else {
        throw CLI::ValidationError("--method must be implicit|numeric");
      }
      out.js("spectrum.json", j);
    } else if (cmd == c_locus) {
      std::vector<double> p1, p2, resid;
      if (l_method == "closed") {
        if (l_plane != "alpha-delta")
          throw CLI::ValidationError("closed-form locus lives in alpha-delta, d = 1");
        for (int i = 0; i < l_n; ++i) {
          double D = l_lo + (l_hi - l_lo) * i / std::max(1, l_n - 1);
          p1.push_back(D);
          p2.push_back(sg::locus_d1(D));
          resid.push_back(0.0);
        }
        out.csv("locus.csv", {"Delta", "alpha_star", "lambda_residual"},
                {p1, p2, resid});
      } else {
        sg::LocusPlane plane;
        std::vector<std::string> hdr;
        if (l_plane == "alpha-delta") {
          plane = sg::LocusPlane::AlphaDelta;
          hdr = {"Delta", "alpha_star", "lambda_residual"};
        } else if (l_plane == "d-delta") {
          plane = sg::LocusPlane::DDelta;
          hdr = {"Delta", "d_star", "lambda_residual"};
        } else if (l_plane == "alpha-d") {
          plane = sg::LocusPlane::AlphaD;
          hdr = {"d", "alpha_star", "lambda_residual"};
        } else {
          throw CLI::ValidationError("--plane must be alpha-delta|d-delta|alpha-d");
        }
        sg::ProfileKind kind = l_profile == "piecewise"
                                   ? sg::ProfileKind::Piecewise
                                   : sg::ProfileKind::TanhHat;
        sg::LocusCurve curve =
            sg::locus_numeric(plane, l_fixed, l_lo, l_hi, l_n, kind, l_delta);
        for (const auto &pt : curve.points) {
          p1.push_back(pt.p1);
          p2.push_back(pt.p2);
          resid.push_back(pt.lambda_residual);
        }
        out.csv("locus.csv", hdr, {p1, p2, resid});
      }
    } else if (cmd == c_branch) {
      sg::BvpProblem prob;
      prob.profile = make_profile(b_profile, b_Delta, b_delta, b_d);
      prob.alpha = b_alpha;
      sg::ContParam par;
      if (b_param == "alpha")
        par = sg::ContParam::alpha;
      else if (b_param == "d")
        par = sg::ContParam::d;
      else if (b_param == "Delta")
        par = sg::ContParam::Delta;
      else
        throw CLI::ValidationError("--param must be alpha|d|Delta");
      if (par == sg::ContParam::alpha) prob.alpha = b_from;
      sg::FrontSolution start = sg::bvp_solve(prob, sg::bvp_initial_guess(prob));
      sg::ContinuationResult cr =
          sg::bvp_continue(prob, par, b_from, b_to, start);
      std::vector<double> pv, vn, se, branch_id;
      for (const auto &bp : cr.points) {
        pv.push_back(bp.param_value);
        vn.push_back(bp.v_norm);
        se.push_back(bp.smallest_eig);
        branch_id.push_back(0.0);
      }
      // follow the nontrivial pair past each detected pitchfork (alpha only)
      json bifs = json::array();
      for (double bif : cr.bifurcation_params) {
        bifs.push_back(bif);
        if (par != sg::ContParam::alpha || bif >= b_to) continue;
        sg::BvpProblem at = prob;
        at.alpha = bif;
        sg::BranchSwitchResult sw =
            sg::switch_branch(at, std::min(b_to, bif + 0.01));
        sg::BvpProblem follow = prob;
        sg::ContinuationOptions nopts;
        nopts.monitor_eig = false;
        sg::ContinuationResult up = sg::bvp_continue(
            follow, sg::ContParam::alpha, std::min(b_to, bif + 0.01), b_to,
            sw.plus, nopts);
        for (const auto &bp : up.points) {
          pv.push_back(bp.param_value);
          vn.push_back(bp.v_norm);
          se.push_back(bp.smallest_eig);
          branch_id.push_back(1.0);
          pv.push_back(bp.param_value);
          vn.push_back(bp.v_norm);
          se.push_back(bp.smallest_eig);
          branch_id.push_back(-1.0);
        }
      }
      out.csv("branch.csv", {"param", "v_norm", "smallest_eig", "branch"},
              {pv, vn, se, branch_id});
      out.js("branch.json", {{"param", b_param}, {"bifurcations", bifs}});
    } else if (cmd == c_sim) {
      sg::ScenarioResult r = sg::simulate_scenario(m_scenario, m_T, m_dx, m_dt);
      out.csv("timeseries.csv", {"t", "kink_theta", "kink_psi", "energy"},
              {r.times, r.kink_theta, r.kink_psi, r.energies});
      out.csv("final_state.csv", {"x", "theta", "psi", "theta_t", "psi_t"},
              {r.final.x, r.final.theta, r.final.psi, r.final.theta_t,
               r.final.psi_t});
      out.js("simulate.json", {{"scenario", m_scenario},
                               {"alpha", r.alpha},
                               {"T", m_T},
                               {"metadata", r.metadata}});
    } else if (cmd == c_sf) {
      bool nontrivial = sf_branch == "nontrivial";
      if (!nontrivial && sf_branch != "trivial")
        throw CLI::ValidationError("--branch must be trivial|nontrivial");
      sg::PersistenceReport rep =
          sg::persistence_study(sf_alpha, sf_d, sf_Delta, sf_deltas, nontrivial);
      out.csv("ladder.csv", {"delta", "dist_u", "dist_v", "sigma_min"},
              {rep.deltas, rep.dist_u, rep.dist_v, rep.sigma_min});
      out.js("persistence.json",
             {{"fitted_order", rep.fitted_order},
              {"monotone", rep.monotone},
              {"hypotheses",
               {{"pu_minus", rep.hypotheses.pu_minus},
                {"pu_plus", rep.hypotheses.pu_plus},
                {"qv_minus", rep.hypotheses.qv_minus},
                {"qv_plus", rep.hypotheses.qv_plus},
                {"sigma_min", rep.hypotheses.sigma_min},
                {"u_slopes_ok", rep.hypotheses.u_slopes_ok},
                {"v_slopes_ok", rep.hypotheses.v_slopes_ok},
                {"jacobian_ok", rep.hypotheses.jacobian_ok}}}});
    }
    out.finish(echo);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    fs::create_directories(out.dir);
    std::ofstream f(out.dir / "error.json");
    json diag = {{"error", e.what()}, {"config", echo}};
    f << diag.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (verbose) std::cerr << "wrote " << out.files.size() << " artifacts\n";
  return 0;
}
