// Command-line front end: solve single instances, enumerate RIC/ROC
// constants, evaluate recovery guarantees, build and verify the tight
// instance, and run experiment sweeps.
//
// Exit codes: 0 success, 1 invalid input, 2 enumeration budget exceeded,
// 3 solver failed to converge.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>

#include "wl1/harness.hpp"
#include "wl1/io.hpp"
#include "wl1/sharpness.hpp"

namespace {

int run_solve(const std::string& matrix_path, const std::string& y_path,
              const std::string& weights_path, const std::string& estimate_path, double omega,
              const std::string& kind, double eta, const std::string& out_path) {
  const wl1::Matrix A = wl1::io::read_matrix_csv(matrix_path);
  const wl1::Vector y = wl1::io::read_vector(y_path);

  wl1::Vector w;
  if (!weights_path.empty()) {
    w = wl1::io::read_vector(weights_path);
  } else if (!estimate_path.empty()) {
    const wl1::IndexSet est = wl1::io::read_index_set(estimate_path);
    w = wl1::make_weights(wl1::make_support_estimate(est, A.cols()), omega).w;
  } else {
    w = wl1::Vector::Ones(A.cols());
  }

  wl1::SolverResult r;
  if (kind == "exact")
    r = wl1::solve_weighted_bp(A, y, w);
  else if (kind == "l2")
    r = wl1::solve_weighted_bpdn(A, y, w, eta);
  else if (kind == "ds")
    r = wl1::solve_weighted_ds(A, y, w, eta);
  else
    throw std::invalid_argument("solve: kind must be exact, l2 or ds");

  std::cout << wl1::io::to_json(r).dump(2) << '\n';
  if (!out_path.empty()) wl1::io::write_vector(out_path, r.x_hat);
  return r.status == wl1::SolveStatus::kOptimal ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-l1 sparse recovery toolkit"};
  app.require_subcommand(1);

  // --- solve ---------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "solve one weighted-l1 instance from files");
  std::string matrix_path, y_path, weights_path, estimate_path, out_path;
  std::string kind = "exact";
  double omega = 1.0, eta = 0.0;
  solve->add_option("--matrix", matrix_path, "matrix CSV (row-major, no header)")->required();
  solve->add_option("--y", y_path, "measurement vector (one value per line)")->required();
  solve->add_option("--weights", weights_path, "explicit weight vector file");
  solve->add_option("--estimate", estimate_path, "support-estimate file (comma-separated 0-based indices)");
  solve->add_option("--omega", omega, "weight on the estimated support (with --estimate)");
  solve->add_option("--kind", kind, "constraint: exact | l2 | ds")->check(CLI::IsMember({"exact", "l2", "ds"}));
  solve->add_option("--eta", eta, "constraint radius for l2/ds");
  solve->add_option("--out", out_path, "write the recovered vector here");

  // --- rip -----------------------------------------------------------------
  auto* rip = app.add_subcommand("rip", "exact RIC/ROC of a matrix by enumeration");
  std::string rip_matrix;
  wl1::Index delta_k = 0, theta_k1 = 0, theta_k2 = 0;
  std::uint64_t budget = wl1::kDefaultSubsetBudget;
  int rand_trials = 0;
  std::uint64_t rand_seed = 1;
  rip->add_option("--matrix", rip_matrix, "matrix CSV")->required();
  rip->add_option("--delta", delta_k, "order k for delta_k");
  rip->add_option("--theta", theta_k1, "first ROC order k1 (requires --theta2)");
  rip->add_option("--theta2", theta_k2, "second ROC order k2");
  rip->add_option("--budget", budget, "subset enumeration budget");
  rip->add_option("--randomized", rand_trials, "sampled lower bound with this many trials instead");
  rip->add_option("--seed", rand_seed, "seed for --randomized");

  // --- bounds ----------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "guarantee constants from scalar inputs");
  wl1::Index bk = 1, ba = 1, bb = 1, est_size = 0, overlap = 0;
  double bomega = 1.0, bdelta = 0.0, btheta = 0.0;
  bounds->add_option("--k", bk, "sparsity level k")->required();
  bounds->add_option("--a", ba, "condition order a")->required();
  bounds->add_option("--b", bb, "condition order b")->required();
  bounds->add_option("--omega", bomega, "weight omega in [0,1]")->required();
  bounds->add_option("--est-size", est_size, "|T~| = rho*k")->required();
  bounds->add_option("--overlap", overlap, "|T~ ∩ T0| = alpha*rho*k")->required();
  bounds->add_option("--delta-a", bdelta, "delta_a of the matrix")->required();
  bounds->add_option("--theta-ab", btheta, "theta_{a,b} of the matrix")->required();

  // --- sharpness -------------------------------------------------------------
  auto* sharp = app.add_subcommand("sharpness", "build and verify the tight instance");
  wl1::Index sN = 8, sk = 4, sa = 2, sb = 2;
  long long srho_num = 1, srho_den = 1, salpha_num = 1, salpha_den = 1;
  double somega = 0.0;
  std::string export_dir;
  std::uint64_t sharp_budget = wl1::kDefaultSubsetBudget;
  sharp->add_option("--N", sN, "ambient dimension")->required();
  sharp->add_option("--k", sk, "sparsity level")->required();
  sharp->add_option("--a", sa, "condition order a")->required();
  sharp->add_option("--b", sb, "condition order b")->required();
  sharp->add_option("--rho-num", srho_num, "rho numerator");
  sharp->add_option("--rho-den", srho_den, "rho denominator");
  sharp->add_option("--alpha-num", salpha_num, "alpha numerator");
  sharp->add_option("--alpha-den", salpha_den, "alpha denominator");
  sharp->add_option("--omega", somega, "weight omega");
  sharp->add_option("--budget", sharp_budget, "subset enumeration budget");
  sharp->add_option("--export-dir", export_dir, "write A.csv, xi1.csv, eta.csv, gamma.csv, estimate.txt here");

  // --- sweep -----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "run an experiment sweep from a JSON config");
  std::string config_path;
  sweep->add_option("--config", config_path, "ExperimentConfig JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(matrix_path, y_path, weights_path, estimate_path, omega, kind, eta,
                       out_path);

    if (rip->parsed()) {
      const wl1::Matrix A = wl1::io::read_matrix_csv(rip_matrix);
      nlohmann::ordered_json out;
      if (delta_k > 0) {
        if (rand_trials > 0)
          out["delta_lower_bound"] =
              wl1::randomized_lower_bound_delta(A, delta_k, rand_trials, rand_seed);
        else
          out["delta"] = wl1::io::to_json(wl1::compute_delta(A, delta_k, budget));
      }
      if (theta_k1 > 0) {
        if (theta_k2 <= 0) throw std::invalid_argument("rip: --theta requires --theta2");
        if (rand_trials > 0)
          out["theta_lower_bound"] =
              wl1::randomized_lower_bound_theta(A, theta_k1, theta_k2, rand_trials, rand_seed);
        else
          out["theta"] = wl1::io::to_json(wl1::compute_theta(A, theta_k1, theta_k2, budget));
      }
      if (out.empty()) throw std::invalid_argument("rip: nothing to compute (pass --delta or --theta)");
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (bounds->parsed()) {
      const auto in = wl1::guarantee_inputs_from_cardinalities(bk, ba, bb, bomega, est_size,
                                                               overlap, bdelta, btheta);
      nlohmann::ordered_json out = wl1::io::to_json(wl1::evaluate_guarantee(in));
      out["prop1"] = wl1::io::to_json(wl1::proposition1_compare(in));
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (sharp->parsed()) {
      const auto inst = wl1::build_counterexample(sN, sk, sa, sb,
                                                  wl1::Rational(srho_num, srho_den),
                                                  wl1::Rational(salpha_num, salpha_den), somega);
      if (!export_dir.empty()) {
        wl1::io::write_matrix_csv(export_dir + "/A.csv", inst.A);
        wl1::io::write_vector(export_dir + "/xi1.csv", inst.xi1);
        wl1::io::write_vector(export_dir + "/eta.csv", inst.eta_vec);
        wl1::io::write_vector(export_dir + "/gamma.csv", inst.gamma_vec);
        std::ofstream est_out(export_dir + "/estimate.txt");
        est_out << wl1::io::format_index_set(inst.estimate.indices) << '\n';
      }
      std::cout << wl1::io::to_json(wl1::verify_counterexample(inst, sharp_budget)).dump(2) << '\n';
      return 0;
    }

    if (sweep->parsed()) {
      wl1::run_sweep(wl1::load_config(config_path));
      return 0;
    }
  } catch (const wl1::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
