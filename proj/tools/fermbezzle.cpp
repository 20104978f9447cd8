// Copyright 2026 The Fermbezzle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermbezzle/bounds.hpp"
#include "fermbezzle/embezzle.hpp"
#include "fermbezzle/fock.hpp"
#include "fermbezzle/fuzz.hpp"
#include "fermbezzle/io.hpp"
#include "fermbezzle/spectra.hpp"

namespace fbz = fermbezzle;

namespace {

/// Distinguishes "the run worked but the checked inequality failed" (exit 1)
/// from usage/input errors (exit 2).
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_cap() {
  if (const char* env = std::getenv("FERMBEZZLE_FOCK_CAP")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return fbz::fock::kDefaultCap;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (out.empty()) throw fbz::Error("empty integer list");
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    fbz::io::write_text_file(out_path, text);
}

double exact_protocol_distance(const fbz::embezzle::EmbezzlementPlan& plan,
                               int cap) {
  const fbz::Covariance k = fbz::Covariance::validate(plan.k_matrix);
  const fbz::Covariance f = fbz::Covariance::validate(plan.f_matrix);
  const fbz::Covariance g = fbz::Covariance::validate(plan.g_matrix);
  const fbz::Covariance a = fbz::direct_sum(k, f);
  const fbz::Covariance b = fbz::direct_sum(k, g);
  const fbz::Matrix after = fbz::hermitian_part(
      plan.unitary * a.matrix() * plan.unitary.adjoint());
  Eigen::SelfAdjointEigenSolver<fbz::Matrix> es(after);
  const int n = static_cast<int>(after.rows());
  fbz::RealVector w(n);
  fbz::Matrix v(n, n);
  for (int i = 0; i < n; ++i) {
    w[i] = std::clamp(es.eigenvalues()[n - 1 - i], 0.0, 1.0);
    v.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  const fbz::Covariance rotated = fbz::Covariance::from_eigensystem(w, v);
  return fbz::fock::trace_distance(fbz::fock::gaussian_state(rotated, cap),
                                   fbz::fock::gaussian_state(b, cap));
}

int run(int argc, char** argv) {
  CLI::App app{"fermbezzle: Gaussian embezzlement of fermionic entanglement "
               "- constructions, certified bounds, exact verification"};
  app.require_subcommand(1);
  int cap = default_cap();
  app.add_option("--cap-override", cap,
                 "override the Fock mode cap (default 12 or "
                 "FERMBEZZLE_FOCK_CAP)");

  // spectrum gen
  auto* spectrum = app.add_subcommand("spectrum", "spectrum generators");
  spectrum->require_subcommand(1);
  auto* gen = spectrum->add_subcommand("gen", "generate a covariance");
  std::string gen_model, gen_out;
  int gen_n = 0, gen_l = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--model", gen_model, "ladder | xx | random")->required();
  gen->add_option("--n", gen_n, "mode count (ladder, random)");
  gen->add_option("--L", gen_l, "chain length (xx)");
  gen->add_option("--seed", gen_seed, "seed (random)");
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->callback([&] {
    fbz::Covariance c = [&] {
      if (gen_model == "ladder") {
        if (gen_n < 1) throw fbz::Error("ladder needs --n >= 1");
        return fbz::spectra::ladder(gen_n);
      }
      if (gen_model == "xx") {
        if (gen_l < 4) throw fbz::Error("xx needs --L >= 4 (even)");
        return fbz::spectra::xx_chain_half(gen_l);
      }
      if (gen_model == "random") {
        if (gen_n < 1) throw fbz::Error("random needs --n >= 1");
        return fbz::spectra::random_covariance(gen_n, gen_seed);
      }
      throw fbz::UnknownModel("unknown model: " + gen_model);
    }();
    emit(gen_out, fbz::io::matrix_to_json(c.matrix(), "passive") + "\n");
  });

  // bounds verify
  auto* boundsc = app.add_subcommand("bounds", "distance-bound suites");
  boundsc->require_subcommand(1);
  auto* verify = boundsc->add_subcommand(
      "verify", "sandwich bounds vs the exact Fock oracle");
  long vf_trials = 100;
  int vf_max_modes = 6;
  std::uint64_t vf_seed = 1;
  std::string vf_out;
  verify->add_option("--trials", vf_trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-modes", vf_max_modes);
  verify->add_option("--seed", vf_seed);
  verify->add_option("--out", vf_out, "CSV path (default stdout)");
  verify->callback([&] {
    if (vf_max_modes < 1 || vf_max_modes > cap)
      throw fbz::Error("--max-modes must lie in [1, cap]");
    fbz::io::CsvWriter csv({"eta", "lower", "exact", "upper", "pass"});
    fbz::Rng rng(vf_seed);
    long bad = 0;
    for (long t = 0; t < vf_trials; ++t) {
      const int n =
          std::uniform_int_distribution<int>(1, vf_max_modes)(rng);
      const fbz::Covariance a = fbz::fuzz::random_covariance_rng(n, rng);
      const fbz::Covariance b = fbz::fuzz::random_covariance_rng(n, rng);
      const auto rep = fbz::bounds::sandwich(a, b);
      const double exact = fbz::fock::trace_distance(
          fbz::fock::gaussian_state(a, cap), fbz::fock::gaussian_state(b, cap));
      const bool pass =
          rep.lower - 1e-9 <= exact && exact <= rep.upper + 1e-9;
      if (!pass) ++bad;
      csv.add_row({fbz::io::format_double(rep.eta),
                   fbz::io::format_double(rep.lower),
                   fbz::io::format_double(exact),
                   fbz::io::format_double(rep.upper), pass ? "1" : "0"});
    }
    emit(vf_out, csv.str());
    if (bad > 0)
      throw VerificationFailure(std::to_string(bad) +
                                " sandwich rows failed");
  });

  // embezzle
  auto* emb = app.add_subcommand(
      "embezzle", "construct the matching unitary and certify its error");
  std::string emb_k, emb_f, emb_g, emb_out;
  bool emb_verify = false;
  emb->add_option("--K", emb_k, "embezzler covariance JSON")->required();
  emb->add_option("--F", emb_f, "start covariance JSON")->required();
  emb->add_option("--G", emb_g, "target covariance JSON")->required();
  emb->add_option("--out", emb_out, "plan JSON path");
  emb->add_flag("--verify", emb_verify,
                "append the exact Fock distance (total modes <= 9)");
  emb->callback([&] {
    const fbz::Covariance k = fbz::io::load_covariance(emb_k);
    const fbz::Covariance f = fbz::io::load_covariance(emb_f);
    const fbz::Covariance g = fbz::io::load_covariance(emb_g);
    const auto plan = fbz::embezzle::construct_plan(k, f, g);
    if (!emb_out.empty())
      fbz::io::write_text_file(emb_out, fbz::io::plan_to_json(plan) + "\n");
    auto flag = [](double v) {
      return v > 1.0 ? "  [vacuous (trivially satisfied)]" : "";
    };
    std::cout << "modes: n=" << k.dim() << " d=" << f.dim() << "\n"
              << "eps (measured density): "
              << fbz::io::format_double(plan.eps) << "\n"
              << "delta: " << fbz::io::format_double(plan.delta) << "\n"
              << "n_eps (selected subspace): " << plan.subspace_indices.size()
              << ", active in window: " << plan.active_indices.size() << "\n"
              << "eta achieved: " << fbz::io::format_double(plan.eta_achieved)
              << "\n"
              << "certified bound sqrt(2) eta: "
              << fbz::io::format_double(std::sqrt(2.0) * plan.eta_achieved)
              << flag(std::sqrt(2.0) * plan.eta_achieved) << "\n"
              << "theorem bound 11 d eps^(1/4): "
              << fbz::io::format_double(plan.theorem_bound)
              << flag(plan.theorem_bound) << "\n";
    if (emb_verify) {
      if (k.dim() + f.dim() <= 9) {
        const double exact = exact_protocol_distance(plan, cap);
        std::cout << "exact Fock trace distance: "
                  << fbz::io::format_double(exact) << "\n";
        if (exact > plan.certified_bound + 1e-9)
          throw VerificationFailure("exact distance exceeds the certificate");
      } else {
        std::cerr << "verify skipped: " << k.dim() + f.dim()
                  << " modes exceed the 9-mode oracle limit\n";
      }
    }
  });

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "embezzlement error vs system size (CSV of one row per cell)");
  std::string sw_model = "ladder", sw_n = "4,8,16,32,64", sw_d = "1",
              sw_out;
  sweep->add_option("--model", sw_model, "ladder | xx");
  sweep->add_option("--n", sw_n, "comma list of n (ladder) or L (xx)");
  sweep->add_option("--d", sw_d, "comma list of ancilla sizes");
  sweep->add_option("--out", sw_out, "CSV path (default stdout)");
  sweep->callback([&] {
    if (sw_model != "ladder" && sw_model != "xx")
      throw fbz::UnknownModel("unknown sweep model: " + sw_model);
    fbz::io::CsvWriter csv({"model", "n", "d", "eps_measured", "delta", "eta",
                            "certified_bound", "theorem_bound",
                            "exact_distance", "runtime_ms"});
    for (int n : parse_int_list(sw_n)) {
      for (int d : parse_int_list(sw_d)) {
        const auto t0 = std::chrono::steady_clock::now();
        const fbz::Covariance k = sw_model == "ladder"
                                      ? fbz::spectra::ladder(n)
                                      : fbz::spectra::xx_chain_half(n);
        // Canonical hardest pair: fully occupied to vacuum on d modes.
        const fbz::Covariance f = fbz::Covariance::identity(d);
        const fbz::Covariance g = fbz::Covariance::zero(d);
        const auto plan = fbz::embezzle::construct_plan(k, f, g);
        std::string exact_cell;
        if (k.dim() + d <= 9)
          exact_cell =
              fbz::io::format_double(exact_protocol_distance(plan, cap));
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        csv.add_row({sw_model, std::to_string(n), std::to_string(d),
                     fbz::io::format_double(plan.eps),
                     fbz::io::format_double(plan.delta),
                     fbz::io::format_double(plan.eta_achieved),
                     fbz::io::format_double(plan.certified_bound),
                     fbz::io::format_double(plan.theorem_bound), exact_cell,
                     std::to_string(ms)});
      }
    }
    emit(sw_out, csv.str());
  });

  // lemma-fuzz
  auto* fuzzc = app.add_subcommand("lemma-fuzz",
                                   "randomized checks of the paper's lemmas");
  std::string fz_which;
  long fz_iters = 1000;
  std::uint64_t fz_seed = 1;
  fuzzc->add_option("--which", fz_which,
                    "list-sort | no-go | ps-trick | eta-props")
      ->required();
  fuzzc->add_option("--iterations", fz_iters);
  fuzzc->add_option("--seed", fz_seed);
  fuzzc->callback([&] {
    if (fz_iters < 1) throw fbz::Error("--iterations must be >= 1");
    fbz::fuzz::FuzzReport rep;
    if (fz_which == "list-sort")
      rep = fbz::fuzz::list_sort(fz_iters, fz_seed);
    else if (fz_which == "no-go")
      rep = fbz::fuzz::no_go(fz_iters, fz_seed);
    else if (fz_which == "ps-trick")
      rep = fbz::fuzz::ps_trick(fz_iters, fz_seed);
    else if (fz_which == "eta-props")
      rep = fbz::fuzz::eta_props(fz_iters, fz_seed);
    else
      throw fbz::UnknownModel("unknown fuzz target: " + fz_which);
    std::cout << fz_which << ": " << rep.iterations - rep.failures << "/"
              << rep.iterations << " passed, " << rep.failures
              << " failed\n";
    if (rep.failures > 0) {
      std::cerr << "first failure: " << rep.detail << "\n";
      throw VerificationFailure("fuzz failures in " + fz_which);
    }
  });

  // number-dist
  auto* nd = app.add_subcommand(
      "number-dist",
      "embezzler fermion-number distribution before vs after the protocol");
  std::string nd_plan;
  nd->add_option("--plan", nd_plan, "plan JSON path")->required();
  nd->callback([&] {
    const auto plan = fbz::io::load_plan(nd_plan);
    const fbz::Covariance k = fbz::Covariance::validate(plan.k_matrix);
    const fbz::Covariance f = fbz::Covariance::validate(plan.f_matrix);
    const int n = k.dim();
    const fbz::Covariance a = fbz::direct_sum(k, f);
    const fbz::Matrix after = fbz::hermitian_part(
        plan.unitary * a.matrix() * plan.unitary.adjoint());
    fbz::RealVector lam =
        fbz::hermitian_eigenvalues_desc(after.topLeftCorner(n, n))
            .cwiseMax(0.0)
            .cwiseMin(1.0);
    const auto before = fbz::fock::number_distribution(k);
    const auto after_dist =
        fbz::fock::number_distribution(fbz::Covariance::diagonal(lam));
    const double tv = fbz::fock::total_variation(before, after_dist);
    const double shift = fbz::fock::mean(after_dist) - fbz::fock::mean(before);
    std::cout << "total-variation distance: " << fbz::io::format_double(tv)
              << "\n"
              << "mean fermion-number shift: " << fbz::io::format_double(shift)
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
