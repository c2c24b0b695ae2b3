// fent: exact and Monte Carlo Furstenberg entropy for product-odometer
// scenarios, entropy realization by theta-deformation, budget construction,
// and Krieger-type classification.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fent/classify.hpp"
#include "fent/entropy.hpp"
#include "fent/errors.hpp"
#include "fent/phi.hpp"
#include "fent/realize.hpp"
#include "fent/scenario.hpp"

namespace {

using namespace fent;

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file \"" + path + "\"");
  out << std::setprecision(17);
  return out;
}

void print_breakdown(const EntropyBreakdown& b) {
  std::cout << "base_term       " << b.base_term << "\n"
            << "fiber_integral  " << b.fiber_integral << "\n"
            << "total           " << b.total << "\n";
  for (const auto& [n, contribution] : b.per_coordinate)
    std::cout << "  coordinate " << n << ": " << contribution << "\n";
}

void print_estimate(const char* label, const McEstimate& e) {
  std::cout << label << " " << e.mean << "\n"
            << "stderr  " << e.stderror << "\n"
            << "samples " << e.samples << "\n"
            << "seed    " << e.seed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Furstenberg entropy toolkit"};
  app.get_formatter()->column_width(36);

  std::string scenario_path;
  app.add_option("scenario", scenario_path, "scenario file (JSON)")->required();

  long long samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
  auto add_mc_flags = [&](CLI::App* cmd) {
    cmd->add_option("--samples", samples, "Monte Carlo sample count");
    cmd->add_option("--seed", seed, "substream seed");
    cmd->add_option("--workers", workers,
                    "worker threads (result is worker-independent)");
  };

  auto* cmd_entropy = app.add_subcommand("entropy", "exact skew-product entropy");
  auto* cmd_mc = app.add_subcommand("mc-entropy", "Monte Carlo entropy estimate");
  add_mc_flags(cmd_mc);
  auto* cmd_addition =
      app.add_subcommand("addition", "entropy addition-formula breakdown");
  auto* cmd_stationarity =
      app.add_subcommand("stationarity", "Monte Carlo stationarity defect");
  add_mc_flags(cmd_stationarity);

  double target = 1.0, tol = 1e-9, eps = 0.01, budget = 2.0;
  int n0 = 1;
  std::string curve_path, out_path, csv_path, type_name = "iii1";
  auto* cmd_realize =
      app.add_subcommand("realize", "solve for theta hitting a target entropy");
  cmd_realize->add_option("--target", target, "target entropy value")->required();
  cmd_realize->add_option("--n0", n0, "deformation coordinate");
  cmd_realize->add_option("--tol", tol, "entropy tolerance");
  cmd_realize->add_option("--emit-curve", curve_path, "write (theta, entropy) CSV");

  auto* cmd_construct =
      app.add_subcommand("construct", "build a small-entropy scenario of declared type");
  cmd_construct->add_option("--eps", eps, "entropy budget epsilon")->required();
  cmd_construct->add_option("--type", type_name, "iii1 | iiilambda");
  cmd_construct->add_option("--budget", budget, "slow-growth weighted-sum budget");
  cmd_construct->add_option("--out", out_path, "write the constructed scenario JSON");

  auto* cmd_classify = app.add_subcommand("classify", "Krieger type of the nu family");

  int depth = 50;
  auto* cmd_ratio = app.add_subcommand("ratio-set", "empirical log-ratio diagnostics");
  cmd_ratio->add_option("--depth", depth, "coordinate depth for sampled supports");
  add_mc_flags(cmd_ratio);
  cmd_ratio->add_option("--csv", csv_path, "write (log_ratio, multiplicity) CSV");

  auto* cmd_budget = app.add_subcommand("budget", "slow-growth sequence for kappa");
  cmd_budget->add_option("--budget", budget, "weighted-sum budget");
  cmd_budget->add_option("--csv", csv_path, "write (n, kappa_n, l_n, partial sum) CSV");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::cout << std::setprecision(12);
  try {
    Scenario scenario = load_scenario(scenario_path);

    if (cmd_entropy->parsed()) {
      std::cout << "entropy " << skew_entropy(scenario).total << "\n";
    } else if (cmd_addition->parsed()) {
      print_breakdown(skew_entropy(scenario));
    } else if (cmd_mc->parsed()) {
      print_estimate("estimate", mc_entropy(scenario, samples, seed, workers));
    } else if (cmd_stationarity->parsed()) {
      print_estimate("defect ", stationarity_defect(scenario, samples, seed, workers));
    } else if (cmd_realize->parsed()) {
      RealizationResult r = realize_target(scenario, n0, target, tol);
      std::cout << "theta_star       " << r.theta_star << "\n"
                << "achieved_entropy " << r.achieved_entropy << "\n"
                << "iterations       " << r.iterations << "\n"
                << "bracket_width    " << r.bracket_width << "\n";
      if (!curve_path.empty()) {
        auto out = open_csv(curve_path);
        out << "theta,entropy\n";
        double h1 = skew_entropy(scenario).total;
        double kb = kappa_bar(scenario, n0);
        double p = scenario.nu.coordinate_distribution(n0).p0;
        double lo = r.theta_star / 4.0;
        constexpr int kPoints = 200;
        for (int i = 0; i <= kPoints; ++i) {
          double theta = lo * std::pow(1.0 / lo, i / static_cast<double>(kPoints));
          out << theta << "," << h1 + kb * (phi(theta * p) - phi(p)) << "\n";
        }
      }
    } else if (cmd_construct->parsed()) {
      TypeFlag flag;
      if (type_name == "iii1") {
        flag = TypeFlag::III_1;
      } else if (type_name == "iiilambda") {
        flag = TypeFlag::III_lambda;
      } else {
        std::cerr << "unknown --type \"" << type_name << "\" (expected iii1 or iiilambda)\n";
        return 2;
      }
      Scenario built =
          build_small_entropy_scenario(scenario.group, scenario.kappa, eps, flag, budget);
      validate_scenario(built);
      EntropyBreakdown b = skew_entropy(built);
      std::cout << "entropy  " << b.total << "\n"
                << "bound    " << 2.0 * eps << "\n"
                << "type     " << classify_family(built.nu).render() << "\n"
                << "detail   " << built.description << "\n";
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file \"" + out_path + "\"");
        out << scenario_to_json_text(built) << "\n";
      }
    } else if (cmd_classify->parsed()) {
      KriegerType type = classify_family(scenario.nu);
      KakutaniResult kak = kakutani_square_sum(scenario.nu);
      std::cout << "type     " << type.render() << "\n"
                << "evidence " << type.evidence << "\n";
      if (kak.converges)
        std::cout << "square_sum converges, value " << kak.value << "\n";
      else
        std::cout << "square_sum diverges, rate " << kak.divergence_rate << "\n";
    } else if (cmd_ratio->parsed()) {
      RatioSetEstimate est = ratio_set_estimate(scenario.nu, depth, samples, seed);
      std::cout << "distinct_values " << est.values.size() << "\n";
      if (est.lattice_constant)
        std::cout << "lattice " << *est.lattice_constant << " (residual "
                  << est.lattice_residual << ")\n";
      else
        std::cout << "lattice none\n";
      if (!csv_path.empty()) {
        auto out = open_csv(csv_path);
        out << "log_ratio,multiplicity\n";
        for (const auto& [v, mult] : est.values) out << v << "," << mult << "\n";
      }
    } else if (cmd_budget->parsed()) {
      BudgetSequences b = build_budget(scenario.kappa, budget);
      std::cout << "period       " << b.period << "\n"
                << "weighted_sum " << b.weighted_sum << "\n";
      if (!csv_path.empty()) {
        auto out = open_csv(csv_path);
        out << "n,kappa_n,l_n,partial_weighted_sum\n";
        double partial = 0.0;
        const auto& atoms = scenario.kappa.atoms();
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          long long n = static_cast<long long>(i) + 1;
          partial += atoms[i].weight * static_cast<double>(b.l(n) + 1);
          out << n << "," << atoms[i].weight << "," << b.l(n) << "," << partial << "\n";
        }
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const UnreachableTargetError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const NoMassError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const InfeasibleError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const UnreachableElementError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
