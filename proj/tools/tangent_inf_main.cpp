// tangent-inf: decide boundedness, attainment, compactness and coercivity of
// a polynomial objective on a semi-algebraic set, and report the optimal
// value with branch-level evidence.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tangentinf/errors.hpp"
#include "tangentinf/pipeline.hpp"
#include "tangentinf/report.hpp"

using namespace tangentinf;

namespace {

std::vector<double> parse_radii(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size() || !(v > 0.0)) {
        throw CLI::ValidationError("--radii", "'" + tok + "' is not a positive number");
      }
      out.push_back(v);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("--radii", "needs at least one radius");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymptotic analysis of polynomial optimization problems"};

  std::string input;
  std::string mode = "hybrid";
  std::string radii_arg;
  std::string json_path;
  std::string psi_csv_path;
  RunConfig cfg;
  bool verbose = false;

  app.add_option("--input", input, "problem file (.prob)")->required();
  app.add_option("--mode", mode, "symbolic, numeric or hybrid")
      ->check(CLI::IsMember({"symbolic", "numeric", "hybrid"}))
      ->capture_default_str();
  app.add_option("--radii", radii_arg, "comma-separated sphere radii, e.g. 1e2,1e3,1e4");
  app.add_option("--starts", cfg.oracle.starts, "multistart count for the numeric oracle")
      ->capture_default_str();
  app.add_option("--seed", cfg.oracle.seed, "oracle seed")->capture_default_str();
  app.add_option("--gb-budget", cfg.gb_budget, "Groebner step budget before the resultant fallback")
      ->capture_default_str();
  app.add_option("--depth", cfg.depth, "expansion terms per branch")->capture_default_str();
  app.add_option("--json", json_path, "write the full report here (atomic)");
  app.add_option("--psi-csv", psi_csv_path, "write sphere-restricted oracle samples here");
  app.add_flag("--verbose", verbose, "print branch and caveat detail");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.mode = mode_from_name(mode);
    if (!radii_arg.empty()) cfg.radii = parse_radii(radii_arg);

    Report R = run_file(input, cfg);

    if (!json_path.empty()) write_report_json(R, json_path);
    if (!psi_csv_path.empty()) write_psi_csv(R, psi_csv_path);

    std::cout << human_summary(R);
    if (verbose) {
      for (const auto& a : R.tangency) {
        for (const auto& b : a.branches) {
          std::cout << "  branch " << b.expansion.describe() << "  lambda "
                    << b.lambda.to_string() << "  " << status_name(b.status);
          if (!b.note.empty()) std::cout << "  (" << b.note << ")";
          std::cout << "\n";
        }
      }
      for (const auto& c : R.caveats) std::cout << "  caveat: " << c << "\n";
      for (const auto& j : R.justifications) {
        std::cout << "  " << j.criterion << ": " << j.because << " [" << j.inputs << "]\n";
      }
    }
    return 0;
  } catch (const BudgetExceededError& e) {
    std::cerr << "tangent-inf: " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyError& e) {
    std::cerr << "tangent-inf: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "tangent-inf: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "tangent-inf: internal error: " << e.what() << "\n";
    return 1;
  }
}
