// cavlqu: sweep kappa*t for a cavity-pair initial state and report LQU curves.
//
//   cavlqu sweep  --state pure:sqrt(1/3) --kt-max 3 --steps 300 --out curves.csv
//   cavlqu events --state pure:sqrt(1/17)
//
// Exit codes: 0 success, 1 invalid arguments, 2 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cavlqu/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 1;
constexpr int kExitNumerical = 2;

std::string fixed4(const std::optional<double>& v) {
  if (!v) return "none";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local quantum uncertainty of cavity and reservoir qubits"};
  app.require_subcommand(1);

  std::string state_text;
  cavlqu::SweepConfig cfg;
  std::string out_path;
  double equal_tol = cavlqu::kMergeTol;
  bool verbose = false;

  auto* sweep = app.add_subcommand("sweep", "Evaluate every measure on a uniform kappa*t grid and write CSV");
  sweep->add_option("--state", state_text, "pure:ALPHA or werner:P (values may be a/b or sqrt(...))")
      ->required();
  sweep->add_option("--kt-max", cfg.kt_max, "Upper end of the kappa*t grid")->capture_default_str();
  sweep->add_option("--steps", cfg.steps, "Number of grid points")->capture_default_str();
  sweep->add_option("--out", out_path, "CSV destination (stdout when omitted)");
  sweep->add_flag("--oracle-check", cfg.oracle_check,
                  "Re-check every 10th cavity LQU by sphere-grid minimization");

  auto* events = app.add_subcommand("events", "Print where the cavity and reservoir LQU curves meet and separate");
  events->add_option("--state", state_text, "pure:ALPHA or werner:P")->required();
  events->add_option("--kt-max", cfg.kt_max, "Upper end of the kappa*t grid")->capture_default_str();
  events->add_option("--steps", cfg.steps, "Number of grid points")->capture_default_str();
  events->add_option("--tol", equal_tol, "Curves closer than this count as equal")->capture_default_str();
  events->add_flag("-v,--verbose", verbose, "Also print merge flags and the largest gap inside the window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    cfg.state = cavlqu::parse_state_spec(state_text);
    cfg.validate();
    (void)cavlqu::initial_state(cfg.state);
  } catch (const cavlqu::Error& e) {
    std::cerr << "cavlqu: " << e.what() << "\n";
    return kExitBadArgs;
  }

  try {
    const auto records = cavlqu::run_sweep(cfg);
    if (sweep->parsed()) {
      if (out_path.empty()) {
        cavlqu::write_csv(records, std::cout);
      } else {
        cavlqu::write_csv(records, out_path);
      }
      return kExitOk;
    }

    const auto ev = cavlqu::detect_merge(records, cavlqu::lqu_gap(cavlqu::initial_state(cfg.state)), equal_tol);
    std::cout << fixed4(ev.meet_kt) << " " << fixed4(ev.separate_kt) << "\n";
    if (verbose) {
      std::cout << "state " << cavlqu::describe(cfg.state) << "\n"
                << "merged " << (ev.merged ? "yes" : "no") << "\n"
                << "degenerate " << (ev.degenerate ? "yes" : "no") << "\n"
                << "max_gap_inside " << ev.max_gap_inside << "\n";
    }
    return kExitOk;
  } catch (const cavlqu::IoError& e) {
    std::cerr << "cavlqu: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const cavlqu::Error& e) {
    std::cerr << "cavlqu: " << e.what() << "\n";
    return kExitNumerical;
  }
}
