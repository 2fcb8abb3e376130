// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cavlqu/channel.hpp"
#include "cavlqu/entanglement.hpp"
#include "cavlqu/linalg.hpp"
#include "cavlqu/lqu.hpp"
#include "cavlqu/sweep.hpp"
#include "test_support.hpp"

using namespace cavlqu;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

DensityMatrix pure_alpha(double alpha) { return pure_state(PureInitialState::from_alpha(alpha)); }

std::vector<DensityMatrix> scenario_inputs() {
  return {pure_alpha(std::sqrt(2.0 / 3.0)), pure_alpha(std::sqrt(1.0 / 3.0)), pure_alpha(std::sqrt(1.0 / 17.0)),
          werner_state(WernerParam(0.6))};
}

Outcome pure_closed_form() {
  Outcome out;
  double worst = 0.0;
  for (int k = 1; k <= 21; ++k) {
    const double alpha = k / 22.0;
    const double beta2 = 1.0 - alpha * alpha;
    worst = std::max(worst, std::abs(lqu_bipartite(pure_alpha(alpha), 0) - 4.0 * alpha * alpha * beta2));
  }
  out.require(worst <= 1e-9, fmt("max deviation %.3g", worst));
  const double two_thirds = lqu_bipartite(pure_alpha(std::sqrt(2.0 / 3.0)), 0);
  out.require(std::abs(two_thirds - 8.0 / 9.0) <= 1e-9, fmt("alpha=sqrt(2/3) gives %.12f", two_thirds));
  if (out.pass) out.detail = fmt("max deviation %.3g over 21 alphas", worst);
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::mt19937_64 rng(20240501);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = testutil::random_mixed_state(rng, 2);
    worst = std::max(worst, std::abs(lqu_bruteforce(rho, 0, kDefaultDirections) - lqu_bipartite(rho, 0)));
  }
  out.require(worst <= 1e-4, fmt("bruteforce deviation %.3g", worst));

  std::normal_distribution<double> gauss;
  double worst_identity = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testutil::random_mixed_state(rng, 2);
    const Observable obs = Observable::along(gauss(rng), gauss(rng), gauss(rng));
    const auto m = lqu_matrix(rho, 0);
    const double identity = 1.0 - m.quadratic_form(obs.axis());
    worst_identity = std::max(worst_identity, std::abs(skew_information(rho, obs, 0) - identity));
  }
  out.require(worst_identity <= 1e-10, fmt("skew identity deviation %.3g", worst_identity));
  if (out.pass) out.detail = fmt("bruteforce %.3g, skew identity %.3g", worst, worst_identity);
  return out;
}

Outcome merge_events(double alpha, double meet, double separate, bool check_gaps) {
  Outcome out;
  const auto rho = pure_alpha(alpha);
  SweepConfig cfg;
  cfg.state = PureSpec{alpha};
  const auto records = run_sweep(cfg);
  const auto ev = detect_merge(records, lqu_gap(rho));
  if (!ev.meet_kt || !ev.separate_kt) {
    out.require(false, "no merge window detected");
    return out;
  }
  out.require(std::abs(*ev.meet_kt - meet) <= 0.05, fmt("meet %.4f vs %.2f", *ev.meet_kt, meet));
  out.require(std::abs(*ev.separate_kt - separate) <= 0.05, fmt("separate %.4f vs %.2f", *ev.separate_kt, separate));
  if (check_gaps) {
    out.require(ev.max_gap_inside < 1e-6, fmt("max gap inside %.3g", ev.max_gap_inside));
    for (double kt : {0.3, 1.2}) {
      const auto r = evaluate_point(rho, kt);
      const double gap = std::abs(r.lqu_cc - r.lqu_rr);
      out.require(gap > 1e-2, fmt("gap at %.1f is %.3g", kt, gap));
    }
  }
  if (out.pass) {
    out.detail = fmt("meet %.4f, separate %.4f", *ev.meet_kt, *ev.separate_kt);
    if (check_gaps) out.detail += fmt(", max gap inside %.3g", ev.max_gap_inside);
  }
  return out;
}

Outcome four_qubit_shape() {
  Outcome out;
  const char* names[] = {"pure sqrt(2/3)", "pure sqrt(1/3)", "pure sqrt(1/17)", "werner 0.6"};
  const auto inputs = scenario_inputs();
  const auto grid = sweep_grid(20.0, 300);
  std::string peaks;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::vector<double> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) values[k] = evaluate_point(inputs[i], grid[k]).lqu_4q;
    const double start = values.front();
    const double end = evaluate_point(inputs[i], 20.0).lqu_4q;
    const double peak = *std::max_element(values.begin(), values.end());
    const std::string who = names[i];
    out.require(start < 1e-9, who + fmt(": lqu_4q(0) = %.3g", start));
    out.require(end < 1e-3, who + fmt(": lqu_4q(20) = %.3g", end));
    out.require(peak - std::max(start, end) >= 0.05, who + fmt(": peak %.4f", peak));
    if (!peaks.empty()) peaks += ", ";
    peaks += fmt("%.3f", peak);
  }
  if (out.pass) out.detail = "peaks " + peaks;
  return out;
}

Outcome asymptotic_transfer() {
  Outcome out;
  auto inputs = scenario_inputs();
  std::mt19937_64 rng(50);
  for (int k = 0; k < 4; ++k) inputs.push_back(testutil::random_mixed_state(rng, 2));
  ComplexMatrix vacuum(4);
  vacuum(0, 0) = 1.0;
  double worst = 0.0;
  for (const auto& rho : inputs) {
    const auto js = evolve(rho, kAsymptoticKappaT);
    worst = std::max(worst, max_abs_diff(js.rho.matrix(), kron(vacuum, rho.matrix())));
  }
  out.require(worst <= 1e-10, fmt("max deviation %.3g", worst));
  if (out.pass) out.detail = fmt("max deviation %.3g over %.0f inputs", worst, static_cast<double>(inputs.size()));
  return out;
}

Outcome mirror_symmetry() {
  Outcome out;
  double worst_state = 0.0;
  double worst_lqu = 0.0;
  for (const auto& rho : scenario_inputs())
    for (int k = 1; k <= 50; ++k) {
      const double kt = 0.1 * k;
      const auto rr = reduced(evolve(rho, kt), kReservoirs);
      const auto cc = reduced(evolve(rho, mirror_time(kt)), kCavities);
      worst_state = std::max(worst_state, max_abs_diff(rr.matrix(), cc.matrix()));
      worst_lqu = std::max(worst_lqu, std::abs(lqu_bipartite(rr, 0) - lqu_bipartite(cc, 0)));
    }
  out.require(worst_state <= 1e-10, fmt("state deviation %.3g", worst_state));
  out.require(worst_lqu <= 1e-9, fmt("lqu deviation %.3g", worst_lqu));
  if (out.pass) out.detail = fmt("state %.3g, lqu %.3g", worst_state, worst_lqu);
  return out;
}

Outcome entanglement_phenomenology() {
  Outcome out;

  const auto strong = pure_alpha(std::sqrt(2.0 / 3.0));
  double lowest = 1.0;
  for (int k = 1; k <= 400; ++k) {
    lowest = std::min(lowest, concurrence(reduced(evolve(strong, 0.05 * k), kCavities)).value);
  }
  out.require(lowest > 0.0, fmt("(a) cavity concurrence reaches %.3g", lowest));
  out.require(!death_birth_times(strong, 20.0, 0.05).cavity_death.has_value(), "(a) death detected");

  const auto third = death_birth_times(pure_alpha(std::sqrt(1.0 / 3.0)), 10.0, 0.05);
  out.require(third.cavity_death.has_value(), "(b) no cavity death");

  const auto window = death_birth_times(pure_alpha(std::sqrt(1.0 / 17.0)), 10.0, 0.05);
  out.require(window.cavity_death && window.reservoir_birth && *window.cavity_death < *window.reservoir_birth,
              "(c) no unentangled window");

  const auto boundary = death_birth_times(pure_alpha(1.0 / std::sqrt(5.0)), 10.0, 0.05);
  out.require(boundary.cavity_death && boundary.reservoir_birth &&
                  std::abs(*boundary.cavity_death - *boundary.reservoir_birth) <= 1e-4,
              "(d) death and birth differ");

  const auto werner = werner_state(WernerParam(0.6));
  out.require(death_birth_times(werner, 10.0, 0.05).cavity_death.has_value(), "(e) werner never dies");
  const double c0 = concurrence(werner).value;
  out.require(std::abs(c0 - 0.4) <= 1e-9, fmt("(e) werner concurrence %.12f", c0));

  if (out.pass) {
    out.detail = fmt("min C(a) %.3g, window %.4f", lowest, *window.reservoir_birth - *window.cavity_death) +
                 fmt(", boundary %.6f/%.6f", *boundary.cavity_death, *boundary.reservoir_birth);
  }
  return out;
}

Outcome property_suites() {
  Outcome out;
  std::mt19937_64 rng(9);
  double recon = 0.0;
  double sqrt_err = 0.0;
  double ptrace = 0.0;
  bool lqu_range = true;
  double lqu_invariance = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testutil::random_hermitian(rng, 2 + trial % 15);
    recon = std::max(recon, max_abs_diff(eigh(h).reconstruct(), h));

    const auto rho = testutil::random_mixed_state(rng, 1 + trial % 4);
    const auto s = matrix_sqrt(rho.matrix());
    sqrt_err = std::max(sqrt_err, max_abs_diff(s * s, rho.matrix()));

    if (rho.n_qubits() >= 2) {
      std::vector<std::size_t> keep(rho.n_qubits() - 1);
      for (std::size_t q = 0; q < keep.size(); ++q) keep[q] = q;
      const auto reduced_rho = partial_trace(rho.matrix(), rho.n_qubits(), keep);
      ptrace = std::max(ptrace, max_abs_diff(reduced_rho, testutil::trace_out_last(rho.matrix(), 1)));
    }

    const auto two = testutil::random_mixed_state(rng, 2);
    const double l = lqu_bipartite(two, 0);
    lqu_range = lqu_range && l >= 0.0 && l <= 1.0;
    const auto u = kron(testutil::random_unitary(rng, 2), testutil::random_unitary(rng, 2));
    const DensityMatrix rotated((u * two.matrix() * u.adjoint()).hermitian_part());
    lqu_invariance = std::max(lqu_invariance, std::abs(lqu_bipartite(rotated, 0) - l));
  }
  out.require(recon <= 1e-10, fmt("eigh reconstruction %.3g", recon));
  out.require(sqrt_err <= 1e-10, fmt("sqrt %.3g", sqrt_err));
  out.require(ptrace <= 1e-12, fmt("partial trace %.3g", ptrace));
  out.require(lqu_range, "lqu outside [0,1]");
  out.require(lqu_invariance <= 1e-9, fmt("local unitary invariance %.3g", lqu_invariance));
  if (out.pass) {
    out.detail = fmt("eigh %.3g, sqrt %.3g", recon, sqrt_err) +
                 fmt(", partial trace %.3g, invariance %.3g", ptrace, lqu_invariance);
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"pure-state closed form", pure_closed_form},
      {"oracle equivalence", oracle_equivalence},
      {"merge events alpha=sqrt(1/3)", [] { return merge_events(std::sqrt(1.0 / 3.0), 0.61, 0.82, true); }},
      {"merge events alpha=sqrt(1/17)", [] { return merge_events(std::sqrt(1.0 / 17.0), 0.53, 0.88, false); }},
      {"four-qubit lqu shape", four_qubit_shape},
      {"asymptotic transfer", asymptotic_transfer},
      {"mirror symmetry", mirror_symmetry},
      {"entanglement phenomenology", entanglement_phenomenology},
      {"property suites", property_suites},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
