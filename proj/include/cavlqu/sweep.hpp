#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cavlqu/errors.hpp"
#include "cavlqu/states.hpp"

namespace cavlqu {

struct PureSpec {
  double alpha;
};

struct WernerSpec {
  double p;
};

using StateSpec = std::variant<PureSpec, WernerSpec>;

/// Parses "pure:ALPHA" or "werner:P". A value may be a decimal, a fraction
/// "a/b", or "sqrt(...)" of either, e.g. "pure:sqrt(1/3)".
/// Throws BadParameter on malformed input.
StateSpec parse_state_spec(const std::string& text);
std::string describe(const StateSpec& spec);

/// Throws BadAmplitudes / BadParameter for out-of-range values.
DensityMatrix initial_state(const StateSpec& spec);

struct SweepConfig {
  StateSpec state = PureSpec{1.0};
  double kt_max = 3.0;
  std::size_t steps = 300;
  bool oracle_check = false;

  /// Throws BadParameter unless kt_max > 0 and steps >= 2.
  void validate() const;
};

struct SweepRecord {
  double kappa_t;
  double lqu_cc;
  double lqu_rr;
  double lqu_4q;
  double conc_cc;
  double conc_rr;
};

/// A module error raised while evaluating one grid point.
class SweepError : public Error {
 public:
  SweepError(double kappa_t, const std::string& what);
  double kappa_t() const { return kappa_t_; }

 private:
  double kappa_t_;
};

inline constexpr double kOracleTol = 1e-4;
inline constexpr std::size_t kOracleStride = 10;

/// Every measure at one kappa*t. With oracle_check, lqu_cc is re-derived by
/// sphere-grid minimization and a mismatch above kOracleTol throws.
SweepRecord evaluate_point(const DensityMatrix& rho_cc, double kappa_t, bool oracle_check = false);

/// Uniform grid of cfg.steps points on [0, kt_max], evaluated in parallel.
/// Records come back in kappa_t order. Throws SweepError naming the failing point.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/// Single-threaded reference for run_sweep; results are bitwise identical.
std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg);

/// Grid used by run_sweep.
std::vector<double> sweep_grid(double kt_max, std::size_t steps);

inline constexpr double kMergeTol = 1e-6;
inline constexpr double kMergeRefineTol = 1e-4;

struct MergeEvents {
  std::optional<double> meet_kt;
  std::optional<double> separate_kt;
  bool merged = false;
  /// Both curves vanish over the whole sweep; no events are reported.
  bool degenerate = false;
  /// Largest |lqu_cc - lqu_rr| over grid points inside [meet_kt, separate_kt].
  double max_gap_inside = 0.0;
};

/// lqu_cc(kt) - lqu_rr(kt), evaluated fresh at any kappa*t.
using LquGap = std::function<double(double)>;

LquGap lqu_gap(const DensityMatrix& rho_cc);

/// Finds the window where the cavity and reservoir LQU curves coincide to
/// within equal_tol. Both ends are refined by bisection on `gap` to
/// kMergeRefineTol; the sweep grid only brackets them.
MergeEvents detect_merge(std::span<const SweepRecord> records, const LquGap& gap,
                         double equal_tol = kMergeTol);

inline constexpr const char* kCsvHeader = "kappa_t,lqu_cc,lqu_rr,lqu_4q,conc_cc,conc_rr";

void write_csv(std::span<const SweepRecord> records, std::ostream& out);
/// Throws IoError naming the path.
void write_csv(std::span<const SweepRecord> records, const std::string& path);

/// Parses what write_csv produced. Throws IoError on a bad header or row.
std::vector<SweepRecord> read_csv(std::istream& in);

}  // namespace cavlqu
