#include "cavlqu/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cavlqu/channel.hpp"
#include "cavlqu/entanglement.hpp"
#include "cavlqu/lqu.hpp"

namespace cavlqu {

namespace {

double parse_plain_number(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const double num = parse_plain_number(text.substr(0, slash));
    const double den = parse_plain_number(text.substr(slash + 1));
    if (den == 0.0) throw BadParameter("division by zero in '" + text + "'");
    return num / den;
  }
  if (text.empty()) throw BadParameter("empty number");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw BadParameter("'" + text + "' is not a number");
  }
  return v;
}

double parse_value(const std::string& text) {
  const std::string prefix = "sqrt(";
  if (text.rfind(prefix, 0) == 0) {
    if (text.back() != ')') throw BadParameter("unbalanced parenthesis in '" + text + "'");
    const double inner = parse_plain_number(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    if (inner < 0.0) throw BadParameter("sqrt of negative value in '" + text + "'");
    return std::sqrt(inner);
  }
  return parse_plain_number(text);
}

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

StateSpec parse_state_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw BadParameter("state '" + text + "' must look like pure:ALPHA or werner:P");
  }
  const std::string kind = text.substr(0, colon);
  const double value = parse_value(text.substr(colon + 1));
  if (kind == "pure") return PureSpec{value};
  if (kind == "werner") return WernerSpec{value};
  throw BadParameter("unknown state family '" + kind + "'");
}

std::string describe(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PureSpec>) {
          return "pure(alpha=" + format_g12(s.alpha) + ")";
        } else {
          return "werner(p=" + format_g12(s.p) + ")";
        }
      },
      spec);
}

DensityMatrix initial_state(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> DensityMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PureSpec>) {
          return pure_state(PureInitialState::from_alpha(s.alpha));
        } else {
          return werner_state(WernerParam(s.p));
        }
      },
      spec);
}

void SweepConfig::validate() const {
  if (!(kt_max > 0.0) || !std::isfinite(kt_max)) {
    throw BadParameter("kt_max must be positive, got " + format_g12(kt_max));
  }
  if (steps < 2) throw BadParameter("steps must be at least 2, got " + std::to_string(steps));
}

SweepError::SweepError(double kappa_t, const std::string& what)
    : Error("at kappa_t=" + format_g12(kappa_t) + ": " + what), kappa_t_(kappa_t) {}

SweepRecord evaluate_point(const DensityMatrix& rho_cc, double kappa_t, bool oracle_check) {
  const JointState js = evolve(rho_cc, kappa_t);
  const DensityMatrix cc = reduced(js, kCavities);
  const DensityMatrix rr = reduced(js, kReservoirs);

  SweepRecord rec{};
  rec.kappa_t = kappa_t;
  rec.lqu_cc = lqu_bipartite(cc, 0);
  rec.lqu_rr = lqu_bipartite(rr, 0);
  rec.lqu_4q = lqu_multiqubit(js.rho).combined;
  rec.conc_cc = concurrence(cc).value;
  rec.conc_rr = concurrence(rr).value;

  if (oracle_check) {
    const double oracle = lqu_bruteforce_serial(cc, 0);
    if (!(std::abs(oracle - rec.lqu_cc) <= kOracleTol)) {
      throw NumericalNegative("oracle mismatch: closed form " + format_g12(rec.lqu_cc) +
                              ", sphere-grid minimum " + format_g12(oracle));
    }
  }
  return rec;
}

std::vector<double> sweep_grid(double kt_max, std::size_t steps) {
  std::vector<double> grid(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) grid[k] = kt_max * static_cast<double>(k) / last;
  return grid;
}

std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg) {
  cfg.validate();
  const DensityMatrix rho_cc = initial_state(cfg.state);
  const auto grid = sweep_grid(cfg.kt_max, cfg.steps);
  std::vector<SweepRecord> out;
  out.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    try {
      out.push_back(evaluate_point(rho_cc, grid[k], cfg.oracle_check && k % kOracleStride == 0));
    } catch (const Error& e) {
      throw SweepError(grid[k], e.what());
    }
  }
  return out;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const DensityMatrix rho_cc = initial_state(cfg.state);
  const auto grid = sweep_grid(cfg.kt_max, cfg.steps);
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<SweepRecord> out(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = evaluate_point(rho_cc, grid[idx], cfg.oracle_check && idx % kOracleStride == 0);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }

  for (std::size_t k = 0; k < failures.size(); ++k) {
    if (!failures[k]) continue;
    try {
      std::rethrow_exception(failures[k]);
    } catch (const Error& e) {
      throw SweepError(grid[k], e.what());
    }
  }
  return out;
}

LquGap lqu_gap(const DensityMatrix& rho_cc) {
  return [rho_cc](double kt) {
    const JointState js = evolve(rho_cc, kt);
    return lqu_bipartite(reduced(js, kCavities), 0) - lqu_bipartite(reduced(js, kReservoirs), 0);
  };
}

MergeEvents detect_merge(std::span<const SweepRecord> records, const LquGap& gap, double equal_tol) {
  MergeEvents ev;
  if (records.empty()) return ev;

  const auto touching = [equal_tol](const SweepRecord& r) {
    return std::abs(r.lqu_cc - r.lqu_rr) < equal_tol;
  };
  const bool all_zero = std::all_of(records.begin(), records.end(), [equal_tol](const SweepRecord& r) {
    return r.lqu_cc < equal_tol && r.lqu_rr < equal_tol;
  });
  if (all_zero) {
    ev.degenerate = true;
    ev.merged = true;
    return ev;
  }

  const auto first = std::find_if(records.begin(), records.end(), touching);
  if (first == records.end()) return ev;
  const auto last_rev = std::find_if(records.rbegin(), records.rend(), touching);
  const std::size_t i0 = static_cast<std::size_t>(first - records.begin());
  const std::size_t i1 = records.size() - 1 - static_cast<std::size_t>(last_rev - records.rbegin());

  const auto in_contact = [&](double kt) { return std::abs(gap(kt)) < equal_tol; };
  // Shrinks [outside, inside] around the contact boundary.
  const auto refine = [&](double outside, double inside) {
    while (std::abs(inside - outside) > kMergeRefineTol) {
      const double mid = 0.5 * (outside + inside);
      if (in_contact(mid)) {
        inside = mid;
      } else {
        outside = mid;
      }
    }
    return 0.5 * (outside + inside);
  };

  ev.meet_kt = i0 == 0 ? records[0].kappa_t : refine(records[i0 - 1].kappa_t, records[i0].kappa_t);
  ev.separate_kt = i1 + 1 == records.size() ? records[i1].kappa_t
                                              : refine(records[i1 + 1].kappa_t, records[i1].kappa_t);

  for (std::size_t k = i0; k <= i1; ++k)
    ev.max_gap_inside = std::max(ev.max_gap_inside, std::abs(records[k].lqu_cc - records[k].lqu_rr));

  const double spacing = records.size() > 1 ? records[1].kappa_t - records[0].kappa_t : 0.0;
  ev.merged = *ev.separate_kt - *ev.meet_kt > spacing;
  return ev;
}

void write_csv(std::span<const SweepRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_g12(r.kappa_t) << ',' << format_g12(r.lqu_cc) << ',' << format_g12(r.lqu_rr) << ','
        << format_g12(r.lqu_4q) << ',' << format_g12(r.conc_cc) << ',' << format_g12(r.conc_rr) << '\n';
  }
}

void write_csv(std::span<const SweepRecord> records, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_csv(records, file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("missing or unexpected CSV header");
  std::vector<SweepRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, 6> v{};
    std::istringstream row(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(row, cell, ',')) {
      if (col >= v.size()) throw IoError("too many columns on line " + std::to_string(line_no));
      char* end = nullptr;
      v[col] = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw IoError("bad value '" + cell + "' on line " + std::to_string(line_no));
      }
      ++col;
    }
    if (col != v.size()) throw IoError("too few columns on line " + std::to_string(line_no));
    out.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  return out;
}

}  // namespace cavlqu
