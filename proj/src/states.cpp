#include "cavlqu/states.hpp"

#include <cmath>
#include <sstream>

#include "cavlqu/errors.hpp"
#include "cavlqu/linalg.hpp"

namespace cavlqu {

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::NonFinite:
      os << "NonFinite";
      break;
    case ViolationKind::BadShape:
      os << "BadShape";
      break;
    case ViolationKind::NotHermitian:
      os << "NotHermitian";
      break;
    case ViolationKind::TraceDeviation:
      os << "TraceDeviation";
      break;
    case ViolationKind::NegativeEigenvalue:
      os << "NegativeEigenvalue";
      break;
  }
  os << "(" << magnitude << ")";
  return os.str();
}

std::vector<Violation> validate(const ComplexMatrix& m) {
  std::vector<Violation> out;
  const std::size_t dim = m.rows();
  if (!m.is_square() || dim == 0 || (dim & (dim - 1)) != 0 || dim == 1) {
    out.push_back({ViolationKind::BadShape, static_cast<double>(dim)});
    return out;
  }
  if (!m.all_finite()) {
    out.push_back({ViolationKind::NonFinite, 0.0});
    return out;
  }

  const double herm_err = m.hermiticity_error();
  if (herm_err > kStateTol) out.push_back({ViolationKind::NotHermitian, herm_err});

  const double trace_dev = std::abs(m.trace() - Complex{1.0, 0.0});
  if (trace_dev > kStateTol) out.push_back({ViolationKind::TraceDeviation, trace_dev});

  if (herm_err <= kHermitianTol) {
    try {
      const auto ev = eigvalsh(m);
      if (ev.front() < -kStateTol) out.push_back({ViolationKind::NegativeEigenvalue, ev.front()});
    } catch (const Error&) {
      out.push_back({ViolationKind::NegativeEigenvalue, std::nan("")});
    }
  }
  return out;
}

std::vector<Violation> validate(const DensityMatrix& rho) { return validate(rho.matrix()); }

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  const auto violations = validate(mat_);
  if (!violations.empty()) {
    std::string msg = "invalid density matrix:";
    for (const auto& v : violations) msg += " " + v.describe();
    throw InvalidState(msg);
  }
  n_qubits_ = qubit_count(mat_.rows());
}

double DensityMatrix::purity() const { return trace_of_product(mat_, mat_).real(); }

PureInitialState::PureInitialState(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  const bool in_range = alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0;
  const double norm_dev = std::abs(alpha * alpha + beta * beta - 1.0);
  if (!in_range || !(norm_dev <= 1e-12)) {
    std::ostringstream os;
    os << "alpha=" << alpha << ", beta=" << beta << " is not a normalized nonnegative pair";
    throw BadAmplitudes(os.str());
  }
}

PureInitialState PureInitialState::from_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "alpha=" << alpha << " outside [0,1]";
    throw BadAmplitudes(os.str());
  }
  return {alpha, std::sqrt(1.0 - alpha * alpha)};
}

WernerParam::WernerParam(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "Werner mixing p=" << p << " outside [0,1]";
    throw BadParameter(os.str());
  }
}

DensityMatrix pure_state(const PureInitialState& s) {
  const std::vector<Complex> psi{s.alpha(), 0.0, 0.0, s.beta()};
  return DensityMatrix(ComplexMatrix::outer(psi));
}

DensityMatrix werner_state(const WernerParam& w) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> phi{h, 0.0, 0.0, h};
  ComplexMatrix m = Complex{w.p(), 0.0} * ComplexMatrix::outer(phi);
  m += Complex{(1.0 - w.p()) / 4.0, 0.0} * ComplexMatrix::identity(4);
  return DensityMatrix(std::move(m));
}

DensityMatrix basis_state(const std::string& bits) {
  if (bits.empty()) throw BadParameter("basis_state: empty bit string");
  std::size_t index = 0;
  for (const char c : bits) {
    if (c != '0' && c != '1') throw BadParameter("basis_state: '" + bits + "' is not a bit string");
    index = (index << 1U) | static_cast<std::size_t>(c == '1');
  }
  ComplexMatrix m(std::size_t{1} << bits.size());
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  return DensityMatrix(Complex{1.0 / static_cast<double>(dim), 0.0} * ComplexMatrix::identity(dim));
}

DensityMatrix ghz_state(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Complex> psi(dim, 0.0);
  psi.front() = psi.back() = 1.0 / std::sqrt(2.0);
  return DensityMatrix(ComplexMatrix::outer(psi));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

}  // namespace cavlqu
