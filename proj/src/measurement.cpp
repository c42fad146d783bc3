#include "rbnlab/measurement.hpp"

#include <cmath>
#include <numbers>

namespace rbnlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cvec plus_ket() {
  Cvec k(2);
  k << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return k;
}

Cvec minus_ket() {
  Cvec k(2);
  k << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return k;
}

Cmat projector(const Cvec& ket) { return ket * ket.adjoint(); }

}  // namespace

MeasurementDirection::MeasurementDirection(double theta_in, double phi_in)
    : theta(theta_in), phi(phi_in) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::invalid_argument("phi must lie in [0, 2*pi)");
  }
}

MeasurementDirection canonical_direction(double theta, double phi) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > kPi) {
    t = kTwoPi - t;
    phi += kPi;
  }
  double f = std::fmod(phi, kTwoPi);
  if (f < 0.0) f += kTwoPi;
  if (f >= kTwoPi) f = 0.0;
  if (t > kPi) t = kPi;
  return MeasurementDirection(t, f);
}

ProjectiveBasis::ProjectiveBasis(std::vector<Cmat> projectors,
                                 std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) {
    throw std::invalid_argument("basis needs at least one projector");
  }
  dim_ = static_cast<int>(projectors_[0].rows());
  Cmat sum = Cmat::Zero(dim_, dim_);
  for (const Cmat& p : projectors_) {
    if (p.rows() != dim_ || p.cols() != dim_) {
      throw std::invalid_argument("projectors must share one square dimension");
    }
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol::projector) {
      throw InvalidStateError("projector is not Hermitian");
    }
    sum += p;
  }
  if ((sum - Cmat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > tol::projector) {
    throw InvalidStateError("projectors do not sum to the identity");
  }
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
      const Cmat expected =
          (i == j) ? projectors_[i] : Cmat::Zero(dim_, dim_).eval();
      if ((projectors_[i] * projectors_[j] - expected).cwiseAbs().maxCoeff() >
          tol::projector) {
        throw InvalidStateError("projectors are not mutually orthogonal");
      }
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
      labels_.push_back(std::to_string(i));
    }
  } else if (labels_.size() != projectors_.size()) {
    throw std::invalid_argument("label count must match projector count");
  }
}

ProjectiveBasis qubit_basis(const MeasurementDirection& dir) {
  const double c = std::cos(dir.theta / 2.0);
  const double s = std::sin(dir.theta / 2.0);
  const Complex phase = std::exp(Complex(0.0, dir.phi));
  const Cvec plus = plus_ket();
  const Cvec minus = minus_ket();
  Cvec up = c * plus + phase * s * minus;
  Cvec down = -s * plus + phase * c * minus;
  return ProjectiveBasis({projector(up), projector(down)}, {"+", "-"});
}

ProjectiveBasis pauli_basis(PauliAxis axis) {
  Cvec up(2), down(2);
  switch (axis) {
    case PauliAxis::X:
      up = plus_ket();
      down = minus_ket();
      break;
    case PauliAxis::Y:
      up << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
      down << 1.0 / std::sqrt(2.0), Complex(0.0, -1.0 / std::sqrt(2.0));
      break;
    case PauliAxis::Z:
      up << 1.0, 0.0;
      down << 0.0, 1.0;
      break;
  }
  return ProjectiveBasis({projector(up), projector(down)}, {"+", "-"});
}

MeasurementDirection pauli_direction(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return MeasurementDirection(0.0, 0.0);
    case PauliAxis::Y:
      return MeasurementDirection(kPi / 2.0, 1.5 * kPi);
    case PauliAxis::Z:
      return MeasurementDirection(kPi / 2.0, 0.0);
  }
  throw std::invalid_argument("unknown Pauli axis");
}

Eigen::Vector3d bloch_vector(const MeasurementDirection& dir) {
  return {std::cos(dir.theta), -std::sin(dir.theta) * std::sin(dir.phi),
          std::sin(dir.theta) * std::cos(dir.phi)};
}

DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveBasis& basis,
                      Subsystem side) {
  const int side_dim = side == Subsystem::A ? rho.dim_a() : rho.dim_b();
  if (basis.dim() != side_dim) {
    throw std::invalid_argument("basis dimension does not match the side");
  }
  const int n = rho.dim();
  Cmat out = Cmat::Zero(n, n);
  for (const Cmat& p : basis.projectors()) {
    const Cmat op = side == Subsystem::A ? tensor(p, identity(rho.dim_b()))
                                         : tensor(identity(rho.dim_a()), p);
    out += op * rho.matrix() * op;
  }
  return DensityMatrix::unchecked(rho.dim_a(), rho.dim_b(), std::move(out));
}

DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveBasis& basis_a,
                      const ProjectiveBasis& basis_b) {
  return dephase(dephase(rho, basis_a, Subsystem::A), basis_b, Subsystem::B);
}

double irreality(const ProjectiveBasis& basis, const DensityMatrix& rho,
                 Subsystem side) {
  return clamp_small_negative(entropy(dephase(rho, basis, side)) -
                              entropy(rho));
}

}  // namespace rbnlab
