#include "rbnlab/states.hpp"

#include <cmath>

namespace rbnlab {

namespace {

DensityMatrix pure_two_qubit(const Cvec& ket) {
  return DensityMatrix::unchecked(2, 2, ket * ket.adjoint());
}

}  // namespace

DensityMatrix werner(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("werner: mu must lie in [0, 1]");
  }
  Cmat m = (1.0 - mu) / 4.0 * Cmat::Identity(4, 4) + mu * singlet().matrix();
  return DensityMatrix::unchecked(2, 2, std::move(m));
}

DensityMatrix singlet() {
  Cvec s = Cvec::Zero(4);
  s(1) = 1.0 / std::sqrt(2.0);
  s(2) = -1.0 / std::sqrt(2.0);
  return pure_two_qubit(s);
}

DensityMatrix bell_phi_plus() {
  Cvec s = Cvec::Zero(4);
  s(0) = 1.0 / std::sqrt(2.0);
  s(3) = 1.0 / std::sqrt(2.0);
  return pure_two_qubit(s);
}

DensityMatrix bell_phi_minus() {
  Cvec s = Cvec::Zero(4);
  s(0) = 1.0 / std::sqrt(2.0);
  s(3) = -1.0 / std::sqrt(2.0);
  return pure_two_qubit(s);
}

DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  if (rho_a.dim_b() != 1 || rho_b.dim_b() != 1) {
    throw std::invalid_argument("product: inputs must be single-subsystem states");
  }
  return DensityMatrix::unchecked(rho_a.dim(), rho_b.dim(),
                                  tensor(rho_a.matrix(), rho_b.matrix()));
}

DensityMatrix classical_classical(const Eigen::Matrix2d& p,
                                  const ProjectiveBasis& basis_a,
                                  const ProjectiveBasis& basis_b) {
  if (basis_a.size() != 2 || basis_b.size() != 2 || basis_a.dim() != 2 ||
      basis_b.dim() != 2) {
    throw std::invalid_argument("classical_classical: qubit bases required");
  }
  if (p.minCoeff() < 0.0) {
    throw InvalidStateError("probability table has a negative entry");
  }
  if (std::abs(p.sum() - 1.0) > tol::trace) {
    throw InvalidStateError("probability table does not sum to 1");
  }
  Cmat m = Cmat::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      m += p(a, b) *
           tensor(basis_a.projectors()[a], basis_b.projectors()[b]);
    }
  }
  return DensityMatrix::unchecked(2, 2, std::move(m));
}

}  // namespace rbnlab
