#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rbnlab/matcore.hpp"

namespace rbnlab {

/// Measurement axis on the Bloch sphere, parameterized relative to the
/// sigma_x eigenbasis: theta in [0, pi], phi in [0, 2*pi).
struct MeasurementDirection {
  double theta;
  double phi;
  MeasurementDirection(double theta, double phi);
};

/// Wraps arbitrary angles onto the canonical ranges; (2pi - theta, phi + pi)
/// describes the same axis as (theta, phi).
MeasurementDirection canonical_direction(double theta, double phi);

/// Complete set of mutually orthogonal projectors. Rank-1 is not enforced by
/// the type, but qubit operations assume it.
class ProjectiveBasis {
 public:
  explicit ProjectiveBasis(std::vector<Cmat> projectors,
                           std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  std::size_t size() const { return projectors_.size(); }
  const std::vector<Cmat>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int dim_ = 0;
  std::vector<Cmat> projectors_;
  std::vector<std::string> labels_;
};

/// Basis {|f+>, |f->} with |f+> = cos(theta/2)|+> + e^{i phi} sin(theta/2)|->
/// and |f-> its orthogonal complement. (theta=0, phi=0) is the x basis.
ProjectiveBasis qubit_basis(const MeasurementDirection& dir);

enum class PauliAxis { X, Y, Z };

ProjectiveBasis pauli_basis(PauliAxis axis);

/// Direction whose qubit_basis coincides with the given Pauli eigenbasis.
MeasurementDirection pauli_direction(PauliAxis axis);

/// Bloch vector of the basis' "+" outcome: (cos t, -sin t sin f, sin t cos f).
Eigen::Vector3d bloch_vector(const MeasurementDirection& dir);

/// Unread-measurement map on one side: Phi_A(rho) = sum_a (P_a x 1) rho (P_a x 1),
/// mirrored for side B.
DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveBasis& basis,
                      Subsystem side);

/// Both-sided map Phi_AB = Phi_A Phi_B with independent bases.
DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveBasis& basis_a,
                      const ProjectiveBasis& basis_b);

/// Irreality of the observable with the given eigenbasis:
/// S(Phi(rho)) - S(rho) >= 0, in nats. Tiny negatives are clamped to 0.
double irreality(const ProjectiveBasis& basis, const DensityMatrix& rho,
                 Subsystem side);

}  // namespace rbnlab
