#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rbnlab {

using Complex = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;
using Rvec = Eigen::VectorXd;

/// Thrown when a value fails a physical-validity check: non-Hermitian or
/// non-normalized density matrix, incomplete projective basis or Kraus set,
/// negative spectrum beyond tolerance.
class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subsystem { A, B };

/// Numeric tolerances used by validity checks throughout the library.
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double eigenvalue = 1e-10;    // clamp window for tiny negatives
inline constexpr double entropy_cutoff = 1e-12;
inline constexpr double projector = 1e-10;
inline constexpr double kraus = 1e-12;
inline constexpr double unbiased = 1e-10;
inline constexpr double negative_clamp = 1e-9; // entropy differences
}  // namespace tol

/// Bipartite density matrix with explicit subsystem dimensions.
/// Single-subsystem states use dim_b == 1. The checked constructor enforces
/// Hermiticity (1e-10), unit trace (1e-10) and positivity (eigenvalues
/// >= -1e-10, with tiny negatives clamped to zero logically, not in storage).
class DensityMatrix {
 public:
  DensityMatrix(int dim_a, int dim_b, Cmat matrix);

  /// Single-subsystem convenience: dims (d, 1).
  static DensityMatrix single(Cmat matrix);

  /// Skips validation. For operations whose output is valid by construction
  /// (dephasing, Kraus application, partial trace); covered by op-level tests.
  static DensityMatrix unchecked(int dim_a, int dim_b, Cmat matrix);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const Cmat& matrix() const { return mat_; }

 private:
  DensityMatrix() = default;
  int dim_a_ = 0;
  int dim_b_ = 0;
  Cmat mat_;
};

/// Kronecker product a (x) b.
Cmat tensor(const Cmat& a, const Cmat& b);

/// Trace out the complement of `keep`. Result has dims (d, 1).
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Eigenvalues of a Hermitian matrix, descending. Throws InvalidStateError
/// if the input deviates from Hermitian by more than tol::hermitian.
Rvec eigvals_hermitian(const Cmat& m);

/// Shannon entropy of a probability vector in nats. Entries below
/// tol::entropy_cutoff are treated as zero; entries in [-tol::eigenvalue, 0)
/// are clamped to zero; anything more negative throws.
double spectrum_entropy(const Rvec& p);

/// von Neumann entropy S(rho) = -Tr[rho ln rho] in nats.
double entropy(const DensityMatrix& rho);

bool is_unitary(const Cmat& m, double tolerance = tol::hermitian);

Cmat identity(int n);
Cmat sigma_x();
Cmat sigma_y();
Cmat sigma_z();

/// Clamps x to 0 when -tol::negative_clamp < x < 0 (entropy differences that
/// are nonnegative in exact arithmetic).
double clamp_small_negative(double x);

}  // namespace rbnlab
