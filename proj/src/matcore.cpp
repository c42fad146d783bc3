#include "rbnlab/matcore.hpp"

#include <cmath>

namespace rbnlab {

namespace {

void validate_density(int dim_a, int dim_b, const Cmat& m) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument("subsystem dimensions must be positive");
  }
  const auto n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("matrix size does not match dim_a * dim_b");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::hermitian) {
    throw InvalidStateError("density matrix is not Hermitian (deviation " +
                            std::to_string(herm_dev) + ")");
  }
  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol::trace) {
    throw InvalidStateError("density matrix trace is not 1 (deviation " +
                            std::to_string(trace_dev) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Cmat> solver(m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol::eigenvalue) {
    throw InvalidStateError("density matrix has negative eigenvalue " +
                            std::to_string(min_eig));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(int dim_a, int dim_b, Cmat matrix) {
  validate_density(dim_a, dim_b, matrix);
  dim_a_ = dim_a;
  dim_b_ = dim_b;
  mat_ = std::move(matrix);
}

DensityMatrix DensityMatrix::single(Cmat matrix) {
  const int d = static_cast<int>(matrix.rows());
  return DensityMatrix(d, 1, std::move(matrix));
}

DensityMatrix DensityMatrix::unchecked(int dim_a, int dim_b, Cmat matrix) {
  DensityMatrix rho;
  rho.dim_a_ = dim_a;
  rho.dim_b_ = dim_b;
  rho.mat_ = std::move(matrix);
  return rho;
}

Cmat tensor(const Cmat& a, const Cmat& b) {
  Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const Cmat& m = rho.matrix();
  if (keep == Subsystem::A) {
    Cmat out = Cmat::Zero(da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        for (int k = 0; k < db; ++k) {
          out(i, j) += m(i * db + k, j * db + k);
        }
      }
    }
    return DensityMatrix::unchecked(da, 1, std::move(out));
  }
  Cmat out = Cmat::Zero(db, db);
  for (int i = 0; i < db; ++i) {
    for (int j = 0; j < db; ++j) {
      for (int k = 0; k < da; ++k) {
        out(i, j) += m(k * db + i, k * db + j);
      }
    }
  }
  return DensityMatrix::unchecked(db, 1, std::move(out));
}

Rvec eigvals_hermitian(const Cmat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigvals_hermitian: matrix must be square");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::hermitian) {
    throw InvalidStateError("eigvals_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Cmat> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

double spectrum_entropy(const Rvec& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double x = p(i);
    if (x < 0.0) {
      if (x < -tol::eigenvalue) {
        throw InvalidStateError("spectrum_entropy: negative probability " +
                                std::to_string(x));
      }
      x = 0.0;
    }
    if (x > tol::entropy_cutoff) {
      s -= x * std::log(x);
    }
  }
  return s;
}

double entropy(const DensityMatrix& rho) {
  return spectrum_entropy(eigvals_hermitian(rho.matrix()));
}

bool is_unitary(const Cmat& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const Cmat gram = m.adjoint() * m;
  return (gram - Cmat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <=
         tolerance;
}

Cmat identity(int n) { return Cmat::Identity(n, n); }

Cmat sigma_x() {
  Cmat s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

Cmat sigma_y() {
  Cmat s(2, 2);
  s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return s;
}

Cmat sigma_z() {
  Cmat s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

double clamp_small_negative(double x) {
  return (x < 0.0 && x > -tol::negative_clamp) ? 0.0 : x;
}

}  // namespace rbnlab
