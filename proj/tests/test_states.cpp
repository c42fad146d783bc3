#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rbnlab/states.hpp"

using namespace rbnlab;
using testutil::max_abs_diff;

TEST_SUITE("states") {

TEST_CASE("werner endpoints and spectrum") {
  CHECK(max_abs_diff(werner(0.0).matrix(), 0.25 * identity(4)) < 1e-15);
  CHECK(max_abs_diff(werner(1.0).matrix(), singlet().matrix()) < 1e-15);
  CHECK(entropy(werner(1.0)) == doctest::Approx(0.0).epsilon(1e-12));

  for (const double mu : {0.1, 0.4, 0.85}) {
    const Rvec ev = eigvals_hermitian(werner(mu).matrix());
    CHECK(ev(0) == doctest::Approx((1.0 + 3.0 * mu) / 4.0).epsilon(1e-13));
    CHECK(ev(3) == doctest::Approx((1.0 - mu) / 4.0).epsilon(1e-13));
    CHECK_NOTHROW(DensityMatrix(2, 2, werner(mu).matrix()));
  }

  CHECK_THROWS_AS(werner(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(werner(1.01), std::invalid_argument);
}

TEST_CASE("werner is invariant under identical local rotations") {
  SplitMix64 rng(41);
  for (const double mu : {0.3, 0.7}) {
    const DensityMatrix rho = werner(mu);
    for (int trial = 0; trial < 5; ++trial) {
      const Cmat u = testutil::random_unitary(rng, 2);
      const Cmat uu = tensor(u, u);
      CHECK(max_abs_diff(uu * rho.matrix() * uu.adjoint(), rho.matrix()) <
            1e-10);
    }
  }
}

TEST_CASE("bell states") {
  CHECK(max_abs_diff(partial_trace(singlet(), Subsystem::A).matrix(),
                     0.5 * identity(2)) < 1e-14);
  CHECK(max_abs_diff(partial_trace(singlet(), Subsystem::B).matrix(),
                     0.5 * identity(2)) < 1e-14);
  CHECK(entropy(bell_phi_plus()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(entropy(bell_phi_minus()) == doctest::Approx(0.0).epsilon(1e-12));

  // orthogonal pure states: Tr[P Q] = |<phi+|phi->|^2 = 0
  const double overlap =
      (bell_phi_plus().matrix() * bell_phi_minus().matrix()).trace().real();
  CHECK(std::abs(overlap) < 1e-14);
}

TEST_CASE("product states") {
  const DensityMatrix half = DensityMatrix::single(0.5 * identity(2));
  CHECK(max_abs_diff(product(half, half).matrix(), 0.25 * identity(4)) < 1e-15);

  Cmat zero = Cmat::Zero(2, 2);
  zero(0, 0) = 1.0;
  Cmat plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const DensityMatrix pure =
      product(DensityMatrix::single(zero), DensityMatrix::single(plus));
  CHECK(entropy(pure) == doctest::Approx(0.0).epsilon(1e-12));

  Cmat da = Cmat::Zero(2, 2);
  da.diagonal() << 0.7, 0.3;
  Cmat db = Cmat::Zero(2, 2);
  db.diagonal() << 0.6, 0.4;
  const DensityMatrix joint =
      product(DensityMatrix::single(da), DensityMatrix::single(db));
  Cmat expected = Cmat::Zero(4, 4);
  expected.diagonal() << 0.42, 0.28, 0.18, 0.12;
  CHECK(max_abs_diff(joint.matrix(), expected) < 1e-15);

  CHECK_THROWS_AS(product(werner(0.5), half), std::invalid_argument);
}

TEST_CASE("classical-classical construction") {
  const ProjectiveBasis z = pauli_basis(PauliAxis::Z);
  const ProjectiveBasis x = pauli_basis(PauliAxis::X);

  Eigen::Matrix2d uniform;
  uniform.setConstant(0.25);
  CHECK(max_abs_diff(classical_classical(uniform, z, x).matrix(),
                     0.25 * identity(4)) < 1e-14);

  Eigen::Matrix2d diag_half;
  diag_half << 0.5, 0.0, 0.0, 0.5;
  Cmat expected = Cmat::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs_diff(classical_classical(diag_half, z, z).matrix(), expected) <
        1e-14);

  Eigen::Matrix2d bad;
  bad << 0.5, 0.2, 0.2, 0.2;
  CHECK_THROWS_AS(classical_classical(bad, z, z), InvalidStateError);
  Eigen::Matrix2d negative;
  negative << 0.6, -0.1, 0.3, 0.2;
  CHECK_THROWS_AS(classical_classical(negative, z, z), InvalidStateError);
}

TEST_CASE("classical-classical states are dephasing fixed points") {
  const ProjectiveBasis za = pauli_basis(PauliAxis::Z);
  const ProjectiveBasis xb = pauli_basis(PauliAxis::X);
  Eigen::Matrix2d p;
  p << 0.4, 0.1, 0.1, 0.4;
  const DensityMatrix cc = classical_classical(p, za, xb);
  CHECK(max_abs_diff(dephase(cc, za, Subsystem::A).matrix(), cc.matrix()) <
        1e-13);
  CHECK(max_abs_diff(dephase(cc, xb, Subsystem::B).matrix(), cc.matrix()) <
        1e-13);
  CHECK(max_abs_diff(dephase(cc, za, xb).matrix(), cc.matrix()) < 1e-13);
}

}  // TEST_SUITE
