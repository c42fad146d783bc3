#include "rbnlab/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "rbnlab/parallel.hpp"

namespace rbnlab {

namespace {

constexpr double kPi = std::numbers::pi;

double xlnx(double x) { return x > tol::entropy_cutoff ? x * std::log(x) : 0.0; }

double entropy_2x2(double m00, double m11, const Complex& m01) {
  const double tr = m00 + m11;
  const double det = m00 * m11 - std::norm(m01);
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return -xlnx(0.5 * (tr + disc)) - xlnx(0.5 * (tr - disc));
}

// Columns are the measurement kets of (theta, phi) in the computational basis.
Eigen::Matrix2cd direction_unitary(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::exp(Complex(0.0, phi));
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd v;
  v(0, 0) = r * (c + e * s);
  v(1, 0) = r * (c - e * s);
  v(0, 1) = r * (-s + e * c);
  v(1, 1) = r * (-s - e * c);
  return v;
}

// Per-state snapshot for the hot loops. Everything computed in the frame
// rotated by Va (x) Vb, where the dephasings become diagonal/block-diagonal.
struct TwoQubitContext {
  Eigen::Matrix4cd rho;
  double s_rho;
  Eigen::Matrix2cd rho_a, rho_b;
  double s_a, s_b;

  explicit TwoQubitContext(const DensityMatrix& state) {
    if (state.dim_a() != 2 || state.dim_b() != 2) {
      throw std::invalid_argument("two-qubit state required");
    }
    rho = state.matrix();
    s_rho = entropy(state);
    rho_a.setZero();
    rho_b.setZero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          rho_a(i, j) += rho(i * 2 + k, j * 2 + k);
          rho_b(i, j) += rho(k * 2 + i, k * 2 + j);
        }
      }
    }
    s_a = entropy_2x2(rho_a(0, 0).real(), rho_a(1, 1).real(), rho_a(0, 1));
    s_b = entropy_2x2(rho_b(0, 0).real(), rho_b(1, 1).real(), rho_b(0, 1));
  }

  Eigen::Matrix4cd rotated(const Eigen::Matrix2cd& va,
                           const Eigen::Matrix2cd& vb) const {
    Eigen::Matrix4cd w;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        w.block<2, 2>(2 * i, 2 * j) = va(i, j) * vb;
      }
    }
    return w.adjoint() * rho * w;
  }

  double eta_rotated(const Eigen::Matrix4cd& r) const {
    double s_ab = 0.0;
    for (int i = 0; i < 4; ++i) s_ab -= xlnx(r(i, i).real());
    double s_a_deph = 0.0;
    for (int a = 0; a < 2; ++a) {
      s_a_deph += entropy_2x2(r(2 * a, 2 * a).real(),
                              r(2 * a + 1, 2 * a + 1).real(), r(2 * a, 2 * a + 1));
    }
    double s_b_deph = 0.0;
    for (int b = 0; b < 2; ++b) {
      s_b_deph += entropy_2x2(r(b, b).real(), r(2 + b, 2 + b).real(), r(b, 2 + b));
    }
    return s_a_deph + s_b_deph - s_ab - s_rho;
  }

  double eta(double ta, double fa, double tb, double fb) const {
    return eta_rotated(rotated(direction_unitary(ta, fa), direction_unitary(tb, fb)));
  }

  // Rulli-Sarandy global discord objective for one context.
  double discord(double ta, double fa, double tb, double fb) const {
    const Eigen::Matrix2cd va = direction_unitary(ta, fa);
    const Eigen::Matrix2cd vb = direction_unitary(tb, fb);
    const Eigen::Matrix4cd r = rotated(va, vb);
    double s_ab = 0.0;
    for (int i = 0; i < 4; ++i) s_ab -= xlnx(r(i, i).real());
    const Eigen::Matrix2cd ma = va.adjoint() * rho_a * va;
    const Eigen::Matrix2cd mb = vb.adjoint() * rho_b * vb;
    const double h_a = -xlnx(ma(0, 0).real()) - xlnx(ma(1, 1).real());
    const double h_b = -xlnx(mb(0, 0).real()) - xlnx(mb(1, 1).real());
    return (s_ab - s_rho) - (h_a - s_a) - (h_b - s_b);
  }
};

struct NmResult {
  std::array<double, 4> x{};
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};

// Standard Nelder-Mead on 4 unconstrained angles (the objective is periodic).
template <typename F>
NmResult nelder_mead(F&& f, const std::array<double, 4>& x0,
                     const std::array<double, 4>& step, double ftol,
                     int max_evals) {
  constexpr int n = 4;
  std::array<std::array<double, 4>, n + 1> xs;
  std::array<double, n + 1> fs;
  int evals = 0;
  auto eval = [&](const std::array<double, 4>& x) {
    ++evals;
    return f(x);
  };
  xs[0] = x0;
  fs[0] = eval(xs[0]);
  for (int i = 0; i < n; ++i) {
    xs[i + 1] = x0;
    xs[i + 1][i] += step[i];
    fs[i + 1] = eval(xs[i + 1]);
  }
  std::array<int, n + 1> order;
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a] < fs[b]; });
    if (fs[order[n]] - fs[order[0]] <= ftol) {
      converged = true;
      break;
    }
    if (evals >= max_evals) break;

    std::array<double, 4> centroid{};
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d < 4; ++d) centroid[d] += xs[order[i]][d];
    }
    for (int d = 0; d < 4; ++d) centroid[d] /= n;
    const int worst = order[n];

    auto blend = [&](double coeff) {
      std::array<double, 4> x;
      for (int d = 0; d < 4; ++d) {
        x[d] = centroid[d] + coeff * (xs[worst][d] - centroid[d]);
      }
      return x;
    };

    const auto xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < fs[order[0]]) {
      const auto xe = blend(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[order[n - 1]]) {
      xs[worst] = xr;
      fs[worst] = fr;
      continue;
    }
    const bool outside = fr < fs[worst];
    const auto xc = blend(outside ? -0.5 : 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fs[worst])) {
      xs[worst] = xc;
      fs[worst] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      for (int d = 0; d < 4; ++d) {
        xs[order[i]][d] =
            xs[order[0]][d] + 0.5 * (xs[order[i]][d] - xs[order[0]][d]);
      }
      fs[order[i]] = eval(xs[order[i]]);
    }
    if (evals >= max_evals) break;
  }
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return fs[a] < fs[b]; });
  return {xs[order[0]], fs[order[0]], evals, converged};
}

void validate_config(const OptimizerConfig& cfg) {
  if (cfg.coarse_grid_per_angle < 1 || cfg.restarts < 1 || cfg.max_evals < 1) {
    throw std::invalid_argument("optimizer counts must be >= 1");
  }
  if (!(cfg.refine_tolerance > 0.0)) {
    throw std::invalid_argument("refine_tolerance must be positive");
  }
}

// Shared grid + multistart driver. `objective` is minimized.
template <typename F>
OptimizerResult optimize(const F& objective, const OptimizerConfig& cfg) {
  validate_config(cfg);
  const int g = cfg.coarse_grid_per_angle;
  const long grid_total = static_cast<long>(g) * g * g * g;
  std::vector<double> thetas(g), phis(g);
  for (int i = 0; i < g; ++i) {
    thetas[i] = (i + 0.5) * kPi / g;
    phis[i] = (i + 0.5) * 2.0 * kPi / g;
  }

  std::vector<double> values(grid_total);
  parallel_for(static_cast<long>(g) * g, [&](std::int64_t ab) {
    const int ia = static_cast<int>(ab) / g;
    const int ja = static_cast<int>(ab) % g;
    long idx = ab * g * g;
    for (int ib = 0; ib < g; ++ib) {
      for (int jb = 0; jb < g; ++jb, ++idx) {
        values[idx] = objective({thetas[ia], phis[ja], thetas[ib], phis[jb]});
      }
    }
  });

  const int restarts = static_cast<int>(
      std::min<long>(cfg.restarts, grid_total));
  std::vector<long> cells(grid_total);
  std::iota(cells.begin(), cells.end(), 0L);
  std::partial_sort(cells.begin(), cells.begin() + restarts, cells.end(),
                    [&](long a, long b) {
                      return values[a] != values[b] ? values[a] < values[b]
                                                    : a < b;
                    });

  const int per_budget = std::max(1, cfg.max_evals / restarts);
  const std::array<double, 4> step = {0.5 * kPi / g, kPi / g, 0.5 * kPi / g,
                                      kPi / g};
  std::vector<NmResult> runs(restarts);
  parallel_for(restarts, [&](std::int64_t r) {
    const long cell = cells[r];
    const int jb = static_cast<int>(cell % g);
    const int ib = static_cast<int>((cell / g) % g);
    const int ja = static_cast<int>((cell / g / g) % g);
    const int ia = static_cast<int>(cell / g / g / g);
    runs[r] = nelder_mead(objective,
                          {thetas[ia], phis[ja], thetas[ib], phis[jb]}, step,
                          cfg.refine_tolerance, per_budget);
  });

  int best = 0;
  for (int r = 1; r < restarts; ++r) {
    if (runs[r].f < runs[best].f) best = r;
  }
  long total_evals = grid_total;
  for (const NmResult& run : runs) total_evals += run.evals;

  OptimizerResult result;
  result.value = runs[best].f;
  result.angles_a = canonical_direction(runs[best].x[0], runs[best].x[1]);
  result.angles_b = canonical_direction(runs[best].x[2], runs[best].x[3]);
  result.evaluations = total_evals;
  result.converged = runs[best].converged;
  return result;
}

}  // namespace

double eta(const ProjectiveBasis& basis_a, const ProjectiveBasis& basis_b,
           const DensityMatrix& rho) {
  const DensityMatrix deph_a = dephase(rho, basis_a, Subsystem::A);
  const double value = entropy(deph_a) + entropy(dephase(rho, basis_b, Subsystem::B)) -
                       entropy(dephase(deph_a, basis_b, Subsystem::B)) -
                       entropy(rho);
  return clamp_small_negative(value);
}

double eta(const DensityMatrix& rho, const MeasurementDirection& dir_a,
           const MeasurementDirection& dir_b) {
  const TwoQubitContext ctx(rho);
  return clamp_small_negative(
      ctx.eta(dir_a.theta, dir_a.phi, dir_b.theta, dir_b.phi));
}

OptimizerResult rbn(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const TwoQubitContext ctx(rho);
  OptimizerResult result = optimize(
      [&](const std::array<double, 4>& x) {
        return -ctx.eta(x[0], x[1], x[2], x[3]);
      },
      cfg);
  result.value = clamp_small_negative(-result.value);
  return result;
}

double werner_rbn_closed_form(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("werner_rbn_closed_form: mu must lie in [0, 1]");
  }
  auto xln_quarter = [](double u) {
    return u > 0.0 ? u * std::log(u / 4.0) : 0.0;
  };
  const double s_dephased = -0.5 * (xln_quarter(1.0 + mu) + xln_quarter(1.0 - mu));
  const double s_werner =
      -xlnx((1.0 + 3.0 * mu) / 4.0) - 3.0 * xlnx((1.0 - mu) / 4.0);
  return std::max(0.0, s_dephased - s_werner);
}

OptimizerResult global_discord(const DensityMatrix& rho,
                               const OptimizerConfig& cfg) {
  const TwoQubitContext ctx(rho);
  OptimizerResult result = optimize(
      [&](const std::array<double, 4>& x) {
        return ctx.discord(x[0], x[1], x[2], x[3]);
      },
      cfg);
  result.value = clamp_small_negative(result.value);
  return result;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw std::invalid_argument("concurrence: two-qubit state required");
  }
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd m = rho.matrix();
  const Eigen::Matrix4cd r = m * yy * m.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(r, false);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    lam[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace rbnlab
