#include "hof/wannier.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hof/error.hpp"

namespace hof {

namespace {
constexpr double kPi = std::numbers::pi;

// Central-equation matrix at quasimomentum q (units of k): basis
// e^{i(q + 2j)x}, kinetic (q + 2j)^2 E_R, potential V0/2 on the diagonal
// and -V0/4 on the first off-diagonals.
Eigen::MatrixXd central_equation(double depth, double q, int n_planewaves) {
  const int half = n_planewaves / 2;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_planewaves, n_planewaves);
  for (int j = 0; j < n_planewaves; ++j) {
    double g = q + 2.0 * (j - half);
    h(j, j) = g * g + depth / 2.0;
    if (j + 1 < n_planewaves) {
      h(j, j + 1) = -depth / 4.0;
      h(j + 1, j) = -depth / 4.0;
    }
  }
  return h;
}

}  // namespace

BandSolution solve_bands_1d(double depth, int n_planewaves, int q_samples) {
  if (depth < 0.0) throw DomainError("lattice depth must be >= 0");
  if (n_planewaves < 11 || n_planewaves % 2 == 0)
    throw ContractError("n_planewaves must be odd and >= 11");

  BandSolution sol;
  sol.depth = depth;
  sol.n_planewaves = n_planewaves;
  sol.quasimomenta.resize(q_samples);
  sol.band0_energies.resize(q_samples);
  sol.bloch_coeffs.resize(q_samples);

  for (int iq = 0; iq < q_samples; ++iq) {
    double q = -1.0 + 2.0 * iq / q_samples;  // first BZ in units of k
    sol.quasimomenta[iq] = q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        central_equation(depth, q, n_planewaves));
    sol.band0_energies[iq] = es.eigenvalues()[0];
    Eigen::VectorXd c = es.eigenvectors().col(0);
    // psi_q(0) = sum_j c_j; make it real positive.
    double at_zero = c.sum();
    if (at_zero < 0.0) c = -c;
    auto& coeffs = sol.bloch_coeffs[iq];
    coeffs.resize(n_planewaves);
    for (int j = 0; j < n_planewaves; ++j) coeffs[j] = c[j];
  }

  // Basis adequacy: band edges must be stable against a larger basis.
  auto edge = [&](int npw, double q) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        central_equation(depth, q, npw), Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
  };
  sol.basis_converged =
      std::abs(edge(n_planewaves, 0.0) - edge(n_planewaves + 8, 0.0)) < 1e-8 &&
      std::abs(edge(n_planewaves, -1.0) - edge(n_planewaves + 8, -1.0)) < 1e-8;
  return sol;
}

WannierFunction wannier(const BandSolution& sol, int grid_points,
                        int periods) {
  const int half = sol.n_planewaves / 2;
  const int nq = static_cast<int>(sol.quasimomenta.size());
  const double width = periods * kPi;  // lattice period is pi in k-units
  WannierFunction w;
  w.dx = width / grid_points;
  w.grid.resize(grid_points);
  w.values.resize(grid_points);

  for (int i = 0; i < grid_points; ++i) {
    double x = -width / 2.0 + i * w.dx;
    w.grid[i] = x;
    std::complex<double> acc = 0.0;
    for (int iq = 0; iq < nq; ++iq) {
      double q = sol.quasimomenta[iq];
      for (int j = 0; j < sol.n_planewaves; ++j) {
        double g = q + 2.0 * (j - half);
        acc += sol.bloch_coeffs[iq][j] *
               std::exp(std::complex<double>(0.0, g * x));
      }
    }
    w.values[i] = acc.real();  // imaginary part cancels by the q, -q pairing
  }

  double norm2 = 0.0;
  for (double v : w.values) norm2 += v * v * w.dx;
  double scale = 1.0 / std::sqrt(norm2);
  for (double& v : w.values) v *= scale;
  return w;
}

double gamma_x(double depth) {
  if (depth <= 0.0) throw DomainError("gamma_x requires depth > 0");
  WannierFunction w = wannier(solve_bands_1d(depth));
  // lambda/4 = pi/2 shifts by an exact number of grid points.
  const int n = static_cast<int>(w.values.size());
  const int shift = static_cast<int>(std::lround((kPi / 2.0) / w.dx));
  double acc = 0.0;
  for (int i = 0; i + shift < n; ++i)
    acc += w.values[i + shift] * w.values[i] * w.dx;
  return acc;
}

double gamma_y(double depth, double alpha) {
  if (depth <= 0.0) throw DomainError("gamma_y requires depth > 0");
  WannierFunction w = wannier(solve_bands_1d(depth));
  double acc = 0.0;
  for (std::size_t i = 0; i < w.values.size(); ++i)
    acc += w.values[i] * w.values[i] * std::cos(2.0 * alpha * w.grid[i]) * w.dx;
  return acc;
}

HoppingEstimate hopping_J(const BandSolution& sol) {
  double lo = 1e300, hi = -1e300;
  for (double e : sol.band0_energies) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  HoppingEstimate est;
  est.value = (hi - lo) / 4.0;
  est.shallow_warning = sol.depth < 2.0;
  return est;
}

double hopping_J_fourier(const BandSolution& sol) {
  // band0(q) ~ e0 - 2 J cos(q a), a = pi; J is the magnitude of the first
  // Fourier coefficient over the BZ.
  const int nq = static_cast<int>(sol.quasimomenta.size());
  std::complex<double> c1 = 0.0;
  for (int iq = 0; iq < nq; ++iq)
    c1 += sol.band0_energies[iq] *
          std::exp(std::complex<double>(0.0, -kPi * sol.quasimomenta[iq]));
  return std::abs(c1) / nq;
}

EffectiveJx effective_jx(double Omega, double depth_x, double depth_y,
                         double alpha, double Delta) {
  if (Omega < 0.0) throw DomainError("Omega must be >= 0");
  EffectiveJx out;
  out.value = Omega * gamma_x(depth_x) * gamma_y(depth_y, alpha) / 2.0;
  double nu_x = 2.0 * std::sqrt(depth_x);  // trap frequency in E_R units
  out.omega_ok = Omega < Delta / 10.0;
  out.delta_ok = Delta < nu_x / 10.0;
  return out;
}

}  // namespace hof
