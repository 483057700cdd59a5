#include "hof/dynamics.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hof/error.hpp"

namespace hof {

namespace {
constexpr int kDenseThreshold = 4096;
}

WaveState uniform_initial_state(const LatticeSpec& spec) {
  spec.validate();
  WaveState s;
  s.spec = spec;
  s.amplitudes = Eigen::VectorXcd::Constant(
      spec.sites(), 1.0 / std::sqrt(static_cast<double>(spec.sites())));
  s.time = 0.0;
  return s;
}

SpectralPropagator::SpectralPropagator(const SparseHermitian& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.dense());
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

Eigen::VectorXcd SpectralPropagator::at(const Eigen::VectorXcd& psi0,
                                        double t) const {
  Eigen::VectorXcd c = eigenvectors_.adjoint() * psi0;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    c[i] *= std::exp(std::complex<double>(0.0, -eigenvalues_[i] * t));
  return eigenvectors_ * c;
}

Eigen::VectorXcd chebyshev_evolve(const SparseHermitian& op,
                                  const Eigen::VectorXcd& psi, double dt,
                                  double tol) {
  if (dt == 0.0) return psi;
  const double a = std::max(op.inf_norm_bound(), 1e-30);
  const double tau = a * dt;
  const std::complex<double> mi(0.0, -1.0);

  // e^{-iH dt} = sum_k (2 - delta_k0) (-i)^k J_k(tau) T_k(H/a)
  Eigen::VectorXcd t_prev = psi;           // T_0 psi
  Eigen::VectorXcd t_cur(psi.size());      // T_1 psi = (H/a) psi
  Eigen::VectorXcd tmp(psi.size());
  op.apply(psi, t_cur);
  t_cur /= a;

  Eigen::VectorXcd result = std::cyl_bessel_j(0, tau) * t_prev;
  std::complex<double> phase = mi;
  result += 2.0 * phase * std::cyl_bessel_j(1, tau) * t_cur;

  for (int k = 2;; ++k) {
    op.apply(t_cur, tmp);
    tmp = (2.0 / a) * tmp - t_prev;
    t_prev.swap(t_cur);
    t_cur.swap(tmp);
    phase *= mi;
    double coeff = std::cyl_bessel_j(k, tau);
    result += 2.0 * phase * coeff * t_cur;
    if (k > tau && std::abs(coeff) < tol) break;
    if (k > 10000) throw Error("chebyshev expansion failed to converge");
  }
  return result;
}

WaveState evolve(const WaveState& state, const SparseHermitian& op,
                 double dt) {
  if (op.dim() != state.amplitudes.size())
    throw ContractError("evolve: operator dimension " +
                        std::to_string(op.dim()) +
                        " does not match state dimension " +
                        std::to_string(state.amplitudes.size()));
  if (dt < 0.0) throw ContractError("evolve: dt must be >= 0");
  WaveState out = state;
  if (dt == 0.0) return out;
  if (op.dim() <= kDenseThreshold) {
    SpectralPropagator prop(op);
    out.amplitudes = prop.at(state.amplitudes, dt);
  } else {
    out.amplitudes = chebyshev_evolve(op, state.amplitudes, dt);
  }
  out.time += dt;
  return out;
}

std::vector<double> density_profile(const WaveState& state) {
  const auto& spec = state.spec;
  std::vector<double> rho(spec.n_y, 0.0);
  for (int m = 0; m < spec.n_y; ++m)
    for (int n = 0; n < spec.n_x; ++n)
      rho[m] += std::norm(state.amplitudes[spec.index(n, m)]);
  return rho;
}

double x_spread(const WaveState& state) {
  const auto& spec = state.spec;
  double worst = 0.0;
  for (int m = 0; m < spec.n_y; ++m) {
    double lo = 1e300, hi = -1e300;
    for (int n = 0; n < spec.n_x; ++n) {
      double d = std::norm(state.amplitudes[spec.index(n, m)]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

std::optional<int> detect_period(const std::vector<double>& profile,
                                 int max_period, int trim, double threshold) {
  const int total = static_cast<int>(profile.size());
  const int len = total - 2 * trim;
  if (len < 2 * max_period)
    throw ContractError("detect_period: bulk length must be >= 2*max_period");
  std::vector<double> bulk(profile.begin() + trim, profile.begin() + trim + len);
  double mean = std::accumulate(bulk.begin(), bulk.end(), 0.0) / len;
  for (double& v : bulk) v -= mean;
  double c0 = 0.0;
  for (double v : bulk) c0 += v * v;
  if (c0 < 1e-18) return 1;  // constant profile
  for (int s = 1; s <= max_period; ++s) {
    double cs = 0.0;
    for (int i = 0; i < len; ++i) cs += bulk[i] * bulk[(i + s) % len];
    if (cs > threshold * c0) return s;
  }
  return std::nullopt;
}

}  // namespace hof
