#ifndef HOF_DYNAMICS_HPP
#define HOF_DYNAMICS_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hof/lattice.hpp"

namespace hof {

struct WaveState {
  LatticeSpec spec;
  Eigen::VectorXcd amplitudes;
  double time = 0.0;  // units of 1/J

  double norm() const { return amplitudes.norm(); }
};

// |Psi(0)> with equal amplitude 1/sqrt(n_x*n_y) on every site.
WaveState uniform_initial_state(const LatticeSpec& spec);

// Unitary propagation e^{-iH dt}|psi>. Dimensions <= spectral_threshold use
// a full spectral decomposition; larger ones a Chebyshev expansion with
// truncation error < 1e-10. Throws ContractError on dimension mismatch.
WaveState evolve(const WaveState& state, const SparseHermitian& op, double dt);

// Caches the eigendecomposition once so repeated time samples cost two dense
// mat-vecs each.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const SparseHermitian& op);
  // State at absolute time t starting from psi0 at t=0.
  Eigen::VectorXcd at(const Eigen::VectorXcd& psi0, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

// Chebyshev propagation of e^{-iH dt} psi; used for dimensions beyond the
// dense threshold and as the second route in the dual-path consistency check.
Eigen::VectorXcd chebyshev_evolve(const SparseHermitian& op,
                                  const Eigen::VectorXcd& psi, double dt,
                                  double tol = 1e-12);

// x-averaged occupation per row m: sum_n |psi_{n,m}|^2.
std::vector<double> density_profile(const WaveState& state);

// Max over m of the per-row spread max_{n,n'} |rho_{n,m} - rho_{n',m}|;
// zero (to rounding) when bc_x is periodic and the start was uniform.
double x_spread(const WaveState& state);

struct DensityProfileSeries {
  std::vector<double> times;
  std::vector<std::vector<double>> density;  // density[t][m]
};

// Smallest lag s <= max_period whose circular autocorrelation on the
// boundary-trimmed bulk exceeds `threshold` of the zero-lag value;
// nullopt when aperiodic. A constant profile has period 1.
std::optional<int> detect_period(const std::vector<double>& profile,
                                 int max_period, int trim = 0,
                                 double threshold = 0.95);

}  // namespace hof

#endif
