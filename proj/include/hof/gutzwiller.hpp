#ifndef HOF_GUTZWILLER_HPP
#define HOF_GUTZWILLER_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hof/flux.hpp"
#include "hof/lattice.hpp"

namespace hof {

struct TrapParams {
  double omega_T = 0.0;  // curvature coefficient, units of J per site^2
  double center_x = 0.0;
  double center_y = 0.0;
  double w_x = 1.0;  // per-axis curvature multipliers
  double w_y = 1.0;
};

// epsilon = (omega_T/2) * (w_x (n - c_x)^2 + w_y (m - c_y)^2), units of J.
double site_energy(const TrapParams& trap, int n, int m);

struct GutzwillerState {
  LatticeSpec spec;
  int n_max = 8;
  // coeffs[site] is the normalized Fock-space vector f_n, n = 0..n_max.
  std::vector<Eigen::VectorXcd> coeffs;
  std::vector<std::complex<double>> phi;  // <a> per site
  std::vector<double> sigma2;             // (<n^2> - <n>^2)/<n> per site
  std::vector<double> mean_n;
  bool converged = false;
  int sweeps = 0;
  double residual = 0.0;       // final max |delta phi|
  bool cutoff_warning = false; // ground-state weight at n_max > 1e-6
  std::vector<double> energy_trace;  // variational energy after each sweep
};

// Local mean-field Hamiltonian h = J(eta* a + eta a^dag) + U n(n-1)
// + (eps - mu) n, with eta the Peierls-phased sum of neighbor phi.
Eigen::MatrixXcd local_mean_field_hamiltonian(std::complex<double> eta,
                                              double J, double U, double eps,
                                              double mu, int n_max);

struct GutzwillerOptions {
  int n_max = 8;
  double tol = 1e-8;
  int max_sweeps = 5000;
  double phi_init = 0.1;  // deterministic uniform symmetry-breaking seed
};

// Gauss-Seidel self-consistency: row-major forward then backward pass per
// sweep, each site replaced by the ground eigenvector of its local
// mean-field Hamiltonian. Converged when max per-site |delta phi| < tol.
GutzwillerState solve_ground_state(const LatticeSpec& spec,
                                   const FluxRatio& flux,
                                   const HubbardParams& params,
                                   const TrapParams& trap, double mu,
                                   const GutzwillerOptions& opts = {});

struct GutzwillerObservables {
  std::vector<std::complex<double>> phi;
  std::vector<double> sigma2;
  std::vector<double> mean_n;
  double total_n = 0.0;
  double energy = 0.0;  // variational energy (grand canonical, units of J)
};

// Recomputes phi, sigma2, <n> from the coefficients; sigma2 = 0 where
// <n> < 1e-12.
GutzwillerObservables observables(const GutzwillerState& state,
                                  const FluxRatio& flux,
                                  const HubbardParams& params,
                                  const TrapParams& trap, double mu);

}  // namespace hof

#endif
