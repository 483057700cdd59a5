#ifndef HOF_WANNIER_HPP
#define HOF_WANNIER_HPP

#include <complex>
#include <vector>

namespace hof {

// 1D sinusoidal-lattice band problem, V(x) = V0 sin^2(kx). Units: energies
// in E_R, lengths in 1/k (so the lattice period lambda/2 is pi).
struct BandSolution {
  double depth = 0.0;       // V0 / E_R
  int n_planewaves = 41;    // odd
  std::vector<double> quasimomenta;     // in units of k, first BZ [-1, 1)
  std::vector<double> band0_energies;   // lowest band, units of E_R
  // Plane-wave coefficients of the lowest-band Bloch functions, phase-fixed
  // so psi_q(0) is real positive; coeffs[iq][j] multiplies e^{i(q + 2(j-J))x}.
  std::vector<std::vector<std::complex<double>>> bloch_coeffs;
  bool basis_converged = true;  // false if band edges move > 1e-8 E_R on growth
};

struct WannierFunction {
  std::vector<double> grid;    // x samples in units of 1/k, uniform
  std::vector<double> values;  // real samples, sum |w|^2 dx = 1
  double dx = 0.0;
};

// Central-equation diagonalization of the lowest band on a uniform
// quasimomentum grid. n_planewaves must be odd and >= 11.
BandSolution solve_bands_1d(double depth, int n_planewaves = 41,
                            int q_samples = 64);

// Real, even, maximally localized lowest-band Wannier function,
// w(x) = N^-1 sum_q psi_q(x) with psi_q(0) real positive. Sampled on 1024
// points spanning 8 lattice periods.
WannierFunction wannier(const BandSolution& solution, int grid_points = 1024,
                        int periods = 8);

// Gamma_x = int w(x) w(x - lambda/4) dx  (displacement pi/2 in k-units).
double gamma_x(double depth);

// Gamma_y(alpha) = int |w(y)|^2 cos(4 pi alpha y / lambda) dy
//               = <cos(2 alpha k y)>.
double gamma_y(double depth, double alpha);

struct HoppingEstimate {
  double value = 0.0;       // units of E_R
  bool shallow_warning = false;  // tight-binding fit unreliable (depth < 2)
};

// Nearest-neighbor tight-binding fit J = (max band0 - min band0)/4.
HoppingEstimate hopping_J(const BandSolution& solution);

// |first Fourier coefficient| of band0(q); agrees with hopping_J in the
// tight-binding regime and serves as the cross-extraction route.
double hopping_J_fourier(const BandSolution& solution);

struct EffectiveJx {
  double value = 0.0;       // Omega * Gamma_x * Gamma_y / 2
  bool omega_ok = true;     // Omega < Delta / 10
  bool delta_ok = true;     // Delta < nu_x / 10, nu_x = 2*sqrt(depth_x) E_R
};

EffectiveJx effective_jx(double Omega, double depth_x, double depth_y,
                         double alpha, double Delta);

}  // namespace hof

#endif
