#ifndef HOF_SPECTRA_HPP
#define HOF_SPECTRA_HPP

#include <vector>

#include <Eigen/Dense>

#include "hof/flux.hpp"

namespace hof {

// Magnetic-Bloch (Harper) problem for rational flux p/r at fixed
// quasimomentum. k_x in [0, 2*pi), k_y in [0, 2*pi/r).
struct HarperProblem {
  FluxRatio flux = FluxRatio::rational(0, 1);
  double k_x = 0.0;
  double k_y = 0.0;
  double J = 1.0;
};

// r x r Bloch matrix: diagonal 2J*cos(2*pi*alpha*m + k_x), J on (m, m+1)
// and J*e^{i*k_y*r} closing the magnetic cell. Throws DomainError for
// non-rational flux.
Eigen::MatrixXcd harper_matrix(const HarperProblem& problem);

struct BandInterval {
  double lo;
  double hi;
};

struct SpectrumSlice {
  FluxRatio flux = FluxRatio::rational(0, 1);
  int k_samples = 0;
  std::vector<double> energies;      // sorted union over the k-grid, units of J
  std::vector<BandInterval> bands;   // ordered, disjoint up to touching
  int band_count = 0;
  bool touching = false;  // some adjacent bands touch within gap_tol
};

// Diagonalizes harper_matrix over a uniform k_samples^2 grid of
// (k_x, k_y) in [0,2*pi) x [0,2*pi/r). Bands are the per-band-index
// envelopes [min_k e_b(k), max_k e_b(k)]; adjacent envelopes separated by
// less than gap_tol are counted separately with the touching flag set.
// When an inter-band gap falls inside (gap_tol, 10*gap_tol) the k-grid is
// doubled once to refine the band edges; `energies` always comes from the
// requested grid (r * k_samples^2 values).
SpectrumSlice spectrum_slice(const FluxRatio& flux, int k_samples, double J,
                             double gap_tol = 1e-3, int parallelism = 1);

// Number of bands separated by gaps > gap_tol; touching bands count
// separately (see SpectrumSlice::touching).
int band_count(const SpectrumSlice& slice, double gap_tol);

struct ButterflyPoint {
  long alpha_p;
  long alpha_r;
  double alpha;
  double energy;
};

struct ButterflyDataset {
  int r_max = 0;
  int k_samples = 0;
  std::vector<ButterflyPoint> points;  // sorted by (alpha, energy)
};

// All reduced fractions p/r, 1 <= r <= r_max, 0 <= p <= r; each slice
// contributes r*k_samples^2 points.
ButterflyDataset butterfly(int r_max, int k_samples, double J,
                           int parallelism = 1);

}  // namespace hof

#endif
