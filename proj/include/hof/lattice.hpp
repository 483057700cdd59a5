#ifndef HOF_LATTICE_HPP
#define HOF_LATTICE_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hof/flux.hpp"

namespace hof {

enum class Boundary { open, periodic };

// 2D lattice geometry. x-sites are indexed by n (spacing lambda/4),
// y-sites by m (spacing lambda/2). Linear site index is n + n_x*m.
struct LatticeSpec {
  int n_x = 1;
  int n_y = 1;
  Boundary bc_x = Boundary::open;
  Boundary bc_y = Boundary::open;

  int sites() const { return n_x * n_y; }
  int index(int n, int m) const { return n + n_x * m; }

  void validate() const;  // throws ConfigError on bad dimensions
};

// Hubbard-model parameter set. U_x is carried in the data model but not used
// by any solver; omega_eg is consumed by the laser-geometry module.
struct HubbardParams {
  double J = 1.0;
  double U_even = 0.0;  // onsite, even columns (|e> sublattice)
  double U_odd = 0.0;   // onsite, odd columns (|g> sublattice)
  double U_x = 0.0;     // nearest-neighbor, unused by solvers
  double Delta = 0.0;   // per-column offset
  double omega_eg = 0.0;

  void validate() const;
};

// Sparse Hermitian operator over lattice sites. Only the upper triangle
// (row <= col) is stored; the conjugate transpose is implied. Energies are
// in units of J.
class SparseHermitian {
 public:
  struct Entry {
    int row;
    int col;
    std::complex<double> amp;
  };

  SparseHermitian() = default;
  explicit SparseHermitian(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Accumulates amplitude for H(row,col); (col,row) gets the conjugate.
  // Entries with row > col are folded into the upper triangle.
  void add(int row, int col, std::complex<double> amp);
  void finalize();  // merge duplicates, drop zeros, sort row-major

  Eigen::MatrixXcd dense() const;
  Eigen::VectorXd eigenvalues() const;
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  double inf_norm_bound() const;  // Gershgorin bound on |eigenvalue|

  // Link amplitude lookup (0 if absent). i, j are site indices.
  std::complex<double> amplitude(int i, int j) const;

 private:
  int dim_ = 0;
  std::vector<Entry> entries_;
};

// Peierls-phase Hamiltonian: amplitude J*e^{2*pi*i*alpha*m} on each
// (n,m)->(n+1,m) link and J on each (n,m)->(n,m+1) link, plus Hermitian
// conjugates (Landau gauge, phase depends on m only). Periodic boundaries
// wrap with the same rule. Throws ConfigError if bc_y is periodic with
// rational flux p/r and r does not divide n_y.
SparseHermitian build_hamiltonian(const LatticeSpec& spec, const FluxRatio& flux,
                                  double J);

// Gauge transform t_ij -> t_ij * e^{i(theta_i - theta_j)}; diagonal unchanged.
SparseHermitian apply_gauge_transform(const SparseHermitian& op,
                                      const std::vector<double>& theta);

// Product of link phases around the elementary plaquette with lower-left
// corner (n, m).
std::complex<double> plaquette_phase(const SparseHermitian& op,
                                     const LatticeSpec& spec, int n, int m);

// Text dump: header `dim n_x n_y alpha_p alpha_r J`, then one line per
// stored entry `row col re im`, row-major order. Real-kind flux is recorded
// as alpha_p = -1, alpha_r = -1.
void write_operator(std::ostream& os, const SparseHermitian& op,
                    const LatticeSpec& spec, const FluxRatio& flux, double J);

}  // namespace hof

#endif
