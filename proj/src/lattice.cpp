#include "hof/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "hof/error.hpp"
#include "hof/io.hpp"

namespace hof {

void LatticeSpec::validate() const {
  if (n_x < 1 || n_y < 1)
    throw ConfigError("lattice dimensions must be >= 1");
}

void HubbardParams::validate() const {
  if (J <= 0.0) throw ConfigError("hopping J must be > 0");
  if (U_even < 0.0 || U_odd < 0.0)
    throw ConfigError("onsite interaction must be >= 0");
}

void SparseHermitian::add(int row, int col, std::complex<double> amp) {
  if (row > col) {
    std::swap(row, col);
    amp = std::conj(amp);
  }
  entries_.push_back({row, col, amp});
}

void SparseHermitian::finalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const Entry& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row &&
        merged.back().col == e.col) {
      merged.back().amp += e.amp;
    } else {
      merged.push_back(e);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Entry& e) {
                                return e.amp == std::complex<double>(0.0, 0.0);
                              }),
               merged.end());
  entries_ = std::move(merged);
}

Eigen::MatrixXcd SparseHermitian::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const Entry& e : entries_) {
    m(e.row, e.col) += e.amp;
    if (e.row != e.col) m(e.col, e.row) += std::conj(e.amp);
  }
  return m;
}

Eigen::VectorXd SparseHermitian::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

void SparseHermitian::apply(const Eigen::VectorXcd& x,
                            Eigen::VectorXcd& y) const {
  y.setZero(dim_);
  for (const Entry& e : entries_) {
    y[e.row] += e.amp * x[e.col];
    if (e.row != e.col) y[e.col] += std::conj(e.amp) * x[e.row];
  }
}

double SparseHermitian::inf_norm_bound() const {
  std::vector<double> row_sum(dim_, 0.0);
  for (const Entry& e : entries_) {
    double a = std::abs(e.amp);
    row_sum[e.row] += a;
    if (e.row != e.col) row_sum[e.col] += a;
  }
  double b = 0.0;
  for (double s : row_sum) b = std::max(b, s);
  return b;
}

std::complex<double> SparseHermitian::amplitude(int i, int j) const {
  bool flip = i > j;
  if (flip) std::swap(i, j);
  for (const Entry& e : entries_) {
    if (e.row == i && e.col == j) return flip ? std::conj(e.amp) : e.amp;
  }
  return {0.0, 0.0};
}

SparseHermitian build_hamiltonian(const LatticeSpec& spec,
                                  const FluxRatio& flux, double J) {
  spec.validate();
  if (spec.bc_y == Boundary::periodic && flux.is_rational() &&
      spec.n_y % flux.r() != 0) {
    throw ConfigError("magnetic-cell commensurability violated: r = " +
                      std::to_string(flux.r()) + " does not divide n_y = " +
                      std::to_string(spec.n_y));
  }

  SparseHermitian op(spec.sites());
  if (J == 0.0) {
    op.finalize();
    return op;
  }
  const double two_pi_alpha = flux.phase_per_plaquette();
  for (int m = 0; m < spec.n_y; ++m) {
    // x-links carry the Landau-gauge phase e^{2*pi*i*alpha*m}; the phase is
    // n-independent, so the periodic x-wrap uses the same amplitude.
    const std::complex<double> tx =
        J * std::exp(std::complex<double>(0.0, two_pi_alpha * m));
    for (int n = 0; n < spec.n_x; ++n) {
      if (n + 1 < spec.n_x) {
        op.add(spec.index(n, m), spec.index(n + 1, m), tx);
      } else if (spec.bc_x == Boundary::periodic && spec.n_x > 1) {
        op.add(spec.index(n, m), spec.index(0, m), tx);
      }
      if (m + 1 < spec.n_y) {
        op.add(spec.index(n, m), spec.index(n, m + 1),
               std::complex<double>(J, 0.0));
      } else if (spec.bc_y == Boundary::periodic && spec.n_y > 1) {
        op.add(spec.index(n, m), spec.index(n, 0),
               std::complex<double>(J, 0.0));
      }
    }
  }
  op.finalize();
  return op;
}

SparseHermitian apply_gauge_transform(const SparseHermitian& op,
                                      const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != op.dim())
    throw ContractError("gauge transform: theta must cover every site");
  SparseHermitian out(op.dim());
  for (const auto& e : op.entries()) {
    if (e.row == e.col) {
      out.add(e.row, e.col, e.amp);
    } else {
      out.add(e.row, e.col,
              e.amp * std::exp(std::complex<double>(
                          0.0, theta[e.row] - theta[e.col])));
    }
  }
  out.finalize();
  return out;
}

std::complex<double> plaquette_phase(const SparseHermitian& op,
                                     const LatticeSpec& spec, int n, int m) {
  int a = spec.index(n, m);
  int b = spec.index((n + 1) % spec.n_x, m);
  int c = spec.index((n + 1) % spec.n_x, (m + 1) % spec.n_y);
  int d = spec.index(n, (m + 1) % spec.n_y);
  // Counterclockwise hop a->b->c->d->a; the amplitude for hopping j->i is
  // H_ij, so the loop product is H_ba H_cb H_dc H_ad.
  std::complex<double> prod = op.amplitude(b, a) * op.amplitude(c, b) *
                              op.amplitude(d, c) * op.amplitude(a, d);
  double mag = std::abs(prod);
  return mag > 0.0 ? prod / mag : prod;
}

void write_operator(std::ostream& os, const SparseHermitian& op,
                    const LatticeSpec& spec, const FluxRatio& flux, double J) {
  long p = flux.is_rational() ? flux.p() : -1;
  long r = flux.is_rational() ? flux.r() : -1;
  os << op.dim() << ' ' << spec.n_x << ' ' << spec.n_y << ' ' << p << ' ' << r
     << ' ' << format_double(J) << '\n';
  for (const auto& e : op.entries()) {
    os << e.row << ' ' << e.col << ' ' << format_double(e.amp.real()) << ' '
       << format_double(e.amp.imag()) << '\n';
  }
}

}  // namespace hof
