#include "hof/gutzwiller.hpp"

#include <cmath>

#include "hof/error.hpp"

namespace hof {

double site_energy(const TrapParams& trap, int n, int m) {
  if (trap.omega_T < 0.0) throw DomainError("trap strength must be >= 0");
  double dx = n - trap.center_x;
  double dy = m - trap.center_y;
  return 0.5 * trap.omega_T * (trap.w_x * dx * dx + trap.w_y * dy * dy);
}

Eigen::MatrixXcd local_mean_field_hamiltonian(std::complex<double> eta,
                                              double J, double U, double eps,
                                              double mu, int n_max) {
  const int dim = n_max + 1;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    h(n, n) = U * n * (n - 1) + (eps - mu) * n;
    if (n + 1 < dim) {
      // <n| a |n+1> = sqrt(n+1)
      std::complex<double> amp = J * std::conj(eta) * std::sqrt(n + 1.0);
      h(n, n + 1) = amp;
      h(n + 1, n) = std::conj(amp);
    }
  }
  return h;
}

namespace {

struct Neighbor {
  int site;
  std::complex<double> phase;  // t_ij / J for the a_i^dag a_j term
};

// Adjacency with Peierls phases taken from the same Landau-gauge builder as
// the single-particle Hamiltonian.
std::vector<std::vector<Neighbor>> adjacency(const LatticeSpec& spec,
                                             const FluxRatio& flux) {
  SparseHermitian op = build_hamiltonian(spec, flux, 1.0);
  std::vector<std::vector<Neighbor>> adj(spec.sites());
  for (const auto& e : op.entries()) {
    if (e.row == e.col) continue;
    adj[e.row].push_back({e.col, e.amp});
    adj[e.col].push_back({e.row, std::conj(e.amp)});
  }
  return adj;
}

std::complex<double> order_parameter(const Eigen::VectorXcd& f) {
  std::complex<double> phi = 0.0;
  for (int n = 0; n + 1 < f.size(); ++n)
    phi += std::sqrt(n + 1.0) * std::conj(f[n]) * f[n + 1];
  return phi;
}

double onsite_u(const HubbardParams& params, int n) {
  return n % 2 == 0 ? params.U_even : params.U_odd;
}

}  // namespace

GutzwillerState solve_ground_state(const LatticeSpec& spec,
                                   const FluxRatio& flux,
                                   const HubbardParams& params,
                                   const TrapParams& trap, double mu,
                                   const GutzwillerOptions& opts) {
  spec.validate();
  if (opts.n_max < 1) throw ContractError("n_max must be >= 1");
  const int sites = spec.sites();
  const int dim = opts.n_max + 1;
  const double J = params.J;

  auto adj = adjacency(spec, flux);
  std::vector<double> eps(sites);
  std::vector<double> u_site(sites);
  for (int m = 0; m < spec.n_y; ++m)
    for (int n = 0; n < spec.n_x; ++n) {
      eps[spec.index(n, m)] = site_energy(trap, n, m);
      u_site[spec.index(n, m)] = onsite_u(params, n);
    }

  GutzwillerState state;
  state.spec = spec;
  state.n_max = opts.n_max;
  state.coeffs.assign(sites, Eigen::VectorXcd::Zero(dim));
  std::vector<std::complex<double>> phi(sites, opts.phi_init);

  // Seed each site with the J = 0 local ground state so the first sweep
  // starts from normalized coefficients.
  for (int i = 0; i < sites; ++i) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        local_mean_field_hamiltonian(0.0, J, u_site[i], eps[i], mu,
                                     opts.n_max));
    state.coeffs[i] = es.eigenvectors().col(0);
  }

  auto total_energy = [&]() {
    double e = 0.0;
    for (int i = 0; i < sites; ++i) {
      const auto& f = state.coeffs[i];
      for (int n = 0; n < dim; ++n) {
        double w = std::norm(f[n]);
        e += w * (u_site[i] * n * (n - 1) + (eps[i] - mu) * n);
      }
    }
    for (int i = 0; i < sites; ++i)
      for (const auto& nb : adj[i])
        if (nb.site > i)
          e += 2.0 * J *
               std::real(nb.phase * std::conj(phi[i]) * phi[nb.site]);
    return e;
  };

  auto update_site = [&](int i) {
    std::complex<double> eta = 0.0;
    for (const auto& nb : adj[i]) eta += nb.phase * phi[nb.site];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        local_mean_field_hamiltonian(eta, J, u_site[i], eps[i], mu,
                                     opts.n_max));
    state.coeffs[i] = es.eigenvectors().col(0);
    std::complex<double> new_phi = order_parameter(state.coeffs[i]);
    double delta = std::abs(new_phi - phi[i]);
    phi[i] = new_phi;
    return delta;
  };

  double residual = 0.0;
  int sweep = 0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    residual = 0.0;
    for (int i = 0; i < sites; ++i)
      residual = std::max(residual, update_site(i));
    for (int i = sites - 1; i >= 0; --i)
      residual = std::max(residual, update_site(i));
    state.energy_trace.push_back(total_energy());
    if (residual < opts.tol) {
      ++sweep;
      break;
    }
  }
  state.sweeps = sweep;
  state.residual = residual;
  state.converged = residual < opts.tol;

  state.phi = phi;
  state.sigma2.resize(sites);
  state.mean_n.resize(sites);
  for (int i = 0; i < sites; ++i) {
    double n1 = 0.0, n2 = 0.0;
    for (int n = 0; n < dim; ++n) {
      double w = std::norm(state.coeffs[i][n]);
      n1 += w * n;
      n2 += w * n * n;
    }
    state.mean_n[i] = n1;
    state.sigma2[i] = n1 < 1e-12 ? 0.0 : (n2 - n1 * n1) / n1;
    if (std::norm(state.coeffs[i][opts.n_max]) > 1e-6)
      state.cutoff_warning = true;
  }
  return state;
}

GutzwillerObservables observables(const GutzwillerState& state,
                                  const FluxRatio& flux,
                                  const HubbardParams& params,
                                  const TrapParams& trap, double mu) {
  const int sites = state.spec.sites();
  const int dim = state.n_max + 1;
  GutzwillerObservables obs;
  obs.phi.resize(sites);
  obs.sigma2.resize(sites);
  obs.mean_n.resize(sites);

  for (int i = 0; i < sites; ++i) {
    obs.phi[i] = order_parameter(state.coeffs[i]);
    double n1 = 0.0, n2 = 0.0;
    for (int n = 0; n < dim; ++n) {
      double w = std::norm(state.coeffs[i][n]);
      n1 += w * n;
      n2 += w * n * n;
    }
    obs.mean_n[i] = n1;
    obs.sigma2[i] = n1 < 1e-12 ? 0.0 : (n2 - n1 * n1) / n1;
    obs.total_n += n1;
  }

  auto adj = adjacency(state.spec, flux);
  double e = 0.0;
  for (int m = 0; m < state.spec.n_y; ++m)
    for (int n = 0; n < state.spec.n_x; ++n) {
      int i = state.spec.index(n, m);
      const auto& f = state.coeffs[i];
      for (int nn = 0; nn < dim; ++nn) {
        double w = std::norm(f[nn]);
        e += w * (onsite_u(params, n) * nn * (nn - 1) +
                  (site_energy(trap, n, m) - mu) * nn);
      }
    }
  for (int i = 0; i < sites; ++i)
    for (const auto& nb : adj[i])
      if (nb.site > i)
        e += 2.0 * params.J *
             std::real(nb.phase * std::conj(obs.phi[i]) * obs.phi[nb.site]);
  obs.energy = e;
  return obs;
}

}  // namespace hof
