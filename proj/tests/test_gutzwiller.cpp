#include <doctest.h>

#include <cmath>
#include <complex>

#include "hof/error.hpp"
#include "hof/gutzwiller.hpp"

using namespace hof;

namespace {

HubbardParams uniform_u(double J, double U) {
  HubbardParams p;
  p.J = J;
  p.U_even = U;
  p.U_odd = U;
  return p;
}

GutzwillerState single_site_state(const Eigen::VectorXcd& f) {
  GutzwillerState s;
  s.spec = LatticeSpec{1, 1, Boundary::open, Boundary::open};
  s.n_max = static_cast<int>(f.size()) - 1;
  s.coeffs = {f};
  return s;
}

}  // namespace

TEST_CASE("site energy") {
  TrapParams trap;
  CHECK(site_energy(trap, 5, -3) == 0.0);

  trap.omega_T = 0.06;
  trap.center_x = 15.5;
  trap.center_y = 15.5;
  CHECK(site_energy(trap, 15, 15) ==
        doctest::Approx(0.03 * 0.5).epsilon(1e-14));  // 0.03*(0.25+0.25)

  TrapParams offset;
  offset.omega_T = 0.06;
  offset.center_x = 0.0;
  offset.center_y = 0.0;
  CHECK(site_energy(offset, 10, 0) == doctest::Approx(3.0).epsilon(1e-14));

  TrapParams aniso;
  aniso.omega_T = 2.0;
  aniso.w_x = 1.0;
  aniso.w_y = 4.0;
  CHECK(site_energy(aniso, 1, 1) == doctest::Approx(5.0).epsilon(1e-14));

  TrapParams bad;
  bad.omega_T = -1.0;
  CHECK_THROWS_AS(site_energy(bad, 0, 0), DomainError);
}

TEST_CASE("local mean-field hamiltonian") {
  SUBCASE("decoupled (eta = 0) is diagonal with the Hubbard ladder") {
    auto h = local_mean_field_hamiltonian(0.0, 1.0, 16.0, 0.0, 6.0, 2);
    CHECK(h(0, 0).real() == doctest::Approx(0.0));
    CHECK(h(1, 1).real() == doctest::Approx(-6.0));
    CHECK(h(2, 2).real() == doctest::Approx(20.0));
    CHECK(h.norm() == doctest::Approx(std::sqrt(36.0 + 400.0)));
  }

  SUBCASE("coupling carries sqrt(n+1) matrix elements and hermiticity") {
    std::complex<double> eta(0.3, -0.4);
    auto h = local_mean_field_hamiltonian(eta, 2.0, 0.0, 0.0, 0.0, 3);
    CHECK((h - h.adjoint()).norm() < 1e-15);
    CHECK(std::abs(h(0, 1) - 2.0 * std::conj(eta)) < 1e-15);
    CHECK(std::abs(h(1, 2) - 2.0 * std::conj(eta) * std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(h(2, 3) - 2.0 * std::conj(eta) * std::sqrt(3.0)) < 1e-15);
  }
}

TEST_CASE("J = 0 limit is an exact Fock insulator") {
  LatticeSpec spec{4, 4, Boundary::open, Boundary::open};
  auto state = solve_ground_state(spec, FluxRatio::rational(0, 1),
                                  uniform_u(0.0, 16.0), TrapParams{}, 6.0);
  CHECK(state.converged);
  for (int i = 0; i < spec.sites(); ++i) {
    CHECK(std::abs(state.phi[i]) < 1e-12);
    CHECK(state.mean_n[i] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(state.sigma2[i] == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_FALSE(state.cutoff_warning);
}

TEST_CASE("weakly interacting lattice condenses with a staggered order parameter") {
  // With hopping amplitude +J the condensate minimizes energy by alternating
  // the sign of phi between sublattices.
  LatticeSpec spec{6, 6, Boundary::open, Boundary::open};
  GutzwillerOptions opts;
  opts.n_max = 10;
  auto state = solve_ground_state(spec, FluxRatio::rational(0, 1),
                                  uniform_u(1.0, 1.0), TrapParams{}, 2.0, opts);
  REQUIRE(state.converged);
  for (int i = 0; i < spec.sites(); ++i) CHECK(std::abs(state.phi[i]) > 0.1);
  for (int m = 0; m < spec.n_y; ++m)
    for (int n = 0; n < spec.n_x; ++n) {
      int i = spec.index(n, m);
      if (n + 1 < spec.n_x) {
        int j = spec.index(n + 1, m);
        CHECK(std::real(state.phi[i] * std::conj(state.phi[j])) < 0.0);
      }
      if (m + 1 < spec.n_y) {
        int j = spec.index(n, m + 1);
        CHECK(std::real(state.phi[i] * std::conj(state.phi[j])) < 0.0);
      }
    }
}

TEST_CASE("variational energy is monotone non-increasing across sweeps") {
  LatticeSpec spec{8, 8, Boundary::open, Boundary::open};
  TrapParams trap;
  trap.omega_T = 0.06;
  trap.center_x = 3.5;
  trap.center_y = 3.5;
  GutzwillerOptions opts;
  opts.n_max = 6;
  auto state = solve_ground_state(spec, FluxRatio::rational(1, 4),
                                  uniform_u(1.0, 16.0), trap, 6.0, opts);
  REQUIRE(state.energy_trace.size() >= 2);
  for (std::size_t s = 1; s < state.energy_trace.size(); ++s)
    CHECK(state.energy_trace[s] <= state.energy_trace[s - 1] + 1e-10);
  CHECK(state.converged);
  CHECK(state.residual < opts.tol);
}

TEST_CASE("trap-centered solution has the fourfold lattice symmetry") {
  LatticeSpec spec{9, 9, Boundary::open, Boundary::open};
  TrapParams trap;
  trap.omega_T = 0.5;
  trap.center_x = 4.0;
  trap.center_y = 4.0;
  GutzwillerOptions opts;
  opts.n_max = 6;
  auto state = solve_ground_state(spec, FluxRatio::rational(0, 1),
                                  uniform_u(1.0, 16.0), trap, 6.0, opts);
  REQUIRE(state.converged);
  for (int m = 0; m < 9; ++m)
    for (int n = 0; n < 9; ++n) {
      // 90-degree rotation about the trap center
      int rn = 4 + (m - 4);
      int rm = 4 - (n - 4);
      CHECK(std::abs(std::abs(state.phi[spec.index(n, m)]) -
                     std::abs(state.phi[spec.index(rn, rm)])) < 1e-6);
      CHECK(std::abs(state.mean_n[spec.index(n, m)] -
                     state.mean_n[spec.index(rn, rm)]) < 1e-6);
    }
}

TEST_CASE("observables from hand-built states") {
  FluxRatio zero = FluxRatio::rational(0, 1);
  HubbardParams params = uniform_u(1.0, 16.0);
  TrapParams trap;

  SUBCASE("Fock state |1>") {
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(4);
    f[1] = 1.0;
    auto obs = observables(single_site_state(f), zero, params, trap, 6.0);
    CHECK(std::abs(obs.phi[0]) == 0.0);
    CHECK(obs.sigma2[0] == 0.0);
    CHECK(obs.mean_n[0] == doctest::Approx(1.0));
    CHECK(obs.total_n == doctest::Approx(1.0));
    CHECK(obs.energy == doctest::Approx(-6.0));  // -mu n, no links, no U
  }

  SUBCASE("equal superposition (|0> + |1>)/sqrt(2)") {
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(4);
    f[0] = f[1] = 1.0 / std::sqrt(2.0);
    auto obs = observables(single_site_state(f), zero, params, trap, 0.0);
    CHECK(obs.phi[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(obs.phi[0].imag() == doctest::Approx(0.0));
    CHECK(obs.mean_n[0] == doctest::Approx(0.5));
    CHECK(obs.sigma2[0] == doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("truncated coherent state with mean 1 is near-Poissonian") {
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(11);
    double fact = 1.0;
    for (int n = 0; n <= 10; ++n) {
      if (n > 0) fact *= n;
      f[n] = 1.0 / std::sqrt(fact);
    }
    f /= f.norm();
    auto obs = observables(single_site_state(f), zero, params, trap, 0.0);
    CHECK(obs.mean_n[0] == doctest::Approx(1.0).epsilon(0.01));
    CHECK(obs.sigma2[0] == doctest::Approx(1.0).epsilon(0.02));
  }

  SUBCASE("empty site reports sigma2 = 0 without dividing by zero") {
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(4);
    f[0] = 1.0;
    auto obs = observables(single_site_state(f), zero, params, trap, 0.0);
    CHECK(obs.sigma2[0] == 0.0);
    CHECK(obs.mean_n[0] == 0.0);
  }
}

TEST_CASE("solver result is stable against raising the Fock cutoff") {
  LatticeSpec spec{4, 4, Boundary::open, Boundary::open};
  GutzwillerOptions small;
  small.n_max = 3;
  GutzwillerOptions large;
  large.n_max = 8;
  auto a = solve_ground_state(spec, FluxRatio::rational(0, 1),
                              uniform_u(0.2, 16.0), TrapParams{}, 6.0, small);
  auto b = solve_ground_state(spec, FluxRatio::rational(0, 1),
                              uniform_u(0.2, 16.0), TrapParams{}, 6.0, large);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  for (int i = 0; i < spec.sites(); ++i) {
    CHECK(std::abs(std::abs(a.phi[i]) - std::abs(b.phi[i])) < 1e-6);
    CHECK(std::abs(a.mean_n[i] - b.mean_n[i]) < 1e-6);
  }
  CHECK_FALSE(b.cutoff_warning);
}

TEST_CASE("invalid options are contract errors") {
  LatticeSpec spec{2, 2, Boundary::open, Boundary::open};
  GutzwillerOptions opts;
  opts.n_max = 0;
  CHECK_THROWS_AS(solve_ground_state(spec, FluxRatio::rational(0, 1),
                                     uniform_u(1.0, 16.0), TrapParams{}, 6.0,
                                     opts),
                  ContractError);
}
