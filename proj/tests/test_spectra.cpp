#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hof/error.hpp"
#include "hof/lattice.hpp"
#include "hof/spectra.hpp"

using namespace hof;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("harper matrix, r = 1: free dispersion") {
  for (double kx : {0.0, 0.7, 2.1})
    for (double ky : {0.0, 1.3}) {
      HarperProblem p{FluxRatio::rational(0, 1), kx, ky, 1.0};
      auto h = harper_matrix(p);
      REQUIRE(h.rows() == 1);
      CHECK(h(0, 0).real() ==
            doctest::Approx(2.0 * std::cos(kx) + 2.0 * std::cos(ky))
                .epsilon(1e-14));
      CHECK(h(0, 0).imag() == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("harper matrix, r = 2 at k = 0") {
  HarperProblem p{FluxRatio::rational(1, 2), 0.0, 0.0, 1.0};
  auto h = harper_matrix(p);
  CHECK(std::abs(h(0, 0) - std::complex<double>(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(h(1, 1) - std::complex<double>(-2.0, 0.0)) < 1e-14);
  CHECK(std::abs(h(0, 1) - std::complex<double>(2.0, 0.0)) < 1e-14);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const double e = 2.0 * std::sqrt(2.0);
  CHECK(es.eigenvalues()[0] == doctest::Approx(-e).epsilon(1e-12));
  CHECK(es.eigenvalues()[1] == doctest::Approx(e).epsilon(1e-12));
}

TEST_CASE("harper matrix: J = 0 and hermiticity") {
  HarperProblem zero{FluxRatio::rational(2, 5), 0.4, 0.9, 0.0};
  CHECK(harper_matrix(zero).norm() == 0.0);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
  for (int rep = 0; rep < 20; ++rep) {
    long r = 1 + rng() % 9;
    long p = rng() % (r + 1);
    HarperProblem prob{FluxRatio::rational(p, r), dist(rng), dist(rng), 1.0};
    auto h = harper_matrix(prob);
    CHECK((h - h.adjoint()).norm() == 0.0);
  }

  CHECK_THROWS_AS(
      harper_matrix(HarperProblem{FluxRatio::real(0.3), 0.0, 0.0, 1.0}),
      DomainError);
}

TEST_CASE("spectrum slice: alpha = 0 is one band [-4J, 4J]") {
  auto s = spectrum_slice(FluxRatio::rational(0, 1), 32, 1.0);
  REQUIRE(s.band_count == 1);
  CHECK(s.bands[0].lo == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(s.bands[0].hi == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_FALSE(s.touching);
}

TEST_CASE("spectrum slice: alpha = 1/2 touches at zero, edges 2 sqrt 2") {
  auto s = spectrum_slice(FluxRatio::rational(1, 2), 64, 1.0);
  REQUIRE(s.band_count == 2);
  CHECK(s.touching);
  const double e = 2.0 * std::sqrt(2.0);
  CHECK(s.bands[0].lo == doctest::Approx(-e).epsilon(1e-9));
  CHECK(std::abs(s.bands[0].hi) < 1e-9);
  CHECK(std::abs(s.bands[1].lo) < 1e-9);
  CHECK(s.bands[1].hi == doctest::Approx(e).epsilon(1e-9));

  // analytic dispersion oracle: e = +/- 2 sqrt(cos^2 kx + cos^2 ky)
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(0.0, kPi);
  for (int rep = 0; rep < 50; ++rep) {
    double kx = dist(rng), ky = dist(rng);
    HarperProblem p{FluxRatio::rational(1, 2), kx, ky, 1.0};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(harper_matrix(p),
                                                       Eigen::EigenvaluesOnly);
    double expect =
        2.0 * std::sqrt(std::cos(kx) * std::cos(kx) + std::cos(ky) * std::cos(ky));
    CHECK(es.eigenvalues()[1] == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("spectrum slice: alpha = 1/3 has three bands") {
  auto s = spectrum_slice(FluxRatio::rational(1, 3), 64, 1.0);
  CHECK(s.band_count == 3);
  CHECK(band_count(s, 0.05) == 3);

  // finite-lattice oracle: every eigenvalue of a fully periodic 12x12
  // real-space Hamiltonian lies inside the band union (grid chosen
  // commensurate so the lattice k-points are sampled exactly)
  auto fine = spectrum_slice(FluxRatio::rational(1, 3), 48, 1.0);
  LatticeSpec spec{12, 12, Boundary::periodic, Boundary::periodic};
  auto op = build_hamiltonian(spec, FluxRatio::rational(1, 3), 1.0);
  Eigen::VectorXd ev = op.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    bool inside = false;
    for (const auto& b : fine.bands)
      if (ev[i] > b.lo - 1e-8 && ev[i] < b.hi + 1e-8) inside = true;
    CHECK(inside);
  }
}

TEST_CASE("band-count law for alpha = 1/r") {
  for (int r = 2; r <= 8; ++r) {
    auto s = spectrum_slice(FluxRatio::rational(1, r), 32, 1.0);
    CHECK(s.band_count == r);
    if (r % 2 == 0) CHECK(s.touching);
  }
}

TEST_CASE("butterfly dataset structure") {
  SUBCASE("r_max = 1: alpha in {0, 1}, identical slices") {
    auto ds = butterfly(1, 8, 1.0);
    REQUIRE(ds.points.size() == 2 * 64);
    for (std::size_t i = 0; i < 64; ++i) {
      CHECK(ds.points[i].alpha == 0.0);
      CHECK(ds.points[i + 64].alpha == 1.0);
      CHECK(std::abs(ds.points[i].energy - ds.points[i + 64].energy) < 1e-10);
    }
  }

  SUBCASE("r_max = 2 adds the two-band alpha = 1/2 slice") {
    auto ds = butterfly(2, 8, 1.0);
    // slices: 0/1 (64), 1/2 (2*64), 1/1 (64)
    REQUIRE(ds.points.size() == 64 + 128 + 64);
    std::size_t half_points = 0;
    for (const auto& p : ds.points)
      if (p.alpha_r == 2) ++half_points;
    CHECK(half_points == 128);
  }

  SUBCASE("reflection through e = 0 reproduces the dataset") {
    auto ds = butterfly(4, 8, 1.0);
    std::vector<double> a, b;
    for (const auto& p : ds.points) {
      a.push_back(p.energy);
      b.push_back(-p.energy);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(std::abs(a[i] - b[i]) < 1e-10);
  }
}

TEST_CASE("slice invariants: sorted energies within the 4J bound") {
  auto s = spectrum_slice(FluxRatio::rational(2, 5), 16, 1.0);
  CHECK(std::is_sorted(s.energies.begin(), s.energies.end()));
  CHECK(s.energies.size() == 5 * 16 * 16);
  for (double e : s.energies) CHECK(std::abs(e) <= 4.0 + 1e-9);
}

TEST_CASE("slice spectra for alpha and 1 - alpha agree") {
  auto a = spectrum_slice(FluxRatio::rational(1, 5), 16, 1.0);
  auto b = spectrum_slice(FluxRatio::rational(4, 5), 16, 1.0);
  REQUIRE(a.energies.size() == b.energies.size());
  for (std::size_t i = 0; i < a.energies.size(); ++i)
    CHECK(std::abs(a.energies[i] - b.energies[i]) < 1e-10);
}

TEST_CASE("parallel sweep is bit-identical to serial") {
  auto serial = spectrum_slice(FluxRatio::rational(3, 7), 24, 1.0, 1e-3, 1);
  auto parallel = spectrum_slice(FluxRatio::rational(3, 7), 24, 1.0, 1e-3, 4);
  REQUIRE(serial.energies.size() == parallel.energies.size());
  for (std::size_t i = 0; i < serial.energies.size(); ++i)
    CHECK(serial.energies[i] == parallel.energies[i]);
}
