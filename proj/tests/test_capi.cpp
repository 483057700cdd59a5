#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <numbers>
#include <string>

#include "hofstadter.h"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("flux conversions through the C surface") {
  double alpha = -1.0;
  CHECK(hof_flux_from_wavenumber(4.0 * kPi / 0.8, 0.8, &alpha) == HOF_OK);
  CHECK(alpha == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(hof_flux_from_wavenumber(-1.0, 0.8, &alpha) == HOF_ERR_DOMAIN);
  CHECK(std::strlen(hof_last_error()) > 0);
  CHECK(hof_flux_from_wavenumber(1.0, 1.0, nullptr) == HOF_ERR_INVALID);

  long p = 0, r = 0;
  int snapped = 0;
  CHECK(hof_flux_snap(1.0 / 6.0 + 1e-14, 64, 1e-12, &p, &r, &snapped) ==
        HOF_OK);
  CHECK(snapped == 1);
  CHECK(p == 1);
  CHECK(r == 6);

  CHECK(hof_flux_snap(1.0 / (2.0 * kPi), 64, 1e-12, &p, &r, &snapped) ==
        HOF_OK);
  CHECK(snapped == 0);
}

TEST_CASE("hamiltonian handle lifecycle") {
  hof_hamiltonian* h = nullptr;
  REQUIRE(hof_hamiltonian_create(2, 2, 0, 0, 1, 2, 0.0, 1.0, &h) == HOF_OK);
  REQUIRE(h != nullptr);
  CHECK(hof_hamiltonian_dim(h) == 4);

  double ev[4];
  CHECK(hof_hamiltonian_eigenvalues(h, ev, 4) == HOF_OK);
  const double s2 = std::sqrt(2.0);
  CHECK(ev[0] == doctest::Approx(-s2).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(-s2).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(s2).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(s2).epsilon(1e-12));

  CHECK(hof_hamiltonian_eigenvalues(h, ev, 2) == HOF_ERR_INVALID);

  auto path = std::filesystem::temp_directory_path() / "hof_capi_dump.txt";
  CHECK(hof_hamiltonian_write(h, path.string().c_str()) == HOF_OK);
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);

  hof_hamiltonian_destroy(h);
  hof_hamiltonian_destroy(nullptr);  // must be a no-op
}

TEST_CASE("commensurability violations map to config errors") {
  hof_hamiltonian* h = nullptr;
  CHECK(hof_hamiltonian_create(6, 5, 0, 1, 1, 6, 0.0, 1.0, &h) ==
        HOF_ERR_CONFIG);
  CHECK(h == nullptr);
  CHECK(std::string(hof_last_error()).find("commensurability") !=
        std::string::npos);
}

TEST_CASE("harper eigenvalues") {
  double ev[2];
  REQUIRE(hof_harper_eigenvalues(1, 2, 0.0, 0.0, 1.0, ev) == HOF_OK);
  const double e = 2.0 * std::sqrt(2.0);
  CHECK(ev[0] == doctest::Approx(-e).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(e).epsilon(1e-12));
}

TEST_CASE("wannier calibration surface") {
  double gx = 0.0, gy = 0.0, j = 0.0;
  CHECK(hof_gamma_x(10.0, &gx) == HOF_OK);
  CHECK(gx > 0.0);
  CHECK(gx < 1.0);
  CHECK(hof_gamma_y(10.0, 0.0, &gy) == HOF_OK);
  CHECK(gy == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(hof_hopping_j(15.0, &j) == HOF_OK);
  CHECK(j > 0.0);
  CHECK(hof_gamma_x(0.0, &gx) == HOF_ERR_DOMAIN);
}

TEST_CASE("laser geometry surface") {
  double out = 0.0;
  CHECK(hof_raman_rabi(2.0, 3.0, 6.0, &out) == HOF_OK);
  CHECK(out == doctest::Approx(0.5));
  CHECK(hof_raman_rabi(1.0, 1.0, 0.0, &out) == HOF_ERR_DOMAIN);

  double pe = 0.0, pg = 0.0, rx = 1.0, ry = 1.0;
  CHECK(hof_solve_angles(std::sqrt(2.0), 0.0, 1.0, &pe, &pg, &rx, &ry) ==
        HOF_OK);
  CHECK(pe == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(pg == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(std::abs(rx) < 1e-12);
  CHECK(std::abs(ry) < 1e-12);

  CHECK(hof_solve_angles(10.0, 0.0, 1.0, &pe, &pg, nullptr, nullptr) ==
        HOF_ERR_RANGE);
  CHECK(std::string(hof_last_error()).find("upper bound") != std::string::npos);

  double lo = -1.0, hi = -1.0;
  CHECK(hof_alpha_window(0.0, 2.0 * kPi, 1.0, &lo, &hi) == HOF_OK);
  CHECK(lo == 0.0);
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("command runner surface") {
  CHECK(hof_run("no-such-command", nullptr, nullptr, 0, "/tmp/hof_capi_run") ==
        HOF_ERR_CONFIG);
  CHECK(hof_run(nullptr, nullptr, nullptr, 0, "x") == HOF_ERR_INVALID);

  auto dir = std::filesystem::temp_directory_path() / "hof_capi_run";
  std::filesystem::remove_all(dir);
  const char* keys[] = {"rmax", "ksamples"};
  const char* values[] = {"2", "4"};
  CHECK(hof_run("butterfly", keys, values, 2, dir.string().c_str()) == HOF_OK);
  CHECK(std::filesystem::exists(dir / "butterfly.csv"));
  CHECK(std::filesystem::exists(dir / "run.json"));
  std::filesystem::remove_all(dir);
}
