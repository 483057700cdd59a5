#include "hof/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hof/error.hpp"
#include "hof/parallel.hpp"

namespace hof {

namespace {
constexpr double kPi = std::numbers::pi;
}

Eigen::MatrixXcd harper_matrix(const HarperProblem& problem) {
  if (!problem.flux.is_rational())
    throw DomainError("harper_matrix requires rational flux");
  const long r = problem.flux.r();
  const double alpha = problem.flux.value();
  const double J = problem.J;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(r, r);
  for (long m = 0; m < r; ++m)
    h(m, m) = 2.0 * J * std::cos(2.0 * kPi * alpha * m + problem.k_x);
  // Off-diagonal hopping with magnetic-Bloch closure g_{m+r} = e^{i k_y r} g_m;
  // for r = 1 both directions accumulate on the single diagonal element.
  for (long m = 0; m < r; ++m) {
    long next = (m + 1) % r;
    std::complex<double> amp(J, 0.0);
    if (next != m + 1)  // wrap link
      amp *= std::exp(std::complex<double>(0.0, problem.k_y * r));
    h(m, next) += amp;
    h(next, m) += std::conj(amp);
  }
  return h;
}

namespace {

// Per-band envelopes over the k-grid: lo/hi of the b-th sorted eigenvalue.
struct GridSpectrum {
  std::vector<double> energies;       // all eigenvalues, unsorted
  std::vector<BandInterval> envelopes;
};

GridSpectrum sweep_grid(const FluxRatio& flux, int k_samples, double J,
                        int parallelism) {
  const long r = flux.r();
  const int ks = k_samples;
  GridSpectrum out;
  out.energies.assign(static_cast<std::size_t>(ks) * ks * r, 0.0);
  out.envelopes.assign(r, {1e300, -1e300});

  const double dkx = 2.0 * kPi / ks;
  const double dky = (2.0 * kPi / r) / ks;
  std::vector<std::vector<BandInterval>> env_per_row(
      ks, std::vector<BandInterval>(r, {1e300, -1e300}));

  parallel_for(ks, parallelism, [&](std::size_t i) {
    HarperProblem prob{flux, 0.0, 0.0, J};
    prob.k_x = dkx * static_cast<double>(i);
    for (int jy = 0; jy < ks; ++jy) {
      prob.k_y = dky * jy;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          harper_matrix(prob), Eigen::EigenvaluesOnly);
      const auto& ev = es.eigenvalues();
      std::size_t base = (static_cast<std::size_t>(i) * ks + jy) * r;
      for (long b = 0; b < r; ++b) {
        out.energies[base + b] = ev[b];
        auto& e = env_per_row[i][b];
        e.lo = std::min(e.lo, ev[b]);
        e.hi = std::max(e.hi, ev[b]);
      }
    }
  });
  for (int i = 0; i < ks; ++i)
    for (long b = 0; b < r; ++b) {
      out.envelopes[b].lo = std::min(out.envelopes[b].lo, env_per_row[i][b].lo);
      out.envelopes[b].hi = std::max(out.envelopes[b].hi, env_per_row[i][b].hi);
    }
  return out;
}

// Merge genuinely overlapping envelopes; touching pairs stay separate.
std::pair<std::vector<BandInterval>, bool> cluster_bands(
    std::vector<BandInterval> env, double gap_tol) {
  std::vector<BandInterval> bands;
  bool touching = false;
  for (const auto& e : env) {
    if (!bands.empty()) {
      double gap = e.lo - bands.back().hi;
      if (gap < -gap_tol) {  // true overlap
        bands.back().hi = std::max(bands.back().hi, e.hi);
        continue;
      }
      if (gap <= gap_tol) touching = true;
    }
    bands.push_back(e);
  }
  return {bands, touching};
}

}  // namespace

SpectrumSlice spectrum_slice(const FluxRatio& flux, int k_samples, double J,
                             double gap_tol, int parallelism) {
  if (k_samples < 2) throw ContractError("spectrum_slice needs k_samples >= 2");
  FluxRatio rat = flux;
  if (!rat.is_rational()) {
    auto snapped = flux.snap_to_rational();
    if (!snapped) throw DomainError("spectrum_slice requires rational flux");
    rat = *snapped;
  }

  GridSpectrum grid = sweep_grid(rat, k_samples, J, parallelism);

  // Ambiguous gaps (within 10x of the threshold) get one grid refinement
  // before the band decision; the point cloud stays on the requested grid.
  auto env = grid.envelopes;
  bool ambiguous = false;
  for (std::size_t b = 1; b < env.size(); ++b) {
    double gap = env[b].lo - env[b - 1].hi;
    if (gap > gap_tol && gap < 10.0 * gap_tol) ambiguous = true;
  }
  if (ambiguous)
    env = sweep_grid(rat, 2 * k_samples, J, parallelism).envelopes;

  auto [bands, touching] = cluster_bands(env, gap_tol);

  SpectrumSlice slice;
  slice.flux = rat;
  slice.k_samples = k_samples;
  slice.energies = std::move(grid.energies);
  std::sort(slice.energies.begin(), slice.energies.end());
  slice.bands = std::move(bands);
  slice.band_count = static_cast<int>(slice.bands.size());
  slice.touching = touching;
  return slice;
}

int band_count(const SpectrumSlice& slice, double gap_tol) {
  // Recluster the stored envelopes at the requested threshold.
  auto [bands, touching] = cluster_bands(slice.bands, gap_tol);
  (void)touching;
  return static_cast<int>(bands.size());
}

ButterflyDataset butterfly(int r_max, int k_samples, double J,
                           int parallelism) {
  if (r_max < 1) throw ContractError("butterfly needs r_max >= 1");
  struct Frac {
    long p, r;
  };
  std::vector<Frac> fracs;
  for (long r = 1; r <= r_max; ++r)
    for (long p = 0; p <= r; ++p)
      if (std::gcd(p, r) == 1) fracs.push_back({p, r});
  std::sort(fracs.begin(), fracs.end(), [](const Frac& a, const Frac& b) {
    return a.p * b.r < b.p * a.r;  // by alpha; reduced fractions are distinct
  });

  std::vector<SpectrumSlice> slices(fracs.size());
  parallel_for(fracs.size(), parallelism, [&](std::size_t i) {
    slices[i] = spectrum_slice(FluxRatio::rational(fracs[i].p, fracs[i].r),
                               k_samples, J, 1e-3, 1);
  });

  ButterflyDataset ds;
  ds.r_max = r_max;
  ds.k_samples = k_samples;
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    double alpha =
        static_cast<double>(fracs[i].p) / static_cast<double>(fracs[i].r);
    for (double e : slices[i].energies)
      ds.points.push_back({fracs[i].p, fracs[i].r, alpha, e});
  }
  return ds;
}

}  // namespace hof
