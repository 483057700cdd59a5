#include "hofstadter.h"

#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "hof/dynamics.hpp"
#include "hof/error.hpp"
#include "hof/flux.hpp"
#include "hof/io.hpp"
#include "hof/laser.hpp"
#include "hof/lattice.hpp"
#include "hof/runcmd.hpp"
#include "hof/spectra.hpp"
#include "hof/wannier.hpp"

namespace {

thread_local std::string g_last_error;

hof_status fail(hof_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
hof_status guarded(Fn&& fn) {
  try {
    fn();
    return HOF_OK;
  } catch (const hof::ContractError& e) {
    return fail(HOF_ERR_INVALID, e.what());
  } catch (const hof::DomainError& e) {
    return fail(HOF_ERR_DOMAIN, e.what());
  } catch (const hof::ConfigError& e) {
    return fail(HOF_ERR_CONFIG, e.what());
  } catch (const hof::RangeError& e) {
    return fail(HOF_ERR_RANGE, e.what());
  } catch (const hof::IoError& e) {
    return fail(HOF_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(HOF_ERR_INTERNAL, e.what());
  }
}

}  // namespace

struct hof_hamiltonian {
  hof::LatticeSpec spec;
  hof::FluxRatio flux = hof::FluxRatio::rational(0, 1);
  double j = 1.0;
  hof::SparseHermitian op;
};

extern "C" {

const char* hof_last_error(void) { return g_last_error.c_str(); }

hof_status hof_flux_from_wavenumber(double q, double lambda, double* alpha) {
  if (!alpha) return fail(HOF_ERR_INVALID, "alpha output pointer is null");
  return guarded([&] {
    *alpha = hof::FluxRatio::from_wavenumber(q, lambda).value();
  });
}

hof_status hof_flux_snap(double alpha, long r_max, double tol, long* p,
                         long* r, int* snapped) {
  if (!p || !r || !snapped)
    return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] {
    auto res = hof::FluxRatio::real(alpha).snap_to_rational(r_max, tol);
    *snapped = res.has_value() ? 1 : 0;
    if (res) {
      *p = res->p();
      *r = res->r();
    }
  });
}

hof_status hof_hamiltonian_create(int nx, int ny, int periodic_x,
                                  int periodic_y, long alpha_p, long alpha_r,
                                  double alpha_value, double j,
                                  hof_hamiltonian** out) {
  if (!out) return fail(HOF_ERR_INVALID, "output pointer is null");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<hof_hamiltonian>();
    h->spec = {nx, ny,
               periodic_x ? hof::Boundary::periodic : hof::Boundary::open,
               periodic_y ? hof::Boundary::periodic : hof::Boundary::open};
    h->flux = alpha_r > 0 ? hof::FluxRatio::rational(alpha_p, alpha_r)
                          : hof::FluxRatio::real(alpha_value);
    h->j = j;
    h->op = hof::build_hamiltonian(h->spec, h->flux, j);
    *out = h.release();
  });
}

void hof_hamiltonian_destroy(hof_hamiltonian* h) { delete h; }

int hof_hamiltonian_dim(const hof_hamiltonian* h) {
  return h ? h->op.dim() : 0;
}

hof_status hof_hamiltonian_eigenvalues(const hof_hamiltonian* h, double* out,
                                       size_t capacity) {
  if (!h || !out) return fail(HOF_ERR_INVALID, "null argument");
  if (capacity < static_cast<size_t>(h->op.dim()))
    return fail(HOF_ERR_INVALID, "capacity smaller than operator dimension");
  return guarded([&] {
    Eigen::VectorXd ev = h->op.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) out[i] = ev[i];
  });
}

hof_status hof_hamiltonian_write(const hof_hamiltonian* h, const char* path) {
  if (!h || !path) return fail(HOF_ERR_INVALID, "null argument");
  return guarded([&] {
    std::ostringstream os;
    hof::write_operator(os, h->op, h->spec, h->flux, h->j);
    hof::write_text_file(path, os.str());
  });
}

hof_status hof_harper_eigenvalues(long p, long r, double kx, double ky,
                                  double j, double* out) {
  if (!out) return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] {
    hof::HarperProblem prob{hof::FluxRatio::rational(p, r), kx, ky, j};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        hof::harper_matrix(prob), Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      out[i] = es.eigenvalues()[i];
  });
}

hof_status hof_gamma_x(double depth, double* out) {
  if (!out) return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] { *out = hof::gamma_x(depth); });
}

hof_status hof_gamma_y(double depth, double alpha, double* out) {
  if (!out) return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] { *out = hof::gamma_y(depth, alpha); });
}

hof_status hof_hopping_j(double depth, double* j_over_er) {
  if (!j_over_er) return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] {
    *j_over_er = hof::hopping_J(hof::solve_bands_1d(depth)).value;
  });
}

hof_status hof_raman_rabi(double omega_e, double omega_g, double delta_r,
                          double* out) {
  if (!out) return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded(
      [&] { *out = hof::raman_rabi_magnitude(omega_e, omega_g, delta_r); });
}

hof_status hof_solve_angles(double q, double delta_prime, double kg,
                            double* phi_e, double* phi_g, double* residual_x,
                            double* residual_y) {
  if (!phi_e || !phi_g) return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] {
    hof::BeamAngles a = hof::solve_angles(q, delta_prime, kg);
    *phi_e = a.phi_e;
    *phi_g = a.phi_g;
    if (residual_x) *residual_x = a.residual_x;
    if (residual_y) *residual_y = a.residual_y;
  });
}

hof_status hof_alpha_window(double delta_prime, double kg, double lambda,
                            double* alpha_min, double* alpha_max) {
  if (!alpha_min || !alpha_max)
    return fail(HOF_ERR_INVALID, "output pointer is null");
  return guarded([&] {
    auto [lo, hi] = hof::attainable_alpha_window(delta_prime, kg, lambda);
    *alpha_min = lo;
    *alpha_max = hi;
  });
}

hof_status hof_run(const char* command, const char* const* keys,
                   const char* const* values, size_t n,
                   const char* output_dir) {
  if (!command || !output_dir)
    return fail(HOF_ERR_INVALID, "command and output_dir must be non-null");
  if (n > 0 && (!keys || !values))
    return fail(HOF_ERR_INVALID, "keys/values must be non-null when n > 0");
  return guarded([&] {
    std::map<std::string, std::string> overrides;
    for (size_t i = 0; i < n; ++i) overrides[keys[i]] = values[i];
    hof::run_command(hof::resolve_config(command, overrides, output_dir));
  });
}

}  // extern "C"
