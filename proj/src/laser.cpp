#include "hof/laser.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hof/error.hpp"

namespace hof {

double raman_rabi_magnitude(double Omega_e, double Omega_g, double delta_r) {
  if (delta_r <= 0.0)
    throw DomainError("raman_rabi_magnitude requires delta_r > 0");
  return Omega_e * Omega_g / (2.0 * delta_r);
}

double gamma_squared(double q, double Delta_prime, double k_g) {
  return (q * q - Delta_prime * Delta_prime) *
         (4.0 * k_g * k_g - q * q - 4.0 * k_g * Delta_prime +
          Delta_prime * Delta_prime);
}

BeamAngles solve_angles(double q, double Delta_prime, double k_g) {
  if (k_g <= 0.0) throw DomainError("solve_angles requires k_g > 0");
  if (Delta_prime < 0.0 || Delta_prime >= k_g)
    throw DomainError("solve_angles requires 0 <= Delta' < k_g");
  const double guard = 1e-9 * k_g;  // Gamma -> 0 at the window edges
  const double q_max = std::sqrt(4.0 * k_g * (k_g - Delta_prime) +
                                 Delta_prime * Delta_prime);
  if (q <= Delta_prime + guard)
    throw RangeError("q outside validity window: lower bound q > Delta' "
                     "violated (q = " + std::to_string(q) +
                     ", Delta' = " + std::to_string(Delta_prime) + ")");
  if (q >= q_max - guard)
    throw RangeError("q outside validity window: upper bound "
                     "q < sqrt(4 kg (kg - Delta') + Delta'^2) violated "
                     "(q = " + std::to_string(q) +
                     ", bound = " + std::to_string(q_max) + ")");

  const double k_e = k_g - Delta_prime;
  const double gamma = std::sqrt(gamma_squared(q, Delta_prime, k_g));
  const double cos_e = gamma / (2.0 * q * k_e);
  const double cos_g = gamma / (2.0 * q * k_g);
  const double sin_g = std::sqrt(std::max(0.0, 1.0 - cos_g * cos_g));
  // The y-constraint fixes sin(phi_e) including its sign: phi_e is negative
  // for q below the branch point sqrt(Delta'(2 kg - Delta')).
  const double sin_e = (q - k_g * sin_g) / k_e;

  BeamAngles out;
  out.phi_e = std::atan2(sin_e, cos_e);
  out.phi_g = std::atan2(sin_g, cos_g);
  out.residual_x = k_e * std::cos(out.phi_e) - k_g * std::cos(out.phi_g);
  out.residual_y = k_e * std::sin(out.phi_e) + k_g * std::sin(out.phi_g) - q;
  return out;
}

std::pair<double, double> attainable_alpha_window(double Delta_prime,
                                                  double k_g, double lambda) {
  if (k_g <= Delta_prime || Delta_prime < 0.0)
    throw DomainError("attainable_alpha_window requires k_g > Delta' >= 0");
  const double four_pi = 4.0 * std::numbers::pi;
  double alpha_min = Delta_prime * lambda / four_pi;
  double alpha_max = lambda *
                     std::sqrt(4.0 * k_g * (k_g - Delta_prime) +
                               Delta_prime * Delta_prime) /
                     four_pi;
  return {alpha_min, alpha_max};
}

}  // namespace hof
