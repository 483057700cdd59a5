#ifndef HOF_LASER_HPP
#define HOF_LASER_HPP

#include <utility>

namespace hof {

struct RamanConfig {
  double Omega_e = 0.0;
  double Omega_g = 0.0;
  double delta_r = 0.0;      // detuning to the auxiliary level
  double k_g = 0.0;
  double Delta_prime = 0.0;  // (Delta + omega_eg)/c
  double q = 0.0;

  double k_e() const { return k_g - Delta_prime; }
  bool adiabatic_ok() const {
    return delta_r >= 10.0 * Omega_e && delta_r >= 10.0 * Omega_g;
  }
};

// Effective Raman Rabi frequency Omega_e*Omega_g/(2*delta_r) after
// adiabatic elimination of the auxiliary level. Throws DomainError for
// delta_r <= 0.
double raman_rabi_magnitude(double Omega_e, double Omega_g, double delta_r);

struct BeamAngles {
  double phi_e = 0.0;  // radians; may be negative below the branch point
  double phi_g = 0.0;  // radians, in [0, pi/2]
  double residual_x = 0.0;  // k_e cos(phi_e) - k_g cos(phi_g)
  double residual_y = 0.0;  // k_e sin(phi_e) + k_g sin(phi_g) - q
};

// Gamma^2 = (q^2 - Dp^2)(4 kg^2 - q^2 - 4 kg Dp + Dp^2); shared by the
// solver and its invariants so both sides compute the identical expression.
double gamma_squared(double q, double Delta_prime, double k_g);

// Beam angles realizing wave number q: cos(phi_e) = Gamma/(2 q (kg - Dp)),
// cos(phi_g) = Gamma/(2 q kg); sin(phi_e) is fixed by the y-constraint and
// carries the sign (negative for q below sqrt(Dp(2 kg - Dp))). Throws
// RangeError naming the violated bound when q is outside
// (Delta' , sqrt(4 kg (kg - Dp) + Dp^2)), with a guard band of 1e-9*kg.
BeamAngles solve_angles(double q, double Delta_prime, double k_g);

// q-window mapped through alpha = q*lambda/(4*pi).
std::pair<double, double> attainable_alpha_window(double Delta_prime,
                                                  double k_g, double lambda);

}  // namespace hof

#endif
