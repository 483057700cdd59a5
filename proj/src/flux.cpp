#include "hof/flux.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hof/error.hpp"

namespace hof {

FluxRatio FluxRatio::rational(long p, long r) {
  if (r < 1) throw DomainError("flux denominator must be >= 1, got " + std::to_string(r));
  if (p < 0) throw DomainError("flux numerator must be >= 0, got " + std::to_string(p));
  long g = std::gcd(p, r);
  if (g == 0) g = 1;
  FluxRatio f;
  f.kind_ = Kind::rational;
  f.p_ = p / g;
  f.r_ = r / g;
  f.value_ = static_cast<double>(f.p_) / static_cast<double>(f.r_);
  return f;
}

FluxRatio FluxRatio::real(double value) {
  FluxRatio f;
  f.kind_ = Kind::real;
  f.value_ = value;
  return f;
}

FluxRatio FluxRatio::from_wavenumber(double q, double lambda) {
  if (q < 0.0) throw DomainError("wave number q must be >= 0");
  if (lambda <= 0.0) throw DomainError("wavelength must be > 0");
  return real(q * lambda / (4.0 * std::numbers::pi));
}

double FluxRatio::phase_per_plaquette() const {
  return 2.0 * std::numbers::pi * value_;
}

std::optional<FluxRatio> FluxRatio::snap_to_rational(long r_max,
                                                     double tol) const {
  if (kind_ == Kind::rational) return *this;
  if (value_ < 0.0) return std::nullopt;
  for (long r = 1; r <= r_max; ++r) {
    double pr = value_ * static_cast<double>(r);
    long p = std::lround(pr);
    if (p < 0) continue;
    if (std::abs(value_ - static_cast<double>(p) / static_cast<double>(r)) < tol)
      return rational(p, r);
  }
  return std::nullopt;
}

}  // namespace hof
