#ifndef HOF_FLUX_HPP
#define HOF_FLUX_HPP

#include <optional>

namespace hof {

// Flux per plaquette alpha, either an exact rational p/r (reduced) or a
// real value. The phase picked up around one elementary plaquette is
// 2*pi*alpha.
class FluxRatio {
 public:
  enum class Kind { rational, real };

  static FluxRatio rational(long p, long r);
  static FluxRatio real(double value);

  // alpha = q * lambda / (4*pi). Throws DomainError for q < 0 or lambda <= 0.
  static FluxRatio from_wavenumber(double q, double lambda);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  long p() const { return p_; }
  long r() const { return r_; }
  double value() const { return value_; }
  double phase_per_plaquette() const;

  // Nearest p/r with r <= r_max and |value - p/r| < tol, if any.
  std::optional<FluxRatio> snap_to_rational(long r_max = 64,
                                            double tol = 1e-12) const;

 private:
  FluxRatio() = default;
  Kind kind_ = Kind::real;
  long p_ = 0;
  long r_ = 1;
  double value_ = 0.0;
};

}  // namespace hof

#endif
