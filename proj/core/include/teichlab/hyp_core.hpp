#pragma once

// Scalar hyperbolic calculus on the real diameter (-1, 1) of the unit disk.

namespace teichlab {

/// Arguments closer than this to the unit circle are rejected.
inline constexpr double kDiskMargin = 1e-12;

/// The constant modulus k of the fixed extremal Beltrami coefficient.
class Modulus {
 public:
  /// Throws InputError unless 0 < k < 1 - kDiskMargin.
  explicit Modulus(double k);

  double value() const noexcept { return k_; }

  /// artanh(k), the Teichmueller length of the standard segments.
  double length() const noexcept;

  friend bool operator==(Modulus, Modulus) = default;

 private:
  double k_;
};

/// (a - b) / (1 - ab).
double mobius_diff(double a, double b);

/// Poincare distance on the diameter, artanh |mobius_diff(a, b)|.
double hyp_dist(double a, double b);

/// k = tanh(l).
Modulus modulus_from_length(double l);

double length_from_modulus(Modulus k);

/// Parameter t with artanh(t) = r.
double param_from_arclength(double r);

/// artanh(t) for t in [0, 1).
double arclength_from_param(double t);

}  // namespace teichlab
