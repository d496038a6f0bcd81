#pragma once

// Admissible functions sigma on [0, k] driving the geodesic family
//   mu_t = (sigma(t) chi_R1 + (k - t) / (k (1 - k t)) chi_R2) mu
// from [mu] = (1, 1) to [mu1] = (1, 0).
//
// In the coordinates a = artanh(t), u = artanh(k sigma) - artanh(k) the
// admissibility bounds read |u(a)| <= min(a, L - a) with L = artanh(k), and
// the curve is a geodesic of the sup model exactly when u is 1-Lipschitz.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "teichlab/hyp_core.hpp"

namespace teichlab {

enum class SigmaFamily {
  kConstantOne,
  kPrescribedGerm,
  kOscillatory,
  kMidpointPinned,
  kCustom,
};

std::string_view to_string(SigmaFamily family);
std::optional<SigmaFamily> sigma_family_from_string(std::string_view name);

class SigmaFunction {
 public:
  /// `d0` and `dk` are declared endpoint derivatives; they are consumed by
  /// the closed-form angle formulas only, never by numeric measurement.
  SigmaFunction(SigmaFamily family, Modulus k, std::function<double(double)> eval,
                std::optional<double> d0 = std::nullopt,
                std::optional<double> dk = std::nullopt);

  /// Evaluates sigma; throws InputError outside [0, k].
  double operator()(double t) const;

  SigmaFamily family() const noexcept { return family_; }
  Modulus modulus() const noexcept { return k_; }
  std::optional<double> d0() const noexcept { return d0_; }
  std::optional<double> dk() const noexcept { return dk_; }

 private:
  SigmaFamily family_;
  Modulus k_;
  std::function<double(double)> eval_;
  std::optional<double> d0_;
  std::optional<double> dk_;
};

/// Lower and upper admissibility bounds at t.
struct SigmaBounds {
  double lower;
  double upper;
};
SigmaBounds sigma_bounds(double t, Modulus k);

/// (k + t) / (k (1 + k t)); touching it near 0 makes alpha_mu u beta geodesic.
double upper_bound_near_zero(double t, Modulus k);
/// (2k - (1 + k^2) t) / (k (1 + k^2 - 2 k t)); the analogue near k.
double upper_bound_near_k(double t, Modulus k);

/// Largest |sigma'(0)| and |sigma'(k)| compatible with the bounds.
double max_derivative_at_zero(Modulus k);
double max_derivative_at_k(Modulus k);

struct SigmaValidation {
  bool endpoints_ok = true;     // sigma(0) = sigma(k) = 1
  bool bounds_ok = true;        // lower <= sigma <= upper on the grid
  bool strict_near_zero = true; // sigma < (k+t)/(k(1+kt)) as t -> 0+
  bool strict_near_k = true;    // sigma < upper_bound_near_k as t -> k-
  bool derivatives_ok = true;   // declared derivatives within range
  bool geodesic = true;         // u is 1-Lipschitz in a on the grid

  double worst_t = 0.0;            // where the largest bound excess occurred
  double max_bound_excess = 0.0;   // > 0 only on violation
  double max_lipschitz_ratio = 0.0;

  /// Endpoint, bound and declared-derivative checks pass.
  bool admissible() const noexcept {
    return endpoints_ok && bounds_ok && derivatives_ok;
  }
  /// Admissible and distinct from the standard sides at both ends.
  bool distinct() const noexcept {
    return admissible() && strict_near_zero && strict_near_k;
  }
};

inline constexpr std::size_t kDefaultValidationSamples = 10000;

SigmaValidation validate_sigma(const SigmaFunction& sigma,
                               std::size_t samples = kDefaultValidationSamples);

/// Construction knobs for sigma_prescribed.
struct GermOptions {
  double germ0_fraction = 0.1;  // germ interval near 0, as a fraction of k
  double germk_fraction = 0.1;  // germ interval near k
  int interior_knots = 3;
  std::uint64_t seed = 0;       // 0: unperturbed interior
  double amplitude = 0.15;      // interior perturbation, in knot spacings
  double k_curvature = 0.0;     // extra c (t - k)^2 on the linear k-germ
  int max_shrinks = 30;
  std::size_t validation_samples = kDefaultValidationSamples;
};

SigmaFunction sigma_constant_one(Modulus k);

/// sigma with sigma'(0) = d0 and sigma'(k) = dk built from the standard germs
/// near each end and a monotone piecewise-cubic interior in (a, u)
/// coordinates. Throws InputError for out-of-range derivatives and
/// ConstructionError when shrinking never yields a valid geodesic.
SigmaFunction sigma_prescribed(double d0, double dk, Modulus k,
                               const GermOptions& options = {});

/// 1 + (1-k^2)/(2k) t sin^2(1/t) near 0: admissible, not differentiable at 0.
SigmaFunction sigma_oscillatory(Modulus k);

/// The admissible geodesic through the midpoint pin (t0, sigma(t0)).
SigmaFunction sigma_midpoint_pinned(Modulus k);

/// t0 = k / (1 + sqrt(1 - k^2)).
double midpoint_param(Modulus k);
/// sigma(t0) = (2 + sqrt(1 - k^2)) / (1 + k^2 + sqrt(1 - k^2)).
double midpoint_sigma_value(Modulus k);

}  // namespace teichlab
