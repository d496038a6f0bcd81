#pragma once

// Chord-ratio angles: 2 sin(theta / 2) = lim_{r -> 0} d(x(r), y(r)) / r, with
// x(r), y(r) at arclength r from the common vertex.

#include <string_view>
#include <utility>
#include <vector>

#include "teichlab/block_model.hpp"
#include "teichlab/geodesics.hpp"
#include "teichlab/sigma.hpp"

namespace teichlab {

/// Geometric sample radii r_j = r0 * ratio^j, j < steps.
struct Schedule {
  double r0 = 1e-2;
  double ratio = 0.5;
  int steps = 20;
};

struct Tolerances {
  double conv = 1e-5;  // trailing-window spread accepted as converged
  double osc = 1e-2;   // spread treated as persistent oscillation
  int window = 5;
};

enum class Verdict { kExists, kDoesNotExist, kInconclusive };

std::string_view to_string(Verdict verdict);

struct AngleSample {
  double r;
  double ratio;
};

struct AngleResult {
  Verdict verdict = Verdict::kInconclusive;
  double theta = 0.0;        // meaningful when verdict == kExists
  double limit_value = 0.0;  // chord-ratio estimate, in [0, 2] when it exists
  std::vector<AngleSample> diagnostics;  // r strictly decreasing
  std::pair<double, double> oscillation_band{0.0, 0.0};  // over the last window
  double raw_limit = 0.0;    // before clamping
  bool clamp_flag = false;   // clamping moved the limit past the rounding floor
};

/// theta from a chord-ratio limit q: 2 asin(clamp(q / 2, 0, 1)).
double theta_from_chord_ratio(double q);

/// Measures the angle at `vertex`, an endpoint of both segments.
AngleResult angle_numeric(const GeodesicSegment& a, const GeodesicSegment& b,
                          BlockPoint vertex, const Schedule& schedule = {},
                          const Tolerances& tolerances = {});

/// Angle at [mu] between alpha_mu and beta_sigma from sigma'(0):
/// 2 sin(theta / 2) = 1 + k sigma'(0) / (1 - k^2).
/// Throws ExistenceUnknownError when sigma declares no derivative at 0.
double angle_at_mu_closed(const SigmaFunction& sigma);

/// Angle at [mu1] between alpha_mu1 and beta_sigma in the published form
/// 2 sin(theta / 2) = 1 - k sigma'(k).
double angle_at_mu1_closed(const SigmaFunction& sigma);

/// The same angle evaluated in the sup model, where block 2 of beta moves at
/// unit speed while alpha_mu1 keeps it at 0:
/// 2 sin(theta / 2) = max(1, 1 - k sigma'(k)).
double angle_at_mu1_model(const SigmaFunction& sigma);

/// Angle at [mu1] between beta_sigma and the pulled-back side built from
/// sigma_tilde: 2 sin(theta / 2) = max(|1 - k sigma'(k)|, |1 - k sigma_tilde'(k)|).
double angle_at_mu1_between(const SigmaFunction& sigma, const SigmaFunction& sigma_tilde);

/// Angle at the base point between standard segments towards directions v
/// and w: 2 sin(theta / 2) = max_i |v_i / |v|_inf - w_i / |w|_inf|.
double angle_base_standard(TangentBlock v, TangentBlock w, Modulus k);

/// sigma'(0) realizing angle theta at [mu], and sigma'(k) realizing theta at
/// [mu1]; inverses of the closed forms above.
double derivative_at_zero_for_angle(double theta, Modulus k);
double derivative_at_k_for_angle(double theta, Modulus k);

enum class SigmaEnd { kZero, kK };

struct DerivativeProbe {
  Verdict verdict = Verdict::kInconclusive;
  double estimate = 0.0;
  std::vector<AngleSample> quotients;  // (offset h, difference quotient)
  std::pair<double, double> oscillation_band{0.0, 0.0};
};

/// One-sided difference quotients of sigma at an endpoint over offsets
/// h_j = k * r0 * ratio^j, classified like angle_numeric.
DerivativeProbe derivative_probe(const SigmaFunction& sigma, SigmaEnd end,
                                 const Schedule& schedule = {},
                                 const Tolerances& tolerances = {});

}  // namespace teichlab
