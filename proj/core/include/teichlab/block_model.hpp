#pragma once

// Two-block model of an infinite dimensional Teichmueller slice.
//
// A point (c1, c2) stands for the class of (c1 chi_R1 + c2 chi_R2) mu where
// |mu| = k everywhere. Two-block compositions are extremal, so the
// Teichmueller distance is the sup over blocks of the Poincare distance
// between k*c_i values.

#include <span>
#include <vector>

#include "teichlab/hyp_core.hpp"

namespace teichlab {

struct BlockPoint {
  double c1 = 0.0;
  double c2 = 0.0;

  friend bool operator==(const BlockPoint&, const BlockPoint&) = default;
};

/// A direction (v1 chi_R1 + v2 chi_R2) mu.
struct TangentBlock {
  double v1 = 0.0;
  double v2 = 0.0;

  friend TangentBlock operator-(TangentBlock a, TangentBlock b) {
    return {a.v1 - b.v1, a.v2 - b.v2};
  }
  friend TangentBlock operator*(double s, TangentBlock v) {
    return {s * v.v1, s * v.v2};
  }
};

/// Named vertices: the base point [0], [mu] and [mu1] = [chi_R1 mu].
inline constexpr BlockPoint kBasePoint{0.0, 0.0};
inline constexpr BlockPoint kMuPoint{1.0, 1.0};
inline constexpr BlockPoint kMu1Point{1.0, 0.0};

bool is_valid(BlockPoint p, Modulus k) noexcept;

/// Throws InvariantError when k*|c_i| reaches the unit circle.
void require_valid(BlockPoint p, Modulus k, const char* name = "point");

double distance(BlockPoint p, BlockPoint q, Modulus k);

/// k * max(|v1|, |v2|).
double h_functional(TangentBlock v, Modulus k);

/// Coordinates of p in the chart based at [mu]: c -> (1 - c) / (1 - k^2 c)
/// blockwise. An isometric involution exchanging [0] and [mu].
BlockPoint allowable_chart(BlockPoint p, Modulus k);

struct VariationSlope {
  std::vector<double> t;
  std::vector<double> quotient;  // distance(t v, t w) / t
  double limit = 0.0;            // extrapolated to t = 0
};

/// Halving schedule 1e-2, 5e-3, ... (five values).
std::vector<double> default_variation_schedule();

/// First-order variation of the distance near the base point, whose limit is
/// h_functional(v - w, k).
VariationSlope variation_slope(TangentBlock v, TangentBlock w, Modulus k,
                               std::span<const double> schedule);

/// Polynomial extrapolation of samples (x_i, y_i) to x = 0 (Neville).
double extrapolate_to_zero(std::span<const double> x,
                           std::span<const double> y);

}  // namespace teichlab
