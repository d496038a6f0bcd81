#pragma once

// Geodesic segments of the two-block model with exact arclength addressing.
//
// Every segment here is parametrized so that the distance from its start to
// point_at(t) is artanh(t), t in [0, param_end()].

#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "teichlab/block_model.hpp"
#include "teichlab/sigma.hpp"

namespace teichlab {

enum class SegmentKind { kStandard, kSigma, kPulledBack, kMapped };

std::string_view to_string(SegmentKind kind);

enum class End { kStart, kEnd };

class GeodesicSegment {
 public:
  using PointMap = std::function<BlockPoint(double)>;

  /// `param_end` is the parameter of the far endpoint; distance from the
  /// start must equal artanh(t) along `at_param`.
  GeodesicSegment(SegmentKind kind, Modulus k, double param_end, PointMap at_param,
                  bool geodesic = true);

  SegmentKind kind() const noexcept { return kind_; }
  Modulus modulus() const noexcept { return k_; }
  double param_end() const noexcept { return param_end_; }
  double total_length() const noexcept;

  /// False when the curve is only known to lie between its endpoints (for
  /// example the oscillatory sigma family).
  bool is_geodesic() const noexcept { return geodesic_; }

  BlockPoint start() const;
  BlockPoint end() const;
  BlockPoint endpoint(End which) const;

  BlockPoint point_at(double t) const;

  /// Parameter of the point at arclength r from the chosen endpoint.
  double param_at_arclength(End from, double r) const;
  BlockPoint point_at_arclength(End from, double r) const;
  /// Arclength from the chosen endpoint to point_at(t).
  double arclength_at_param(End from, double t) const;

  /// Which endpoint coincides with `vertex` componentwise within `tol`.
  std::optional<End> end_at(BlockPoint vertex, double tol = 1e-12) const;

  /// Image under an isometry of the model (arclengths are unchanged).
  GeodesicSegment mapped(std::function<BlockPoint(BlockPoint)> isometry) const;

 private:
  SegmentKind kind_;
  Modulus k_;
  double param_end_;
  std::shared_ptr<const PointMap> at_param_;
  bool geodesic_;
};

/// Standard segment from p to q (blockwise Moebius straight line).
/// Throws DegenerateSegmentError when p == q.
GeodesicSegment standard_segment(BlockPoint p, BlockPoint q, Modulus k);

/// beta_sigma: t -> (sigma(t), (k - t) / (k (1 - k t))), t in [0, k], from
/// (1, 1) to (1, 0). Throws InvalidSigmaError when sigma is not admissible.
GeodesicSegment sigma_segment(const SigmaFunction& sigma);

/// Third side from (0, 0) to (1, 0): t -> (t / k, T(sigma(t))) with
/// T(x) = (1 - x) / (1 - k^2 x); the chart image of the sigma construction
/// with the two blocks exchanged.
GeodesicSegment pulled_back_segment(const SigmaFunction& sigma);

/// Segment mapped through allowable_chart.
GeodesicSegment chart_image(const GeodesicSegment& segment);

/// Largest |distance(x(s), y(s))| over `samples` aligned arclength positions
/// from the start; used to certify two segments as distinct.
double max_aligned_gap(const GeodesicSegment& a, const GeodesicSegment& b,
                       int samples = 64);

}  // namespace teichlab
