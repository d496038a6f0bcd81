#pragma once

// Geodesic triangles with vertices [0], [mu], [mu1], all sides of length l and
// three prescribed angles, plus the midpoint curvature probe.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "teichlab/angles.hpp"
#include "teichlab/geodesics.hpp"
#include "teichlab/sigma.hpp"

namespace teichlab {

/// How the third side ends at [mu1].
enum class TerminalMode {
  /// sigma~ copies sigma'(k); the [mu1] angle then follows 1 - k sigma'(k).
  kMatchSlope,
  /// sigma~ == 1 near k, so the third side coincides with alpha_mu1 there and
  /// the [mu1] angle is never below pi/3.
  kCoincide,
};

/// Vertex order used by every per-vertex array: [0], [mu], [mu1].
enum VertexIndex : std::size_t { kVertexBase = 0, kVertexMu = 1, kVertexMu1 = 2 };

struct TriangleSpec {
  double side_length = 0.0;
  std::array<double, 3> theta{};  // targets at [0], [mu], [mu1]
  std::uint64_t family_seed = 0;
  TerminalMode terminal = TerminalMode::kMatchSlope;
  double terminal_fraction = 0.1;  // sigma~ == 1 on [k - fraction k, k] (kCoincide)
};

struct TriangleOptions {
  Schedule schedule{};
  Tolerances tolerances{};
  double angle_tolerance = 1e-3;
  double side_tolerance = 1e-12;
};

/// Side order: alpha_mu ([0]-[mu]), beta_sigma ([mu]-[mu1]), gamma~ ([0]-[mu1]).
enum SideIndex : std::size_t { kSideAlphaMu = 0, kSideBeta = 1, kSideGamma = 2 };

struct TriangleReport {
  Modulus k;
  SigmaFunction sigma;
  SigmaFunction sigma_tilde;
  std::array<GeodesicSegment, 3> sides;
  std::array<BlockPoint, 3> vertices;
  std::array<double, 3> side_lengths{};  // distance between side endpoints
  std::array<double, 3> target{};
  std::array<double, 3> predicted{};     // closed forms from declared derivatives
  std::array<AngleResult, 3> measured{};
  std::array<bool, 3> angle_ok{};
  std::array<bool, 3> boundary{};        // target at 0 or pi
  bool sides_ok = false;
  bool endpoints_ok = false;  // pairs share exactly one endpoint
  bool distinct_ok = false;   // no two sides coincide near a shared vertex
  double angle_sum = 0.0;     // of measured angles
  double predicted_sum = 0.0;

  bool ok() const noexcept {
    return sides_ok && endpoints_ok && distinct_ok && angle_ok[0] && angle_ok[1] &&
           angle_ok[2];
  }
};

/// Throws InputError for an invalid spec and ConstructionError when a sigma
/// blend cannot be built.
TriangleReport synthesize(const TriangleSpec& spec, const TriangleOptions& options = {});

/// n triangles sharing vertices, side lengths, angles and the side alpha_mu,
/// with beta sides from seeds family_seed, family_seed + 1, ...
std::vector<TriangleReport> synthesize_family(const TriangleSpec& spec, int n,
                                              const TriangleOptions& options = {});

struct ProbeReport {
  Modulus k;
  double t0 = 0.0;
  double sigma_t0 = 0.0;
  BlockPoint beta_midpoint{};
  BlockPoint alpha_midpoint{};
  double beta_midpoint_arclength = 0.0;   // from [mu]
  double alpha_midpoint_arclength = 0.0;  // from [mu]
  double half_length = 0.0;               // l / 2
  double midpoint_distance = 0.0;         // m
  double base = 0.0;                      // distance([mu1], [0])
  double ratio = 0.0;                     // base / m
  /// d(B, C) > 2 d(B~, C~) fails, i.e. the negative-curvature criterion is
  /// violated by this triangle.
  bool negative_curvature_violated = false;
};

ProbeReport curvature_probe(Modulus k);

}  // namespace teichlab
