#pragma once
// JSON shapes of the core reports. Field names follow the core structs.

#include <json.hpp>

#include "teichlab/teichlab.hpp"

namespace teichlab::cli {

using Json = nlohmann::ordered_json;

/// Rounded to 9 significant digits; non-finite values become null.
Json number(double x);
Json point_json(BlockPoint p);
Json angle_json(const AngleResult& result, bool with_diagnostics);
Json sigma_json(const SigmaFunction& sigma);
Json validation_json(const SigmaValidation& v);
Json segment_json(const GeodesicSegment& s);
Json triangle_json(const TriangleReport& report);
Json probe_json(const ProbeReport& report);

}  // namespace teichlab::cli
