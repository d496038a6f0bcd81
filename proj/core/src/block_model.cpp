#include "teichlab/block_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "teichlab/errors.hpp"

namespace teichlab {

bool is_valid(BlockPoint p, Modulus k) noexcept {
  const double bound = 1.0 - kDiskMargin;
  return std::isfinite(p.c1) && std::isfinite(p.c2) &&
         std::abs(p.c1) * k.value() < bound &&
         std::abs(p.c2) * k.value() < bound;
}

void require_valid(BlockPoint p, Modulus k, const char* name) {
  if (!is_valid(p, k)) {
    std::ostringstream os;
    os.precision(17);
    os << name << " (" << p.c1 << ", " << p.c2
       << ") violates |c_i| k < 1 for k = " << k.value();
    throw InvariantError(os.str());
  }
}

double distance(BlockPoint p, BlockPoint q, Modulus k) {
  require_valid(p, k, "p");
  require_valid(q, k, "q");
  const double kk = k.value();
  return std::max(hyp_dist(kk * p.c1, kk * q.c1), hyp_dist(kk * p.c2, kk * q.c2));
}

double h_functional(TangentBlock v, Modulus k) {
  if (!std::isfinite(v.v1) || !std::isfinite(v.v2)) {
    throw InputError("tangent direction must be finite");
  }
  return k.value() * std::max(std::abs(v.v1), std::abs(v.v2));
}

BlockPoint allowable_chart(BlockPoint p, Modulus k) {
  require_valid(p, k);
  const double k2 = k.value() * k.value();
  auto flip = [k2](double c) { return (1.0 - c) / (1.0 - k2 * c); };
  return {flip(p.c1), flip(p.c2)};
}

std::vector<double> default_variation_schedule() {
  return {1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
}

double extrapolate_to_zero(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || x.size() != y.size()) {
    throw InputError("extrapolation needs matching, non-empty samples");
  }
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      // P_{i..i+m}(0) from P_{i..i+m-1}(0) and P_{i+1..i+m}(0).
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return p[0];
}

VariationSlope variation_slope(TangentBlock v, TangentBlock w, Modulus k,
                               std::span<const double> schedule) {
  if (schedule.empty()) {
    throw InputError("variation schedule is empty");
  }
  VariationSlope out;
  for (double t : schedule) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw InputError("variation schedule values must be positive");
    }
    if (std::find(out.t.begin(), out.t.end(), t) != out.t.end()) {
      throw InputError("variation schedule values must be distinct");
    }
    const BlockPoint p{t * v.v1, t * v.v2};
    const BlockPoint q{t * w.v1, t * w.v2};
    out.t.push_back(t);
    out.quotient.push_back(distance(p, q, k) / t);
  }
  out.limit = extrapolate_to_zero(out.t, out.quotient);
  return out;
}

}  // namespace teichlab
