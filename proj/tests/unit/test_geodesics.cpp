#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "teichlab/errors.hpp"
#include "teichlab/geodesics.hpp"

namespace tl = teichlab;

TEST(StandardSegment, AlphaMuIsTheDiagonal) {
  const double kv = 0.5;
  const auto a = tl::standard_segment(tl::kBasePoint, tl::kMuPoint, tl::Modulus(kv));
  EXPECT_NEAR(a.param_end(), kv, 1e-15);
  for (double t : {0.0, 0.1, 0.3, 0.5}) {
    const auto p = a.point_at(t);
    EXPECT_NEAR(p.c1, t / kv, 1e-15);
    EXPECT_NEAR(p.c2, t / kv, 1e-15);
  }
}

TEST(StandardSegment, MuToMu1MatchesConstantSigmaSide) {
  const double kv = 0.4;
  const tl::Modulus k(kv);
  const auto a = tl::standard_segment(tl::kMuPoint, tl::kMu1Point, k);
  const auto b = tl::sigma_segment(tl::sigma_constant_one(k));
  for (double t : {0.0, 0.1, 0.25, 0.4}) {
    EXPECT_NEAR(a.point_at(t).c1, 1.0, 1e-15);
    EXPECT_NEAR(a.point_at(t).c2, (kv - t) / (kv * (1 - kv * t)), 1e-14);
    EXPECT_NEAR(tl::distance(a.point_at(t), b.point_at(t), k), 0.0, 1e-14);
  }
}

TEST(StandardSegment, EndpointsExact) {
  const tl::Modulus k(0.6);
  const tl::BlockPoint p{0.3, -1.2};
  const tl::BlockPoint q{-0.8, 0.9};
  const auto s = tl::standard_segment(p, q, k);
  EXPECT_NEAR(s.start().c1, p.c1, 1e-14);
  EXPECT_NEAR(s.start().c2, p.c2, 1e-14);
  EXPECT_NEAR(s.end().c1, q.c1, 1e-14);
  EXPECT_NEAR(s.end().c2, q.c2, 1e-14);
  EXPECT_NEAR(s.total_length(), tl::distance(p, q, k), 1e-14);
}

TEST(StandardSegment, RejectsDegenerateAndInvalidEndpoints) {
  const tl::Modulus k(0.5);
  EXPECT_THROW(tl::standard_segment({0.2, 0.2}, {0.2, 0.2}, k), tl::DegenerateSegmentError);
  EXPECT_THROW(tl::standard_segment({3.0, 0.0}, tl::kBasePoint, k), tl::InvariantError);
}

TEST(SigmaSegment, ArclengthFromMu) {
  const double kv = 0.5;
  const tl::Modulus k(kv);
  const auto b = tl::sigma_segment(tl::sigma_prescribed(0.3, -0.7, k, {.seed = 4}));
  EXPECT_EQ(b.start(), tl::kMuPoint);
  EXPECT_NEAR(b.end().c1, 1.0, 1e-14);
  EXPECT_NEAR(b.end().c2, 0.0, 1e-15);
  for (double t : {0.01, 0.1, 0.2, 0.33, 0.49}) {
    EXPECT_NEAR(tl::distance(tl::kMuPoint, b.point_at(t), k), std::atanh(t), 1e-13);
  }
}

TEST(SigmaSegment, RejectsInadmissibleSigma) {
  const tl::Modulus k(0.5);
  tl::SigmaFunction bad(tl::SigmaFamily::kCustom, k,
                        [](double t) { return 1 + 3 * t * (0.5 - t) / 0.5; });
  try {
    (void)tl::sigma_segment(bad);
    FAIL() << "expected InvalidSigmaError";
  } catch (const tl::InvalidSigmaError& e) {
    EXPECT_EQ(e.code(), "invalid_sigma");
    EXPECT_GT(e.t(), 0.0);
  }
  EXPECT_THROW(tl::pulled_back_segment(bad), tl::InvalidSigmaError);
}

TEST(SigmaSegment, OscillatorySideIsNotGeodesic) {
  const auto b = tl::sigma_segment(tl::sigma_oscillatory(tl::Modulus(0.5)));
  EXPECT_FALSE(b.is_geodesic());
}

TEST(PulledBackSegment, ConstantOneIsAlphaMu1) {
  const double kv = 0.7;
  const tl::Modulus k(kv);
  const auto g = tl::pulled_back_segment(tl::sigma_constant_one(k));
  EXPECT_EQ(g.start(), tl::kBasePoint);
  EXPECT_NEAR(g.end().c1, 1.0, 1e-15);
  for (double t : {0.1, 0.35, 0.6}) {
    EXPECT_NEAR(g.point_at(t).c1, t / kv, 1e-15);
    EXPECT_EQ(g.point_at(t).c2, 0.0);
  }
}

TEST(PulledBackSegment, ArclengthFromBase) {
  const double kv = 0.5;
  const tl::Modulus k(kv);
  const auto g = tl::pulled_back_segment(tl::sigma_prescribed(-0.4, 0.6, k, {.seed = 9}));
  for (double t : {0.02, 0.15, 0.3, 0.45}) {
    EXPECT_NEAR(tl::distance(tl::kBasePoint, g.point_at(t), k), std::atanh(t), 1e-13);
  }
}

TEST(GeodesicSegment, ArclengthParametrization) {
  const tl::Modulus k(0.5);
  const auto b = tl::sigma_segment(tl::sigma_prescribed(0.2, 0.4, k));
  const double l = b.total_length();
  for (double r : {1e-9, 1e-4, 0.1, l / 2, l - 1e-6}) {
    const double from_start = tl::distance(b.start(), b.point_at_arclength(tl::End::kStart, r), k);
    const double from_end = tl::distance(b.end(), b.point_at_arclength(tl::End::kEnd, r), k);
    EXPECT_NEAR(from_start, r, 1e-13);
    EXPECT_NEAR(from_end, r, 1e-13);
    const double t = b.param_at_arclength(tl::End::kEnd, r);
    EXPECT_NEAR(b.arclength_at_param(tl::End::kEnd, t), r, 1e-12);
  }
  EXPECT_THROW(b.point_at_arclength(tl::End::kStart, l + 1e-6), tl::InputError);
  EXPECT_THROW(b.point_at(0.6), tl::InputError);
}

TEST(GeodesicSegment, EndAtVertex) {
  const tl::Modulus k(0.5);
  const auto a = tl::standard_segment(tl::kBasePoint, tl::kMuPoint, k);
  EXPECT_EQ(a.end_at(tl::kBasePoint), tl::End::kStart);
  EXPECT_EQ(a.end_at(tl::kMuPoint), tl::End::kEnd);
  EXPECT_FALSE(a.end_at(tl::kMu1Point).has_value());
}

// The pulled-back side is the chart image with its two blocks exchanged, so
// it ends at [mu1] rather than at (0, 1).
TEST(ChartImage, MapsSigmaSideOntoPulledBackSide) {
  const tl::Modulus k(0.5);
  const auto s = tl::sigma_prescribed(0.4, -0.3, k, {.seed = 2});
  const auto img = tl::chart_image(tl::sigma_segment(s));
  EXPECT_EQ(img.kind(), tl::SegmentKind::kMapped);
  EXPECT_NEAR(img.end().c1, 0.0, 1e-14);
  EXPECT_NEAR(img.end().c2, 1.0, 1e-14);
  const auto swapped = img.mapped([](tl::BlockPoint p) { return tl::BlockPoint{p.c2, p.c1}; });
  EXPECT_LT(tl::max_aligned_gap(swapped, tl::pulled_back_segment(s)), 1e-14);
}

TEST(MaxAlignedGap, SeparatesDistinctSides) {
  const tl::Modulus k(0.5);
  const auto a = tl::sigma_segment(tl::sigma_prescribed(0.5, 0.5, k, {.seed = 1}));
  const auto b = tl::sigma_segment(tl::sigma_prescribed(0.5, 0.5, k, {.seed = 2}));
  EXPECT_GT(tl::max_aligned_gap(a, b), 1e-6);
  EXPECT_EQ(tl::max_aligned_gap(a, a), 0.0);
}
