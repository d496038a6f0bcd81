#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "teichlab/angles.hpp"
#include "teichlab/errors.hpp"
#include "teichlab/sigma.hpp"

namespace tl = teichlab;

namespace {

const std::vector<double> kGridK{0.3, 0.5, 0.7};
const std::vector<double> kGridFrac{-1.0, -0.5, 0.0, 0.5, 1.0};

}  // namespace

TEST(SigmaFamilyNames, RoundTrip) {
  for (auto f : {tl::SigmaFamily::kConstantOne, tl::SigmaFamily::kPrescribedGerm,
                 tl::SigmaFamily::kOscillatory, tl::SigmaFamily::kMidpointPinned}) {
    EXPECT_EQ(tl::sigma_family_from_string(tl::to_string(f)), f);
  }
  EXPECT_FALSE(tl::sigma_family_from_string("nope").has_value());
}

TEST(SigmaFunction, RejectsArgumentsOutsideDomain) {
  const auto s = tl::sigma_constant_one(tl::Modulus(0.5));
  EXPECT_THROW(s(-0.01), tl::InputError);
  EXPECT_THROW(s(0.51), tl::InputError);
  EXPECT_EQ(s(0.5), 1.0);
}

TEST(ValidateSigma, ConstantOnePassesStrictly) {
  for (double kv : kGridK) {
    const auto v = tl::validate_sigma(tl::sigma_constant_one(tl::Modulus(kv)));
    EXPECT_TRUE(v.admissible());
    EXPECT_TRUE(v.distinct());
    EXPECT_TRUE(v.geodesic);
  }
}

TEST(ValidateSigma, DetectsUpperBoundViolation) {
  const tl::Modulus k(0.5);
  const double slope = 2 * (1 - 0.25) / 0.5;
  tl::SigmaFunction s(tl::SigmaFamily::kCustom, k, [slope](double t) {
    return 1 + slope * t * (0.5 - t) / 0.5;
  });
  const auto v = tl::validate_sigma(s);
  EXPECT_FALSE(v.bounds_ok);
  EXPECT_FALSE(v.admissible());
  EXPECT_LT(v.worst_t, 0.25);
  EXPECT_GT(v.max_bound_excess, 0.0);
}

TEST(ValidateSigma, DetectsEndpointViolation) {
  tl::SigmaFunction s(tl::SigmaFamily::kCustom, tl::Modulus(0.5), [](double) { return 1.01; });
  EXPECT_FALSE(tl::validate_sigma(s).endpoints_ok);
}

TEST(SigmaPrescribed, ZeroDerivativesGiveThirdOfPiAngles) {
  const tl::Modulus k(0.5);
  const auto s = tl::sigma_prescribed(0.0, 0.0, k);
  EXPECT_NEAR(tl::angle_at_mu_closed(s), oracle::kPi / 3, 1e-15);
  EXPECT_NEAR(tl::angle_at_mu1_closed(s), oracle::kPi / 3, 1e-15);
}

TEST(SigmaPrescribed, ExtremalGermsFollowTheQuadraticForms) {
  for (double kv : kGridK) {
    const tl::Modulus k(kv);
    const double d0 = (1 - kv * kv) / kv;
    const auto s0 = tl::sigma_prescribed(d0, 0.0, k);
    for (double t : {1e-4, 1e-3}) {
      EXPECT_NEAR(s0(t), 1 + d0 * t - (1 - kv * kv) * t * t, 1e-14);
    }
    EXPECT_NEAR(tl::angle_at_mu_closed(s0), oracle::kPi, 1e-7);

    const auto sk = tl::sigma_prescribed(0.0, -1 / kv, k);
    for (double t : {kv - 1e-4, kv - 1e-3}) {
      const double s = t - kv;
      EXPECT_NEAR(sk(t), 1 - s / kv - 2 * s * s / (1 - kv * kv), 1e-14);
    }
    EXPECT_NEAR(tl::angle_at_mu1_closed(sk), oracle::kPi, 1e-7);
  }
}

TEST(SigmaPrescribed, OracleGridIsAdmissibleGeodesicAndDistinct) {
  for (double kv : kGridK) {
    const tl::Modulus k(kv);
    for (double f0 : kGridFrac) {
      for (double fk : kGridFrac) {
        const auto s = tl::sigma_prescribed(f0 * (1 - kv * kv) / kv, fk / kv, k);
        const auto v = tl::validate_sigma(s);
        EXPECT_TRUE(v.distinct()) << kv << " " << f0 << " " << fk;
        EXPECT_TRUE(v.geodesic) << kv << " " << f0 << " " << fk;
        EXPECT_DOUBLE_EQ(s(0.0), 1.0);
        EXPECT_NEAR(s(kv), 1.0, 1e-14);
      }
    }
  }
}

TEST(SigmaPrescribed, RejectsDerivativesBeyondTheBounds) {
  const tl::Modulus k(0.5);
  EXPECT_THROW(tl::sigma_prescribed(1.6, 0.0, k), tl::InputError);
  EXPECT_THROW(tl::sigma_prescribed(0.0, -2.1, k), tl::InputError);
  EXPECT_THROW(tl::sigma_prescribed(std::nan(""), 0.0, k), tl::InputError);
  // Within the snap tolerance the bound itself is used.
  EXPECT_EQ(*tl::sigma_prescribed(1.5 * (1 + 1e-13), 0.0, k).d0(), 1.5);
}

TEST(SigmaPrescribed, SeedsChangeOnlyTheInterior) {
  const tl::Modulus k(0.5);
  const auto a = tl::sigma_prescribed(0.5, 0.5, k, {.seed = 1});
  const auto b = tl::sigma_prescribed(0.5, 0.5, k, {.seed = 2});
  EXPECT_EQ(a(0.01), b(0.01));
  EXPECT_EQ(a(0.495), b(0.495));
  EXPECT_GT(std::abs(a(0.25) - b(0.25)), 1e-6);
}

TEST(SigmaPrescribed, ReportsConstructionFailure) {
  tl::GermOptions opts;
  opts.max_shrinks = 0;
  opts.amplitude = 50.0;
  opts.seed = 3;
  EXPECT_THROW(tl::sigma_prescribed(0.0, 0.0, tl::Modulus(0.5), opts), tl::ConstructionError);
}

TEST(SigmaOscillatory, DifferenceQuotientOscillates) {
  const double kv = 0.5;
  const auto s = tl::sigma_oscillatory(tl::Modulus(kv));
  const double amp = (1 - kv * kv) / (2 * kv);
  for (int j = 20; j < 25; ++j) {
    const double zero = 1.0 / (j * oracle::kPi);
    const double peak = 1.0 / ((j + 0.5) * oracle::kPi);
    EXPECT_NEAR((s(zero) - 1) / zero, 0.0, 1e-12);
    EXPECT_NEAR((s(peak) - 1) / peak, amp, 1e-12);
  }
  const auto v = tl::validate_sigma(s);
  EXPECT_TRUE(v.admissible());
  EXPECT_FALSE(v.geodesic);
  EXPECT_FALSE(s.d0().has_value());
  EXPECT_THROW(tl::angle_at_mu_closed(s), tl::ExistenceUnknownError);
}

TEST(SigmaMidpointPinned, HitsThePinAtTheMidpoint) {
  const tl::Modulus k(0.5);
  EXPECT_NEAR(tl::midpoint_param(k), oracle::frozen::t0_half, 1e-15);
  EXPECT_NEAR(tl::midpoint_sigma_value(k), oracle::frozen::sigma_t0_half, 1e-15);
  const auto s = tl::sigma_midpoint_pinned(k);
  EXPECT_NEAR(s(oracle::frozen::t0_half), oracle::frozen::sigma_t0_half, 1e-14);
  EXPECT_EQ(s(0.0), 1.0);
  EXPECT_NEAR(s(0.5), 1.0, 1e-15);
}

TEST(SigmaMidpointPinned, PinLiesOnTheUpperBoundForEveryK) {
  for (int i = 1; i <= 9; ++i) {
    const double kv = 0.1 * i;
    const tl::Modulus k(kv);
    const double t0 = tl::midpoint_param(k);
    EXPECT_NEAR(tl::midpoint_sigma_value(k), (kv + t0) / (kv * (1 + kv * t0)), 1e-12) << kv;
    const auto v = tl::validate_sigma(tl::sigma_midpoint_pinned(k));
    EXPECT_TRUE(v.admissible());
    EXPECT_TRUE(v.geodesic);
    // The profile runs along the bounds, so it is not strictly below them.
    EXPECT_FALSE(v.strict_near_zero);
  }
}

TEST(DerivativeProbe, MatchesDeclaredSlopes) {
  const double kv = 0.5;
  const tl::Modulus k(kv);
  const double d0 = 0.3 * (1 - kv * kv) / kv;
  const auto s = tl::sigma_prescribed(d0, -0.4 / kv, k);
  const auto p0 = tl::derivative_probe(s, tl::SigmaEnd::kZero);
  EXPECT_EQ(p0.verdict, tl::Verdict::kExists);
  EXPECT_NEAR(p0.estimate, d0, 1e-5);
  const auto pk = tl::derivative_probe(s, tl::SigmaEnd::kK);
  EXPECT_EQ(pk.verdict, tl::Verdict::kExists);
  EXPECT_NEAR(pk.estimate, -0.4 / kv, 1e-5);

  const auto one = tl::sigma_constant_one(k);
  EXPECT_EQ(tl::derivative_probe(one, tl::SigmaEnd::kZero).estimate, 0.0);
  EXPECT_EQ(tl::derivative_probe(one, tl::SigmaEnd::kK).estimate, 0.0);
}

TEST(DerivativeProbe, FlagsOscillation) {
  const auto s = tl::sigma_oscillatory(tl::Modulus(0.5));
  EXPECT_EQ(tl::derivative_probe(s, tl::SigmaEnd::kZero).verdict, tl::Verdict::kDoesNotExist);
}
