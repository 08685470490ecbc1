#include <gtest/gtest.h>

#include <cmath>

#include "extremal/angular.hpp"
#include "extremal/errors.hpp"
#include "extremal/limits.hpp"
#include "extremal/model.hpp"
#include "extremal/samplers.hpp"

using namespace extremal;

namespace {

const double kGrid[] = {0.25, 0.5, 1.0, 2.0, 5.0};

}  // namespace

TEST(Angular, NormalizationExamples) {
  EXPECT_LT(normalization_defect(uniform2_angular()), 1e-8);
  EXPECT_LT(normalization_defect(inv1mw_angular()), 1e-8);
  EXPECT_LT(normalization_defect(ex51iii_angular()), 1e-8);
  EXPECT_LT(normalization_defect(ex51iv_angular()), 1e-15);
  EXPECT_NEAR(normalization_defect(ex51iii_angular().continuous_part()), 0.5, 1e-6);
}

TEST(Angular, StatedAtomBreaksBalance) {
  // With the atom at 1/2 weighted 2 - sqrt(3) the measure is not normalised.
  EXPECT_NEAR(normalization_defect(ex51iii_angular(2 - std::sqrt(3.0))), 0.5 * std::sqrt(3.0) - 0.5, 1e-6);
}

TEST(Angular, NormalizationDivergence) {
  AngularMeasure bad({}, [](double w) { return 1 / ((1 - w) * (1 - w)); }, 0.0, 1.0, false, "bad");
  EXPECT_THROW(normalization_defect(bad), DivergentIntegral);
}

TEST(Angular, AltFormUniform) {
  for (double x : kGrid)
    for (double y : kGrid) EXPECT_NEAR(mu_from_S(uniform2_angular(), x, y), x / (y * (x + y)), 1e-8);
}

TEST(Angular, AltFormInverse) {
  for (double x : kGrid)
    for (double y : kGrid)
      EXPECT_NEAR(mu_from_S(inv1mw_angular(), x, y), 1 / y + std::log(1 - x / (x + y)) / x, 1e-8);
}

TEST(Angular, AtomMatchesDiagonal) {
  TailMeasure diag = make_measure(make_diagonal(1), ConeId::UpperStrip);
  for (double x : kGrid)
    for (double y : kGrid)
      EXPECT_NEAR(mu_from_S(ex51iv_angular(), x, y), diag.eval(ConeRect::upper(x, y)), 1e-14);
}

TEST(Angular, TwoRoutesAgree) {
  for (const char* name : {"uniform2", "inv1mw", "ex51iii", "ex51iv", "ex53:uniform", "ex53:point:1"}) {
    AngularMeasure s = angular_from_name(name);
    TailMeasure m = measure_from_angular(s, ConeId::UpperStrip);
    for (double x : kGrid)
      for (double y : kGrid) EXPECT_NEAR(mu_from_S(s, x, y), m.eval(ConeRect::upper(x, y)), 1e-8) << name;
  }
}

TEST(Angular, HStar) {
  for (double x : {0.5, 1.0, 2.0, 10.0}) EXPECT_NEAR(h_star(uniform2_angular(), x), 1 - 1 / (1 + x), 1e-10);
  EXPECT_NEAR(h_star(inv1mw_angular(), 2.0), 1 - std::log(3.0) / 2, 1e-8);
  EXPECT_THROW(h_star(ex51iii_angular().continuous_part(), 1.0), PreconditionError);
}

TEST(Angular, DensityRecoveredByDifferencing) {
  // x^2 d/dx mu(x, 1) = int_0^p w S(dw) =: G(p), so the density is G'(p)/p.
  for (const char* name : {"uniform2", "inv1mw"}) {
    AngularMeasure s = angular_from_name(name);
    auto big_g = [&](double p) {
      double x = p / (1 - p), h = 1e-4 * x;
      return x * x * (mu_from_S(s, x + h, 1) - mu_from_S(s, x - h, 1)) / (2 * h);
    };
    for (double p : {0.2, 0.4, 0.6, 0.8}) {
      double hp = 1e-3;
      double dens = (big_g(p + hp) - big_g(p - hp)) / (2 * hp) / p;
      EXPECT_NEAR(dens, s.density(p), 1e-4) << name << " at " << p;
    }
  }
}

TEST(Angular, PolarExamples) {
  Polar p = polar({1, 1});
  EXPECT_DOUBLE_EQ(p.r, 2.0);
  EXPECT_DOUBLE_EQ(p.theta, 0.5);
  EXPECT_DOUBLE_EQ(polar({0, 3}).theta, 0.0);
  EXPECT_DOUBLE_EQ(polar({3, 0}).theta, 1.0);
  EXPECT_THROW(polar({0, 0}), PreconditionError);
  for (double x : kGrid)
    for (double y : kGrid) {
      Polar q = polar({x, y});
      Point back = unpolar(q.r, q.theta);
      EXPECT_NEAR(back.x, x, 1e-14 * (x + y));
      EXPECT_NEAR(back.y, y, 1e-14 * (x + y));
    }
}

TEST(Angular, InfiniteMeasure) {
  AngularMeasure s = inv1mw_angular();
  EXPECT_FALSE(s.finite_total());
  EXPECT_THROW(s.total(), DivergentIntegral);
  EXPECT_NEAR(s.mass(0.0, 0.9), std::log(10.0), 1e-10);
}

TEST(Angular, EmpiricalEx53Uniform) {
  SampleBatch b = sample(make_ex53(uniform_distribution(), 4), 1000000);
  AngularEstimate e = S_from_mu_empirical(b, 1000, 0.5);
  EXPECT_NEAR(e.value, 1.5, std::max(0.05, 4 * e.stderr_));
}

TEST(Angular, EmpiricalUniform2) {
  SampleBatch b = sample(make_from_angular(uniform2_angular(), 4), 1000000);
  AngularEstimate e = S_from_mu_empirical(b, 1000, 0.5);
  EXPECT_NEAR(e.value, 1.0, std::max(0.05, 4 * e.stderr_));
}

TEST(Angular, EmpiricalRightStripStandardised) {
  // The standardised right-strip pair (X, sqrt Y) of the Ex51 model has its
  // mass on the horizontal axis: X and sqrt Y = min(X, Z) are both of order t
  // only when Z is, which costs a factor 1/t. The window [0, 0.6] is empty in
  // the limit, whereas a diagonal atom of mass 2 would put 2 there.
  ModelSpec m = make_ex51(9);
  SampleBatch b = apply_map(prelimit_map(m, ConeId::RightStrip, Form::Standard), sample(m, 1000000));
  AngularEstimate e = S_from_mu_empirical(b, 1000, 0.6);
  EXPECT_LT(e.value, 0.1);
}

TEST(Angular, KOutOfRange) {
  SampleBatch b = sample(make_diagonal(1), 1000);
  EXPECT_THROW(S_from_mu_empirical(b, 5, 0.5), PreconditionError);
  EXPECT_THROW(S_from_mu_empirical(b, 500, 0.5), PreconditionError);
}
