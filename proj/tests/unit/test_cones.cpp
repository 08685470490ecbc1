#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "extremal/angular.hpp"
#include "extremal/cones.hpp"
#include "extremal/errors.hpp"
#include "extremal/estimate.hpp"
#include "extremal/glue.hpp"
#include "extremal/limits.hpp"
#include "extremal/model.hpp"
#include "extremal/samplers.hpp"

using namespace extremal;

namespace {

const std::vector<double> kCoords = {0.0, 1e-300, 0.5, 1.0, 3.0, 1e300, kInf};

}  // namespace

TEST(Cones, MembershipExamples) {
  EXPECT_TRUE(contains(ConeId::Full, {0.0, 1.0}));
  EXPECT_FALSE(contains(ConeId::Full, {0.0, 0.0}));
  EXPECT_FALSE(contains(ConeId::Interior, {0.0, 1.0}));
  EXPECT_TRUE(contains(ConeId::UpperStrip, {0.0, 1.0}));
  EXPECT_FALSE(contains(ConeId::UpperStrip, {1.0, 0.0}));
  EXPECT_TRUE(contains(ConeId::RightStrip, {1.0, 0.0}));
  EXPECT_TRUE(contains(ConeId::Interior, {kInf, kInf}));
}

TEST(Cones, LatticeIdentities) {
  for (double x : kCoords)
    for (double y : kCoords) {
      Point p{x, y};
      bool up = contains(ConeId::UpperStrip, p), right = contains(ConeId::RightStrip, p);
      EXPECT_EQ(contains(ConeId::Interior, p), up && right) << x << "," << y;
      EXPECT_EQ(contains(ConeId::Full, p), up || right) << x << "," << y;
    }
}

TEST(Cones, DistanceExamples) {
  EXPECT_DOUBLE_EQ(rect_distance_to_origin(ConeRect::upper(2, 3)), 3.0);
  EXPECT_DOUBLE_EQ(rect_distance_to_origin(ConeRect::joint(3, 4)), 5.0);
  EXPECT_DOUBLE_EQ(rect_distance_to_origin(ConeRect::right(2, 3)), 2.0);
  EXPECT_DOUBLE_EQ(rect_distance_to_origin(ConeRect::compl_rect(2, 3)), 2.0);
  EXPECT_THROW(rect_distance_to_origin(ConeRect::compl_rect(0, 2)), PreconditionError);
}

TEST(Cones, RejectsDegenerateRects) {
  EXPECT_THROW(ConeRect::upper(1.0, 0.0), PreconditionError);
  EXPECT_THROW(ConeRect::right(0.0, 1.0), PreconditionError);
  EXPECT_THROW(ConeRect::joint(-1.0, 1.0), PreconditionError);
}

TEST(Cones, RelativeCompactness) {
  EXPECT_TRUE(rect_in_cone(ConeRect::upper(2, 1), ConeId::UpperStrip));
  EXPECT_FALSE(rect_in_cone(ConeRect::upper(2, 1), ConeId::Interior));
  EXPECT_FALSE(rect_in_cone(ConeRect::right(2, 1), ConeId::UpperStrip));
  EXPECT_TRUE(rect_in_cone(ConeRect::joint(2, 1), ConeId::Interior));
  EXPECT_TRUE(rect_in_cone(ConeRect::compl_rect(2, 1), ConeId::Full));
  EXPECT_FALSE(rect_in_cone(ConeRect::compl_rect(2, 1), ConeId::UpperStrip));
}

TEST(Cones, ScalePreservesKind) {
  for (RectKind k : {RectKind::UpperRect, RectKind::RightRect, RectKind::JointExceed, RectKind::ComplRect}) {
    ConeRect r = scale(2.5, ConeRect::make(k, 1.0, 2.0));
    EXPECT_EQ(r.kind(), k);
    EXPECT_DOUBLE_EQ(r.x(), 2.5);
    EXPECT_DOUBLE_EQ(r.y(), 5.0);
  }
}

TEST(Cones, BoxesPartitionRect) {
  for (RectKind k : {RectKind::UpperRect, RectKind::RightRect, RectKind::JointExceed, RectKind::ComplRect}) {
    ConeRect r = ConeRect::make(k, 1.5, 2.0);
    std::vector<Box> boxes = boxes_of(r);
    for (double x : {0.0, 1.0, 1.5, 1.6, 5.0, kInf})
      for (double y : {0.0, 1.0, 2.0, 2.1, 7.0, kInf}) {
        int hits = 0;
        for (const Box& b : boxes) hits += b.contains({x, y});
        EXPECT_EQ(hits, r.contains({x, y}) ? 1 : 0) << r.describe() << " at " << x << "," << y;
      }
  }
}

TEST(Glue, DiagonalComplRect) {
  ModelSpec m = make_diagonal(1);
  TailMeasure mu = make_measure(m, ConeId::UpperStrip), nu = make_measure(m, ConeId::RightStrip);
  EXPECT_NEAR(glue(mu, nu, ConeRect::compl_rect(2, 3), 0.1), 0.5, 1e-15);
}

TEST(Glue, EpsilonInvariance) {
  ModelSpec m = make_diagonal(1);
  TailMeasure mu = make_measure(m, ConeId::UpperStrip), nu = make_measure(m, ConeId::RightStrip);
  for (double x : {1.0, 2.0, 4.0})
    for (double y : {1.0, 3.0}) {
      ConeRect r = ConeRect::compl_rect(x, y);
      EXPECT_LE(std::abs(glue(mu, nu, r, 0.1) - glue(mu, nu, r, 0.05)), 1e-12);
    }
}

TEST(Glue, EpsilonTooLargeRejected) {
  ModelSpec m = make_diagonal(1);
  TailMeasure mu = make_measure(m, ConeId::UpperStrip), nu = make_measure(m, ConeId::RightStrip);
  EXPECT_THROW(glue(mu, nu, ConeRect::compl_rect(1, 1), 0.8), PreconditionError);
}

TEST(Glue, RestrictionsReproduceInputs) {
  AngularMeasure s = uniform2_angular();
  TailMeasure mu = measure_from_angular(s, ConeId::UpperStrip);
  TailMeasure nu = measure_from_angular(s, ConeId::RightStrip);
  for (double x : {0.5, 1.0, 2.0})
    for (double y : {0.5, 1.0, 2.0}) {
      EXPECT_NEAR(glue(mu, nu, ConeRect::upper(x, y), 0.1), mu.eval(ConeRect::upper(x, y)), 1e-12);
      EXPECT_NEAR(glue(mu, nu, ConeRect::right(x, y), 0.1), nu.eval(ConeRect::right(x, y)), 1e-12);
      EXPECT_NEAR(glue(mu, nu, ConeRect::joint(x, y), 0.1), mu.eval(ConeRect::joint(x, y)), 1e-12);
      EXPECT_NEAR(glue(mu, nu, ConeRect::joint(x, y), 0.1), nu.eval(ConeRect::joint(x, y)), 1e-12);
    }
}

TEST(Glue, Additivity) {
  AngularMeasure s = uniform2_angular();
  TailMeasure mu = measure_from_angular(s, ConeId::UpperStrip);
  TailMeasure nu = measure_from_angular(s, ConeId::RightStrip);
  for (double x : {0.5, 1.0, 2.0})
    for (double y : {0.5, 2.0}) {
      double whole = glue(mu, nu, ConeRect::compl_rect(x, y), 0.1);
      double parts = glue(mu, nu, ConeRect::upper(x, y), 0.1) + glue(mu, nu, ConeRect::right(x, kInf), 0.1);
      EXPECT_NEAR(whole, parts, 1e-12);
    }
}

TEST(Glue, InconsistentPairRaises) {
  ModelSpec m = make_ex51(1);
  TailMeasure mu = make_measure(m, ConeId::UpperStrip, Form::Standard);
  TailMeasure nu = make_measure(m, ConeId::RightStrip, Form::Standard);
  try {
    glue(mu, nu, ConeRect::compl_rect(1, 1), 0.1);
    FAIL() << "expected InconsistentMeasures";
  } catch (const InconsistentMeasures& e) {
    EXPECT_GT(e.max_discrepancy(), 0.1);
  }
}

TEST(Glue, ConsistencyOfIdenticalMeasures) {
  ModelSpec m = make_diagonal(1);
  TailMeasure mu = make_measure(m, ConeId::UpperStrip);
  ConsistencyReport rep = consistency_check(mu, mu, default_consistency_grid(), 1e-12);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.max_defect, 0.0);
  EXPECT_EQ(rep.defects.size(), 16u);
}

TEST(Glue, GluedMeasureDiagonal) {
  ModelSpec m = make_diagonal(1);
  TailMeasure full = glued_measure(make_measure(m, ConeId::UpperStrip), make_measure(m, ConeId::RightStrip));
  EXPECT_EQ(full.cone(), ConeId::Full);
  for (double x : {1.0, 2.0, 4.0})
    for (double y : {1.0, 3.0}) EXPECT_NEAR(full.eval(ConeRect::compl_rect(x, y)), 1.0 / std::min(x, y), 1e-12);
}

TEST(Glue, UniformAngularMatchesMonteCarlo) {
  AngularMeasure s = uniform2_angular();
  TailMeasure mu = measure_from_angular(s, ConeId::UpperStrip);
  TailMeasure nu = measure_from_angular(s, ConeId::RightStrip);
  SampleBatch b = sample(make_from_angular(s, 21), 1000000);
  for (double x : {1.0, 2.0, 4.0})
    for (double y : {1.0, 2.0, 4.0}) {
      ConeRect r = ConeRect::compl_rect(x, y);
      TailEstimate e = tail_measure_estimate(b, 1000, Scaling{1, 1}, r);
      EXPECT_NEAR(e.value, glue(mu, nu, r, 0.1), std::max(0.03, 4 * e.stderr_)) << r.describe();
    }
}
