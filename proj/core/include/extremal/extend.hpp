#pragma once

#include <string>
#include <vector>

#include "extremal/angular.hpp"
#include "extremal/batch.hpp"
#include "extremal/cones.hpp"
#include "extremal/distribution.hpp"
#include "extremal/measure.hpp"
#include "extremal/model.hpp"
#include "extremal/standardize.hpp"

namespace extremal {

enum class RatioClass { Zero, Finite, Infinite };

struct ExtensionClass {
  RatioClass kind = RatioClass::Finite;
  double limit = 0.0;  // M for Finite, 0 or inf otherwise
  double slope = 0.0;  // d log(chi/alpha) / d log log t over the last decades
};

std::string to_string(RatioClass c);

// Limit class of chi.scale(t) / alpha.scale(t). The trend of the log ratio
// against log log t separates zero (slope < -0.5), infinite (slope > 0.5) and
// finite; a finite class must also settle to within 1% over the last decade.
ExtensionClass extension_condition(const NormFns& chi, const NormFns& alpha,
                                   const std::vector<double>& t_grid);
ExtensionClass extension_condition(const NormFns& chi, const NormFns& alpha);

struct Extension {
  ModelSpec model;
  TailMeasure measure;  // on the full cone
};

// Sampler and full-cone limit built from a finite angular measure.
// DivergentIntegral for infinite S: such an S has no full-cone extension.
Extension mevt_extension(const AngularMeasure& s, std::uint64_t seed = 0);

struct EquivalenceResult {
  double c_hat = 0.0;
  double cv = 0.0;  // coefficient of variation of the per-rect ratios
  bool pass = false;
  std::vector<double> ratios;
  std::vector<std::string> warnings;
};

// Ratios est1(r)/est2(r) over rects with Scaling s; pass iff cv <= cv_tol.
EquivalenceResult tail_equivalence_check(const SampleBatch& b1, const SampleBatch& b2,
                                         const std::vector<ConeRect>& rects, std::size_t k,
                                         Scaling s = {}, double cv_tol = 0.1);

// Whether int (1 + s) G(ds) < inf: increments of int_0^T (1 - G) over the
// decades T = 10^j must shrink geometrically.
bool angular_finiteness(const Distribution& g);

}  // namespace extremal
