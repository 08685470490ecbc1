#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "extremal/batch.hpp"
#include "extremal/model.hpp"

namespace extremal {

// u^{-1/a}; PreconditionError unless 0 < u < 1 and a > 0.
double pareto_inverse(double u, double a);

// Draws [begin, end) of the model's sequence. Draw i only depends on
// (seed, i), so sample_range(m, 0, a) followed by sample_range(m, a, n)
// concatenates to sample(m, n) bit for bit.
SampleBatch sample_range(const ModelSpec& model, std::size_t begin, std::size_t end);
SampleBatch sample(const ModelSpec& model, std::size_t n);

// Header "x,y" then one row per draw with 17 significant digits.
void write_csv(const SampleBatch& b, std::ostream& out);
SampleBatch read_csv(std::istream& in);

}  // namespace extremal
