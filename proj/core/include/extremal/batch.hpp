#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

// Bivariate draws. `model` records the generating ModelSpec name and `seed`
// its seed so a batch can always be regenerated.
struct SampleBatch {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string model;
  std::uint64_t seed = 0;

  std::size_t n() const noexcept { return xs.size(); }
};

}  // namespace extremal
