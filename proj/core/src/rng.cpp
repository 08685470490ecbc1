#include "extremal/rng.hpp"

namespace extremal {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix(seed ^ mix(stream + kGolden))) {}

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
  return mix(key_ + (counter + 1) * kGolden);
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace extremal
