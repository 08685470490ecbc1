#pragma once

#include <cstdint>

namespace extremal {

// Counter-based generator: draw i of a stream is a pure function of
// (seed, stream, i), so any chunk of a batch can be generated independently
// and concatenated in index order with bit-identical results.
//
// bits(i) = splitmix64(key + (i + 1) * golden), key = splitmix64(seed ^ splitmix64(stream)).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t bits(std::uint64_t counter) const noexcept;
  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform(std::uint64_t counter) const noexcept;

  static std::uint64_t mix(std::uint64_t z) noexcept;

 private:
  std::uint64_t key_;
};

// Stream ids used by the samplers.
namespace stream {
inline constexpr std::uint64_t kX = 1;
inline constexpr std::uint64_t kZ = 2;
inline constexpr std::uint64_t kXi = 3;
inline constexpr std::uint64_t kTheta = 4;
inline constexpr std::uint64_t kRadius = 5;
inline constexpr std::uint64_t kBootstrap = 6;
}  // namespace stream

}  // namespace extremal
