#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace arlim {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent seed from a master seed and two indices.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

/// Counter-based random stream keyed by (seed, stream id).
///
/// Output word k of stream (seed, id) is a pure function of (seed, id, k), so
/// any replication can be regenerated in isolation and in any order. Satisfies
/// UniformRandomBitGenerator.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(std::uint64_t seed, std::uint64_t stream_id = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform();

  /// Standard normal draw.
  double normal();

  /// Normal draw with the given standard deviation.
  double normal(double sd) { return sd * normal(); }

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int next_ = 2;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace arlim
