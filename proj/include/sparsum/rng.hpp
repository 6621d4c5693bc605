/**
 * @file rng.hpp
 * @brief Counter-based random number generation (Philox4x64-10).
 *
 * Each (seed, stream) pair names an independent, reproducible stream:
 * the pair forms the Philox key and the block counter starts at zero.
 * Streams derived from the same seed can be handed to concurrent workers
 * without any coordination, and the draw sequence of a stream does not
 * depend on how many other streams exist.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace sparsum {

/// Philox4x64 with 10 rounds. Produces blocks of four 64-bit words.
class Philox4x64 {
 public:
  Philox4x64(std::uint64_t key0, std::uint64_t key1) : key_{key0, key1} {}

  std::uint64_t next() {
    if (pos_ == 4) {
      generate_block();
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

 private:
  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
  }

  void generate_block() {
    std::array<std::uint64_t, 4> x = counter_;
    std::uint64_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kMul0, x[0], hi0, lo0);
      mulhilo(kMul1, x[2], hi1, lo1);
      x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    buffer_ = x;
    for (int i = 0; i < 4; ++i)
      if (++counter_[i] != 0) break;  // 256-bit little-endian increment
  }

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buffer_{};
  int pos_ = 4;
};

/// One named stream of uniforms/normals over a Philox engine.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) : engine_(seed, stream) {}

  std::uint64_t next_u64() { return engine_.next(); }

  /// Uniform on (0, 1]; never returns 0 so logs are safe.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  /// Standard normal via Box-Muller (second value of each pair is cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Unbiased integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    unsigned __int128 prod = static_cast<unsigned __int128>(next_u64()) * n;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        prod = static_cast<unsigned __int128>(next_u64()) * n;
        low = static_cast<std::uint64_t>(prod);
      }
    }
    return static_cast<std::uint64_t>(prod >> 64);
  }

 private:
  Philox4x64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sparsum
