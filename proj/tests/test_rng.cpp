#include "sparsum/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace sparsum {
namespace {

// Reference outputs from an independent Philox4x64-10 implementation
// (numpy.random.Philox with the same key, counter starting at zero).
TEST(Philox, KnownAnswerVectors) {
  {
    Philox4x64 eng(0, 0);
    const std::uint64_t expected[8] = {
        0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL,
        0x907d7a052fd5b4dcULL, 0x809bf322883987c3ULL, 0x471128b9e807f7ddULL,
        0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
    for (std::uint64_t e : expected) EXPECT_EQ(eng.next(), e);
  }
  {
    Philox4x64 eng(42, 7);
    const std::uint64_t expected[8] = {
        0xa64064f34e84b9a3ULL, 0xe287959a866a08fdULL, 0x8dc181f009b96c03ULL,
        0xf3f6001d4fa83454ULL, 0x69c633ee791df6b3ULL, 0x89327f7a8f0127a4ULL,
        0x1ed8260458996ff6ULL, 0x4299f7433fb1683eULL};
    for (std::uint64_t e : expected) EXPECT_EQ(eng.next(), e);
  }
  {
    Philox4x64 eng(0xDEADBEEFULL, 0x12345678ULL);
    const std::uint64_t expected[4] = {
        0x3d1c495a41eeb326ULL, 0xdcedb98424497b4eULL, 0xacae59a90b703e83ULL,
        0x0d4e4aeb7df73661ULL};
    for (std::uint64_t e : expected) EXPECT_EQ(eng.next(), e);
  }
}

TEST(RngStream, StreamsAreDeterministicAndDistinct) {
  RngStream a1(123, 4), a2(123, 4), b(123, 5);
  bool any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = a1.next_u64();
    EXPECT_EQ(x, a2.next_u64());
    if (x != b.next_u64()) any_diff = true;
  }
  EXPECT_TRUE(any_diff);
}

TEST(RngStream, UniformInHalfOpenUnitInterval) {
  RngStream rng(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    EXPECT_GT(u, 0.0);
    EXPECT_LE(u, 1.0);
  }
}

TEST(RngStream, NormalMomentsAreSane) {
  RngStream rng(2, 0);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(var, 1.0, 0.02);
}

TEST(RngStream, NextBelowStaysInRange) {
  RngStream rng(3, 0);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const std::uint64_t v = rng.next_below(7);
    ASSERT_LT(v, 7u);
    ++counts[static_cast<int>(v)];
  }
  for (int c : counts) EXPECT_GT(c, 800);  // roughly uniform
  EXPECT_THROW(rng.next_below(0), std::invalid_argument);
}

}  // namespace
}  // namespace sparsum
