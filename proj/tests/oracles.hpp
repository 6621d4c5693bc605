// Test-only reference implementations. Everything here is brute force or
// otherwise independent of the library's solution paths, so tests can pin
// expected values without trusting the code under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sparsum/core.hpp"
#include "sparsum/rng.hpp"

namespace sparsum::testing {

// Exhaustive minimizer of ||eta - b||^2 over the feasible set, by
// enumerating every disjoint (positive, negative) support pair with
// |P| >= 1 and |P| + |N| <= k. For each pair the objective is a quadratic
// in the negative-mass level z; its minimizer over [0, s] is the clamped
// vertex. Sign-inconsistent points are discarded. Viable for m <= ~10.
struct BruteForceResult {
  double objective = std::numeric_limits<double>::infinity();
  Vector beta;
};

inline BruteForceResult brute_force_orthogonal(const Vector& eta,
                                               const ConstraintSpec& spec) {
  const int m = static_cast<int>(eta.size());
  const int k = std::min(spec.k, m);
  const double s = spec.s;
  BruteForceResult best;
  best.beta = Vector::Zero(m);

  std::vector<int> assign(m, 0);  // 0 = out, 1 = positive, 2 = negative
  const long total = static_cast<long>(std::pow(3.0, m) + 0.5);
  for (long code = 0; code < total; ++code) {
    long c = code;
    int p = 0, n = 0;
    double sum_p = 0.0, sum_n = 0.0;
    for (int i = 0; i < m; ++i) {
      assign[i] = static_cast<int>(c % 3);
      c /= 3;
      if (assign[i] == 1) {
        ++p;
        sum_p += eta[i];
      } else if (assign[i] == 2) {
        ++n;
        sum_n += eta[i];
      }
    }
    if (p < 1 || p + n > k) continue;

    double z = 0.0;
    if (n > 0) {
      const double vertex = (n * (sum_p - 1.0) - p * sum_n) / (p + n);
      z = std::clamp(vertex, 0.0, s);
    }
    const double shift_p = (sum_p - 1.0 - z) / p;
    const double shift_n = (n > 0) ? (sum_n + z) / n : 0.0;

    bool ok = true;
    double q = 0.0;
    for (int i = 0; i < m && ok; ++i) {
      double b = 0.0;
      if (assign[i] == 1) {
        b = eta[i] - shift_p;
        if (b < -1e-12) ok = false;
      } else if (assign[i] == 2) {
        b = eta[i] - shift_n;
        if (b > 1e-12) ok = false;
      }
      const double r = eta[i] - b;
      q += r * r;
    }
    if (!ok || q >= best.objective) continue;

    best.objective = q;
    for (int i = 0; i < m; ++i) {
      if (assign[i] == 1)
        best.beta[i] = eta[i] - shift_p;
      else if (assign[i] == 2)
        best.beta[i] = eta[i] - shift_n;
      else
        best.beta[i] = 0.0;
    }
  }
  return best;
}

inline Vector random_normal_vector(RngStream& rng, int m) {
  Vector v(m);
  for (int i = 0; i < m; ++i) v[i] = rng.normal();
  return v;
}

inline Matrix random_normal_matrix(RngStream& rng, int rows, int cols) {
  Matrix x(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) x(i, j) = rng.normal();
  return x;
}

}  // namespace sparsum::testing
