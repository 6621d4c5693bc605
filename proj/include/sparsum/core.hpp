/**
 * @file core.hpp
 * @brief Problem and solution types shared by all solvers.
 *
 * The problem throughout is least squares under a unit-sum constraint,
 * a cardinality cap and an l1 budget:
 *
 *   min ||y - X b||^2   s.t.  sum(b) = 1,  ||b||_0 <= k,  ||b||_1 <= 1 + 2s.
 *
 * Under sum(b) = 1 the l1 budget is equivalent to capping the total
 * negative mass of b at s.
 */

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace sparsum {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Weight vector subject to the unit-sum constraint.
using Weights = Eigen::VectorXd;

/// Entries at or below this magnitude count as zero for ||b||_0.
inline constexpr double kZeroThreshold = 1e-9;

/// Default feasibility tolerance.
inline constexpr double kFeasibilityTol = 1e-8;

/// The pair (k, s) defining the feasible set.
struct ConstraintSpec {
  int k = 1;       ///< maximum number of nonzero weights, k >= 1
  double s = 0.0;  ///< bound on the sum of negative weights, s >= 0

  /// The induced l1 budget, exactly 1 + 2s.
  double l1_budget() const { return 1.0 + 2.0 * s; }

  void validate() const {
    if (k < 1) throw std::invalid_argument("ConstraintSpec: k must be >= 1");
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::invalid_argument("ConstraintSpec: s must be finite and >= 0");
  }
};

/// Design matrix and response for one regression instance.
struct RegressionData {
  Matrix X;  ///< t x m design
  Vector y;  ///< length-t response

  Eigen::Index num_obs() const { return X.rows(); }
  Eigen::Index num_vars() const { return X.cols(); }

  void validate() const {
    if (X.rows() < 1 || X.cols() < 1)
      throw std::invalid_argument("RegressionData: X must be nonempty");
    if (y.size() != X.rows())
      throw std::invalid_argument("RegressionData: y length " +
                                  std::to_string(y.size()) +
                                  " does not match X rows " +
                                  std::to_string(X.rows()));
  }
};

enum class SolveStatus { Optimal, Heuristic, IterationLimit, TimeLimit };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Heuristic: return "Heuristic";
    case SolveStatus::IterationLimit: return "IterationLimit";
    case SolveStatus::TimeLimit: return "TimeLimit";
  }
  return "Unknown";
}

/// Outcome of a solve: objective is always ||y - X b||^2.
struct SolveReport {
  double objective = 0.0;
  SolveStatus status = SolveStatus::Heuristic;
  std::optional<double> gap;  ///< absolute optimality gap, present when certified
  long iterations = 0;
  double elapsed_seconds = 0.0;
};

/// Squared-error objective ||y - X b||^2.
inline double objective(const RegressionData& data, const Weights& w) {
  data.validate();
  if (w.size() != data.X.cols())
    throw std::invalid_argument("objective: weight length " +
                                std::to_string(w.size()) +
                                " does not match X cols " +
                                std::to_string(data.X.cols()));
  return (data.y - data.X * w).squaredNorm();
}

/// Magnitude of the total short mass, -sum over negative entries.
inline double negative_sum(const Weights& w) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] < 0.0) total -= w[i];
  return total;
}

inline int count_nonzeros(const Weights& w, double zero_tol = kZeroThreshold) {
  int nnz = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (std::abs(w[i]) > zero_tol) ++nnz;
  return nnz;
}

/// True iff w satisfies the unit sum, cardinality and l1 constraints
/// within tol (cardinality uses the fixed kZeroThreshold).
inline bool is_feasible(const Weights& w, const ConstraintSpec& spec,
                        double tol = kFeasibilityTol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_feasible: tol must be > 0");
  spec.validate();
  if (std::abs(w.sum() - 1.0) > tol) return false;
  if (count_nonzeros(w) > spec.k) return false;
  if (w.lpNorm<1>() > spec.l1_budget() + tol) return false;
  return true;
}

}  // namespace sparsum
