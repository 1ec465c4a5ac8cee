#pragma once

#include <cstddef>
#include <vector>

#include "fractheta/weights.hpp"

namespace fractheta {

/// Exponent set for starting-weight correction: all l = beta + q
/// (q = 0, 1, ...) with l < 2 - min(1, alpha). Possibly empty, in which case
/// the uncorrected quadrature already attains order 2 for x^beta * (smooth).
struct ExponentSet {
  double beta;
  double alpha;
  std::vector<double> exponents;

  [[nodiscard]] std::size_t s() const noexcept { return exponents.size(); }
};

/// Builds the exponent set. Throws Error(invalid_beta) when beta is a
/// negative integer (excluded leading exponent) and
/// Error(constraint_violation) when the set would exceed 8 entries (the
/// node-power system becomes numerically meaningless well before that).
[[nodiscard]] ExponentSet exponent_set(double beta, double alpha);

/// Starting weights omega_{n,j} (rows n = 0..n_max, columns j = 1..s) that
/// make the corrected quadrature exact on x^l for every l in the exponent
/// set. Row n = 0 is identically zero (the quadrature at x = 0 is empty).
struct CorrectionSet {
  ExponentSet exponents;
  std::size_t n_max = 0;
  std::vector<double> start_weights;  // row-major (n_max+1) x s
  double max_residual = 0.0;          // worst relative defect of the defining system

  [[nodiscard]] std::size_t s() const noexcept { return exponents.s(); }

  /// omega_{n,j}; j is 1-based per the quadrature convention.
  [[nodiscard]] double at(std::size_t n, std::size_t j) const noexcept {
    return start_weights[n * s() + (j - 1)];
  }
};

/// Solves the defining linear system for every n: the s x s node-power
/// matrix j^l is factored once and reused across all rows.
/// Requires 1 <= s <= n_max; throws Error(singular_system) on duplicate
/// exponents (pivot below 1e-13).
[[nodiscard]] CorrectionSet solve_starting_weights(const WeightTable& table,
                                                   const ExponentSet& exps,
                                                   std::size_t n_max);

}  // namespace fractheta
