#pragma once

#include <span>
#include <vector>

#include "fractheta/correction.hpp"
#include "fractheta/grid.hpp"
#include "fractheta/weights.hpp"

namespace fractheta {

/// Result of applying the (optionally corrected) quadrature to samples of u:
/// values[n] approximates the order-alpha fractional integral of u at x_n.
struct QuadratureResult {
  std::vector<double> values;
  bool used_correction = false;
};

/// values[n] = h^alpha * (sum_{j<=n} omega_{n-j} u_j + sum_{j<=s} omega_{n,j} u_j).
/// Direct O(N^2) summation. correction may be null (uncorrected).
/// Throws Error(length_mismatch) unless samples.size() == N+1 and the weight
/// table covers the grid.
[[nodiscard]] QuadratureResult apply(const WeightTable& table,
                                     const CorrectionSet* correction,
                                     std::span<const double> samples,
                                     const UniformGrid& grid);

/// Fractional integral of order alpha of x^beta at x:
/// Gamma(beta+1)/Gamma(beta+alpha+1) * x^(beta+alpha).
/// Throws Error(pole_evaluation) when beta is a negative integer or
/// beta+alpha+1 is a nonpositive integer.
[[nodiscard]] double exact_riemann_liouville_monomial(double beta, double alpha,
                                                      double x);

/// max_{1<=n<=N} |uncorrected quadrature of samples - exact| on the grid.
[[nodiscard]] double convolution_error(const WeightTable& table,
                                       std::span<const double> samples,
                                       std::span<const double> exact,
                                       const UniformGrid& grid);

}  // namespace fractheta
