#include "fractheta/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "fractheta/errors.hpp"

namespace fractheta {

QuadratureResult apply(const WeightTable& table, const CorrectionSet* correction,
                       std::span<const double> samples, const UniformGrid& grid) {
  const std::size_t n_nodes = grid.N + 1;
  if (samples.size() != n_nodes) {
    throw Error(ErrorCode::length_mismatch,
                "samples must hold one value per grid node");
  }
  if (table.n_max() < grid.N) {
    throw Error(ErrorCode::length_mismatch,
                "weight table does not cover the grid");
  }
  const std::size_t s = correction ? correction->s() : 0;
  if (correction && (correction->n_max < grid.N || s > grid.N)) {
    throw Error(ErrorCode::length_mismatch,
                "correction set does not cover the grid");
  }

  const double ha = std::pow(grid.h, table.scheme.alpha);
  QuadratureResult out{std::vector<double>(n_nodes), s > 0};
  for (std::size_t n = 0; n < n_nodes; ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      acc += table.omega[n - j] * samples[j];
    }
    for (std::size_t j = 1; j <= s; ++j) {
      acc += correction->at(n, j) * samples[j];
    }
    out.values[n] = ha * acc;
  }
  return out;
}

double exact_riemann_liouville_monomial(double beta, double alpha, double x) {
  if (!std::isfinite(beta) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::constraint_violation,
                "beta and alpha must be finite");
  }
  if (!(x >= 0.0)) {
    throw Error(ErrorCode::constraint_violation, "x must be nonnegative");
  }
  if (beta < -0.5 && std::abs(beta - std::round(beta)) < 1e-12) {
    throw Error(ErrorCode::pole_evaluation,
                "Gamma(beta+1) pole: beta is a negative integer");
  }
  const double shifted = beta + alpha + 1.0;
  if (shifted < 0.5 && std::abs(shifted - std::round(shifted)) < 1e-12) {
    throw Error(ErrorCode::pole_evaluation,
                "Gamma(beta+alpha+1) pole: argument is a nonpositive integer");
  }
  return std::tgamma(beta + 1.0) / std::tgamma(shifted) *
         std::pow(x, beta + alpha);
}

double convolution_error(const WeightTable& table,
                         std::span<const double> samples,
                         std::span<const double> exact,
                         const UniformGrid& grid) {
  if (samples.size() != exact.size()) {
    throw Error(ErrorCode::length_mismatch,
                "samples and reference lengths disagree");
  }
  const QuadratureResult approx = apply(table, nullptr, samples, grid);
  double worst = 0.0;
  for (std::size_t n = 1; n <= grid.N; ++n) {
    worst = std::max(worst, std::abs(approx.values[n] - exact[n]));
  }
  return worst;
}

}  // namespace fractheta
