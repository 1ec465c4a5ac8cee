#include "fractheta/correction.hpp"

#include <algorithm>
#include <cmath>

#include "fractheta/errors.hpp"
#include "fractheta/linalg.hpp"

namespace fractheta {

namespace {
constexpr std::size_t kMaxExponents = 8;
}

ExponentSet exponent_set(double beta, double alpha) {
  if (!std::isfinite(beta) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::constraint_violation,
                "beta and alpha must be finite");
  }
  if (beta < -0.5 && std::abs(beta - std::round(beta)) < 1e-12) {
    throw Error(ErrorCode::invalid_beta,
                "negative-integer leading exponents are excluded");
  }
  ExponentSet out{beta, alpha, {}};
  const double cutoff = 2.0 - std::min(1.0, alpha);
  for (std::size_t q = 0;; ++q) {
    const double l = beta + static_cast<double>(q);
    if (!(l < cutoff)) break;
    if (out.exponents.size() == kMaxExponents) {
      throw Error(ErrorCode::constraint_violation,
                  "correction set would exceed 8 exponents; the node-power "
                  "system is too ill-conditioned at that size");
    }
    out.exponents.push_back(l);
  }
  return out;
}

CorrectionSet solve_starting_weights(const WeightTable& table,
                                     const ExponentSet& exps,
                                     std::size_t n_max) {
  const std::size_t s = exps.s();
  if (s < 1 || s > n_max) {
    throw Error(ErrorCode::constraint_violation,
                "starting weights need 1 <= s <= n_max");
  }
  if (table.n_max() < n_max) {
    throw Error(ErrorCode::length_mismatch,
                "weight table does not cover the requested rows");
  }
  const double alpha = exps.alpha;

  // Node-power matrix: rows are exponents, columns the nodes j = 1..s.
  // It does not depend on n, so one factorization serves every row.
  std::vector<double> m(s * s);
  for (std::size_t l = 0; l < s; ++l) {
    for (std::size_t j = 1; j <= s; ++j) {
      m[l * s + (j - 1)] = std::pow(static_cast<double>(j), exps.exponents[l]);
    }
  }
  const DenseLU lu(std::move(m), s);

  // j^l for all grid indices, per exponent; reused across rows.
  std::vector<std::vector<double>> node_pow(s);
  std::vector<double> target_scale(s);
  for (std::size_t l = 0; l < s; ++l) {
    node_pow[l].resize(n_max + 1);
    for (std::size_t j = 0; j <= n_max; ++j) {
      node_pow[l][j] = std::pow(static_cast<double>(j), exps.exponents[l]);
    }
    target_scale[l] = std::tgamma(exps.exponents[l] + 1.0) /
                      std::tgamma(exps.exponents[l] + alpha + 1.0);
  }

  CorrectionSet out{exps, n_max, std::vector<double>((n_max + 1) * s, 0.0), 0.0};
  std::vector<double> rhs(s);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<double> target(s);
    for (std::size_t l = 0; l < s; ++l) {
      double conv = 0.0;
      for (std::size_t j = 0; j <= n; ++j) {
        conv += table.omega[n - j] * node_pow[l][j];
      }
      target[l] = target_scale[l] *
                  std::pow(static_cast<double>(n), exps.exponents[l] + alpha);
      rhs[l] = target[l] - conv;
    }
    const std::vector<double> w = lu.solve(rhs);
    for (std::size_t j = 0; j < s; ++j) {
      out.start_weights[n * s + j] = w[j];
    }
    for (std::size_t l = 0; l < s; ++l) {
      double lhs = 0.0;
      for (std::size_t j = 1; j <= s; ++j) {
        lhs += w[j - 1] * node_pow[l][j];
      }
      const double defect =
          std::abs(lhs - rhs[l]) / std::max(1.0, std::abs(target[l]));
      out.max_residual = std::max(out.max_residual, defect);
    }
  }
  return out;
}

}  // namespace fractheta
