#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fractheta/scheme.hpp"

namespace fractheta {

/// Convolution weights omega_0..omega_n_max of one scheme.
struct WeightTable {
  ThetaScheme scheme;
  std::vector<double> omega;

  [[nodiscard]] std::size_t n_max() const noexcept { return omega.size() - 1; }
};

/// Coefficients of the scalar three/four-term recurrence satisfied by the
/// weights: with omega(xi) = p1(xi)^a * p2(xi)^b, phi = a*p1'*p2 + b*p1*p2'
/// (degree 2) and psi = p1*p2 (degree 3). psi[0] != 0 for every valid scheme.
struct RecurrenceCoeffs {
  std::array<double, 3> phi;
  std::array<double, 4> psi;
  double omega0;
};

/// Closed-form recurrence coefficients for the scheme's family.
[[nodiscard]] RecurrenceCoeffs recurrence_coeffs(const ThetaScheme& scheme);

/// Same coefficients assembled by explicit polynomial arithmetic on the
/// factored generating function; used to cross-check the closed forms.
[[nodiscard]] RecurrenceCoeffs recurrence_coeffs_generic(const ThetaScheme& scheme);

/// j-th weight of a bt scheme by the direct triple-convolution formula.
/// O(j^2) per weight; intended for verification, not production.
[[nodiscard]] double bt_weight_direct(const ThetaScheme& scheme, std::size_t j);

/// j-th weight of a bn scheme by the direct two-term binomial-sum formula.
/// O(j) per weight; intended for verification, not production.
[[nodiscard]] double bn_weight_direct(const ThetaScheme& scheme, std::size_t j);

/// All weights up to n_max via the O(n_max) recurrence. Production path.
/// For bn the recurrence runs on the quadratic-factor series alone and the
/// linear numerator is applied as a two-term combination afterwards; running
/// it on the full generating function is numerically unstable once
/// alpha*theta > 1/2. Throws Error(degenerate_weight) if the recurrence's
/// leading coefficient vanishes (bn with alpha*theta = 1).
[[nodiscard]] WeightTable weights_by_recurrence(const ThetaScheme& scheme,
                                                std::size_t n_max);

/// All weights up to n_max by expanding each factor of the generating
/// function as a binomial series and convolving; O(n_max^2) brute force
/// used as the independent oracle in tests.
[[nodiscard]] WeightTable series_oracle(const ThetaScheme& scheme,
                                        std::size_t n_max);

/// Generalized binomial coefficient C(upper, k) by the multiplicative
/// recurrence; exact at negative-integer upper arguments where Gamma-ratio
/// evaluation would hit poles.
[[nodiscard]] double binomial(double upper, std::size_t k) noexcept;

}  // namespace fractheta
