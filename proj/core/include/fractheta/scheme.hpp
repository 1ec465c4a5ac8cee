#pragma once

#include <complex>

#include "fractheta/errors.hpp"

namespace fractheta {

/// The two one-parameter families of second-order fractional quadratures.
/// `bt` blends the fractional BDF2 (theta = 0) into the fractional
/// trapezoidal rule (theta = 1/2); `bn` blends the fractional BDF2 into the
/// generalized Newton-Gregory formula (theta = 1/2) and extends to theta = 1.
enum class Family { bt, bn };

[[nodiscard]] constexpr const char* to_string(Family family) noexcept {
  return family == Family::bt ? "bt" : "bn";
}

/// A validated quadrature scheme: family tag, operator order alpha
/// (positive integrates, negative differentiates), and blend parameter theta.
///
/// Admissibility:
///   bt: theta < 1/2 when alpha <= 0; theta <= 1/2 when alpha > 0.
///   bn: theta <= 1, alpha*theta != 1 (the leading weight would vanish);
///       alpha*theta > 1/2 is admissible but carries a stability advisory.
struct ThetaScheme {
  Family family;
  double alpha;
  double theta;
  bool stability_advisory = false;

  /// Bypasses validation. Intended for analysing boundary members of the
  /// families (for example bn with alpha*theta = 1, whose direct weight
  /// formulas remain meaningful even though implicit stepping breaks down).
  [[nodiscard]] static ThetaScheme unchecked(Family family, double alpha,
                                             double theta) noexcept {
    return ThetaScheme{family, alpha, theta,
                       family == Family::bn && alpha * theta > 0.5};
  }
};

/// Validates (family, alpha, theta) and returns the scheme.
/// Throws Error(constraint_violation) outside the admissible set and
/// Error(degenerate_weight) for bn with alpha*theta = 1.
[[nodiscard]] ThetaScheme make_scheme(Family family, double alpha, double theta);

/// Evaluates the generating function omega(xi) of the scheme's weights on the
/// principal branch. Throws Error(pole_evaluation) when xi lies within 1e-14
/// of a pole of the closed form.
[[nodiscard]] std::complex<double> gen_fn_eval(const ThetaScheme& scheme,
                                               std::complex<double> xi);

/// Evaluates the pole-free part omega~(xi) = (1-xi)^alpha * omega(xi).
/// Computed in the shifted variable w = 1-xi so that omega~(1) is exactly 1
/// in floating point. The removable xi = 1 singularity is gone; the other
/// poles of omega (when present) remain and raise Error(pole_evaluation).
[[nodiscard]] std::complex<double> reduced_gen_fn_eval(const ThetaScheme& scheme,
                                                       std::complex<double> xi);

}  // namespace fractheta
