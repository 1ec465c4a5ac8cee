#include "fractheta/scheme.hpp"

#include <cmath>
#include <string>

namespace fractheta {

namespace {

constexpr double kPoleTol = 1e-14;

[[noreturn]] void reject(const std::string& what) {
  throw Error(ErrorCode::constraint_violation, what);
}

void check_pole(std::complex<double> xi, std::complex<double> pole) {
  if (std::abs(xi - pole) <= kPoleTol) {
    throw Error(ErrorCode::pole_evaluation,
                "evaluation point coincides with a pole of the generating function");
  }
}

/// Ratio (1-2*theta)/(3-2*theta): the second root of the quadratic factor of
/// the generating function sits at the reciprocal of this value. Lies in
/// [-1, 1) for every admissible theta.
double second_root_ratio(double theta) noexcept {
  return (1.0 - 2.0 * theta) / (3.0 - 2.0 * theta);
}

}  // namespace

ThetaScheme make_scheme(Family family, double alpha, double theta) {
  if (!std::isfinite(alpha) || !std::isfinite(theta)) {
    reject("alpha and theta must be finite");
  }
  if (family == Family::bt) {
    if (alpha <= 0.0 && !(theta < 0.5)) {
      reject("bt with alpha <= 0 requires theta < 1/2, got theta = " +
             std::to_string(theta));
    }
    if (alpha > 0.0 && !(theta <= 0.5)) {
      reject("bt with alpha > 0 requires theta <= 1/2, got theta = " +
             std::to_string(theta));
    }
  } else {
    if (!(theta <= 1.0)) {
      reject("bn requires theta <= 1, got theta = " + std::to_string(theta));
    }
    if (std::abs(alpha * theta - 1.0) < 1e-14) {
      throw Error(ErrorCode::degenerate_weight,
                  "bn with alpha*theta = 1 has a vanishing leading weight");
    }
  }
  return ThetaScheme::unchecked(family, alpha, theta);
}

std::complex<double> gen_fn_eval(const ThetaScheme& scheme,
                                 std::complex<double> xi) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  if (a == 0.0) {
    return {1.0, 0.0};
  }
  const double g = second_root_ratio(t);
  if (a > 0.0) {
    check_pole(xi, {1.0, 0.0});
    if (g != 0.0) check_pole(xi, {1.0 / g, 0.0});
  } else if (scheme.family == Family::bt && t != 0.0) {
    check_pole(xi, {(t - 1.0) / t, 0.0});
  }
  // Factored principal-branch evaluation. Every base below has nonnegative
  // real part on the closed unit disk, so the per-factor principal powers
  // reproduce the analytic continuation of the weight series.
  const std::complex<double> one_minus = 1.0 - xi;
  const std::complex<double> qfac =
      std::pow(1.5 - t, -a) * std::pow(one_minus, -a) * std::pow(1.0 - g * xi, -a);
  if (scheme.family == Family::bt) {
    return std::pow(1.0 - t + t * xi, a) * qfac;
  }
  return (1.0 - a * t + a * t * xi) * qfac;
}

std::complex<double> reduced_gen_fn_eval(const ThetaScheme& scheme,
                                         std::complex<double> xi) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  if (a == 0.0) {
    return {1.0, 0.0};
  }
  // In the shifted variable w = 1 - xi the pole-free part becomes
  //   bt: (1 - t*w)^a * (1 + (1/2 - t)*w)^(-a)
  //   bn: (1 - a*t*w) * (1 + (1/2 - t)*w)^(-a)
  // and both factors are exactly 1 at w = 0.
  const std::complex<double> w = 1.0 - xi;
  if (a > 0.0 && t != 0.5) {
    check_pole(w, {-1.0 / (0.5 - t), 0.0});
  }
  const std::complex<double> tail = std::pow(1.0 + (0.5 - t) * w, -a);
  if (scheme.family == Family::bt) {
    if (a < 0.0 && t != 0.0) {
      check_pole(w, {1.0 / t, 0.0});
    }
    return std::pow(1.0 - t * w, a) * tail;
  }
  return (1.0 - a * t * w) * tail;
}

}  // namespace fractheta
