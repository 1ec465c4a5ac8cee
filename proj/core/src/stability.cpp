#include "fractheta/stability.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fractheta/errors.hpp"

namespace fractheta {

namespace {

constexpr double kPoleTol = 1e-14;

/// 1/omega(xi) via per-factor principal powers of the factored generating
/// function. Zeros of omega on the circle surface as honest infinities
/// (Error(pole_evaluation)); poles of omega become exact zeros of z.
std::complex<double> reciprocal_gen_fn(const ThetaScheme& scheme,
                                       std::complex<double> xi) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  if (a == 0.0) {
    return {1.0, 0.0};
  }
  const double g = (1.0 - 2.0 * t) / (3.0 - 2.0 * t);
  const std::complex<double> f1 = 1.0 - xi;
  const std::complex<double> f2 = 1.0 - g * xi;
  if (a < 0.0 && (std::abs(f1) < kPoleTol || std::abs(f2) < kPoleTol)) {
    throw Error(ErrorCode::pole_evaluation,
                "1/omega diverges at a zero of the quadratic factor");
  }
  const std::complex<double> qpow =
      std::pow(1.5 - t, a) * std::pow(f1, a) * std::pow(f2, a);
  if (scheme.family == Family::bt) {
    const std::complex<double> lin = 1.0 - t + t * xi;
    if (a > 0.0 && std::abs(lin) < kPoleTol) {
      throw Error(ErrorCode::pole_evaluation,
                  "1/omega diverges at a zero of the linear factor");
    }
    return qpow * std::pow(lin, -a);
  }
  const std::complex<double> lin = 1.0 - a * t + a * t * xi;
  if (std::abs(lin) < kPoleTol) {
    throw Error(ErrorCode::pole_evaluation,
                "1/omega diverges at a zero of the linear factor");
  }
  return qpow / lin;
}

}  // namespace

BoundaryCurve boundary_curve(const ThetaScheme& scheme, std::size_t m_samples) {
  if (m_samples < 16) {
    throw Error(ErrorCode::constraint_violation,
                "boundary sampling needs at least 16 points");
  }
  BoundaryCurve curve{scheme, {}, false, false};
  curve.samples.reserve(m_samples + 1);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m_samples + 1);
  for (std::size_t k = 1; k <= m_samples; ++k) {
    const double phi = step * static_cast<double>(k);
    curve.samples.push_back(
        BoundarySample{phi, reciprocal_gen_fn(scheme, std::polar(1.0, phi))});
  }
  if (scheme.alpha > 0.0) {
    curve.samples.push_back(BoundarySample{0.0, {0.0, 0.0}});
    curve.appended_origin = true;
  } else if (scheme.alpha < 0.0) {
    curve.omitted_infinite_limit = true;
  }
  return curve;
}

Intercept real_intercept(const ThetaScheme& scheme) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (scheme.family == Family::bt) {
    if (std::abs(1.0 - 2.0 * t) < 1e-14) {
      return {InterceptKind::infinite, inf};
    }
    return {InterceptKind::finite, std::pow(4.0 * (1.0 - t) / (1.0 - 2.0 * t), a)};
  }
  const double numerator = std::pow(4.0 * (1.0 - t), a);
  const double denominator = 1.0 - 2.0 * a * t;
  if (std::abs(denominator) < 1e-14) {
    return numerator == 0.0
               ? Intercept{InterceptKind::indeterminate,
                           std::numeric_limits<double>::quiet_NaN()}
               : Intercept{InterceptKind::infinite, inf};
  }
  if (!std::isfinite(numerator)) {
    return {InterceptKind::infinite, inf};
  }
  return {InterceptKind::finite, numerator / denominator};
}

SectorVerdict a_theta_check(const BoundaryCurve& curve, double vartheta) {
  if (!(vartheta > 0.0) || !(vartheta <= std::numbers::pi)) {
    throw Error(ErrorCode::constraint_violation,
                "sector half-angle must lie in (0, pi]");
  }
  for (const BoundarySample& sample : curve.samples) {
    if (std::abs(sample.z) == 0.0) {
      continue;  // the origin carries no argument
    }
    const double gap = std::numbers::pi - std::abs(std::arg(sample.z));
    if (gap < vartheta - 1e-9) {
      return SectorVerdict{true, sample.phi, sample.z};
    }
  }
  return SectorVerdict{};
}

}  // namespace fractheta
