#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fractheta/scheme.hpp"

namespace fractheta {

struct BoundarySample {
  double phi;                // argument of xi = e^{i phi}; 0 for appended limits
  std::complex<double> z;    // 1/omega(e^{i phi})
};

/// Sampled image of the unit circle under 1/omega: the boundary of the
/// region where implicit stepping of the Abel model equation is stable.
struct BoundaryCurve {
  ThetaScheme scheme;
  std::vector<BoundarySample> samples;
  bool appended_origin = false;        // z = 0 limit included (alpha > 0)
  bool omitted_infinite_limit = false; // alpha < 0: the xi -> 1 limit diverges
};

/// Samples z(phi_k) = 1/omega(e^{i phi_k}) at phi_k = 2 pi k / (m+1),
/// k = 1..m (phi = 0 excluded). Appends the limit point z = 0 when
/// alpha > 0; for alpha < 0 the limit is infinite and is omitted with a
/// flag. Requires m >= 16. Evaluation uses the factored reciprocal form, so
/// poles of omega on the circle become exact zeros of z rather than
/// divisions by zero; genuine poles of 1/omega raise Error(pole_evaluation).
[[nodiscard]] BoundaryCurve boundary_curve(const ThetaScheme& scheme,
                                           std::size_t m_samples);

enum class InterceptKind {
  finite,
  infinite,       // denominator of the closed form vanishes
  indeterminate,  // numerator and denominator both vanish
};

struct Intercept {
  InterceptKind kind;
  double value;  // meaningful only when kind == finite
};

/// Closed-form real intercept z(pi) = 1/omega(-1):
/// bt: 4^alpha (1-theta)^alpha / (1-2 theta)^alpha (infinite at theta = 1/2);
/// bn: 4^alpha (1-theta)^alpha / (1-2 alpha theta) (indeterminate when both
/// numerator and denominator vanish, e.g. theta = 1 with alpha theta = 1/2).
[[nodiscard]] Intercept real_intercept(const ThetaScheme& scheme);

struct SectorVerdict {
  bool violation = false;
  double phi = 0.0;               // witnessing sample when violation
  std::complex<double> z{0.0, 0.0};
};

/// Tests whether any sampled boundary point intrudes into the sector of
/// half-angle vartheta around the negative real axis: violation iff
/// pi - |arg z| < vartheta - 1e-9 for some sample (slack protects exact
/// boundary-of-sector members). The appended origin carries no argument and
/// is skipped. vartheta = (1 - alpha/2) pi corresponds to the full analytic
/// stability sector of the Abel model equation. Requires 0 < vartheta <= pi.
[[nodiscard]] SectorVerdict a_theta_check(const BoundaryCurve& curve,
                                          double vartheta);

}  // namespace fractheta
