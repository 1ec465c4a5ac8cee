#include "fractheta/weights.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <span>

#include "fractheta/errors.hpp"

namespace fractheta {

namespace {

/// Coefficients of the quadratic factor q(xi) shared by both families:
/// q(xi) = (3/2 - theta) - (2 - 2 theta) xi + (1/2 - theta) xi^2.
std::array<double, 3> quadratic_factor(double theta) noexcept {
  return {1.5 - theta, -(2.0 - 2.0 * theta), 0.5 - theta};
}

std::vector<double> poly_mul(const std::vector<double>& p,
                             const std::vector<double>& q) {
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

std::vector<double> poly_diff(const std::vector<double>& p) {
  if (p.size() <= 1) return {0.0};
  std::vector<double> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    out[i - 1] = static_cast<double>(i) * p[i];
  }
  return out;
}

/// Series of (1 + c*xi)^e truncated at n_max: coefficients C(e, k) c^k.
std::vector<double> binom_series(double e, double c, std::size_t n_max) {
  std::vector<double> out(n_max + 1);
  out[0] = 1.0;
  for (std::size_t k = 1; k <= n_max; ++k) {
    out[k] = out[k - 1] * c * (e - static_cast<double>(k) + 1.0) /
             static_cast<double>(k);
  }
  return out;
}

std::vector<double> conv_trunc(const std::vector<double>& p,
                               const std::vector<double>& q,
                               std::size_t n_max) {
  std::vector<double> out(n_max + 1, 0.0);
  for (std::size_t i = 0; i <= n_max && i < p.size(); ++i) {
    const std::size_t jmax = std::min(n_max - i, q.size() - 1);
    for (std::size_t j = 0; j <= jmax; ++j) {
      out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

/// Fills omega[1..] from a seeded omega[0] by the O(N) coefficient-matching
/// recurrence omega_k = (1/(k psi_0)) sum_j (phi_{k-j-1} - j psi_{k-j}) omega_j,
/// for short phi/psi arrays of any length.
void run_recurrence(std::vector<double>& omega, std::span<const double> phi,
                    std::span<const double> psi) {
  const std::size_t max_lag = std::max(phi.size(), psi.size() - 1);
  for (std::size_t k = 1; k < omega.size(); ++k) {
    double acc = 0.0;
    const std::size_t j_lo = k > max_lag ? k - max_lag : 0;
    for (std::size_t j = j_lo; j < k; ++j) {
      const std::size_t d = k - j;
      const double f = d - 1 < phi.size() ? phi[d - 1] : 0.0;
      const double p = d < psi.size() ? psi[d] : 0.0;
      acc += (f - static_cast<double>(j) * p) * omega[j];
    }
    omega[k] = acc / (static_cast<double>(k) * psi[0]);
  }
}

}  // namespace

double binomial(double upper, std::size_t k) noexcept {
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= (upper - static_cast<double>(i) + 1.0) / static_cast<double>(i);
  }
  return c;
}

RecurrenceCoeffs recurrence_coeffs(const ThetaScheme& scheme) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  RecurrenceCoeffs out{};
  if (scheme.family == Family::bt) {
    out.phi = {0.5 * a * (2.0 * t * t - 5.0 * t + 4.0),
               a * (2.0 * t - 1.0) * (1.0 - t),
               0.5 * a * t * (2.0 * t - 1.0)};
    out.psi = {0.5 * (3.0 - 2.0 * t) * (1.0 - t),
               0.5 * (1.0 - 2.0 * t) * (3.0 * t - 4.0),
               0.5 * (1.0 - t) * (1.0 - 6.0 * t),
               0.5 * t * (1.0 - 2.0 * t)};
    out.omega0 = std::pow((2.0 - 2.0 * t) / (3.0 - 2.0 * t), a);
  } else {
    out.phi = {2.0 * a * (t - 1.0) * (a * t - 1.0) - a * t * (t - 1.5),
               a * (2.0 * t * t + 3.0 * a * t - 4.0 * a * t * t - 1.0),
               a * t * (0.5 - t - a + 2.0 * a * t)};
    out.psi = {0.5 * (3.0 - 2.0 * t) * (1.0 - a * t),
               0.5 * a * t * (3.0 - 2.0 * t) + 2.0 * (1.0 - t) * (a * t - 1.0),
               0.5 * (a * t - 1.0) * (2.0 * t - 1.0) + 2.0 * a * t * (t - 1.0),
               0.5 * a * t * (1.0 - 2.0 * t)};
    out.omega0 = std::pow(2.0, a) * (1.0 - a * t) / std::pow(3.0 - 2.0 * t, a);
  }
  return out;
}

RecurrenceCoeffs recurrence_coeffs_generic(const ThetaScheme& scheme) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  const auto qf = quadratic_factor(t);
  const std::vector<double> q{qf[0], qf[1], qf[2]};

  // omega = p1^e1 * p2^e2; phi = e1*p1'*p2 + e2*p1*p2', psi = p1*p2.
  std::vector<double> p1, p2;
  double e1 = 0.0, e2 = 0.0;
  if (scheme.family == Family::bt) {
    p1 = {1.0 - t, t};
    e1 = a;
    p2 = q;
    e2 = -a;
  } else {
    p1 = q;
    e1 = -a;
    p2 = {1.0 - a * t, a * t};
    e2 = 1.0;
  }

  const auto term1 = poly_mul(poly_diff(p1), p2);
  const auto term2 = poly_mul(p1, poly_diff(p2));
  const auto psi = poly_mul(p1, p2);

  RecurrenceCoeffs out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double u = i < term1.size() ? term1[i] : 0.0;
    const double v = i < term2.size() ? term2[i] : 0.0;
    out.phi[i] = e1 * u + e2 * v;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    out.psi[i] = i < psi.size() ? psi[i] : 0.0;
  }
  out.omega0 = std::pow(p1[0], e1) * std::pow(p2[0], e2);
  return out;
}

double bt_weight_direct(const ThetaScheme& scheme, std::size_t j) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  const auto k1 = binom_series(a, t / (1.0 - t), j);
  const auto k2 = binom_series(-a, -(1.0 - 2.0 * t) / (3.0 - 2.0 * t), j);
  const auto k3 = binom_series(-a, -1.0, j);
  double acc = 0.0;
  for (std::size_t k = 0; k <= j; ++k) {
    for (std::size_t s = 0; s + k <= j; ++s) {
      acc += k1[k] * k2[s] * k3[j - k - s];
    }
  }
  return std::pow(2.0 * (1.0 - t) / (3.0 - 2.0 * t), a) * acc;
}

double bn_weight_direct(const ThetaScheme& scheme, std::size_t j) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  const double g = (1.0 - 2.0 * t) / (3.0 - 2.0 * t);
  const auto kappa_at = [&](std::size_t m) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
      acc += std::pow(g, static_cast<double>(m - k)) * binomial(-a, k) *
             binomial(-a, m - k);
    }
    return (m % 2 == 0 ? 1.0 : -1.0) * acc;
  };
  const double kj = kappa_at(j);
  const double kjm1 = j == 0 ? 0.0 : kappa_at(j - 1);
  return std::pow(2.0 / (3.0 - 2.0 * t), a) *
         ((1.0 - a * t) * kj + a * t * kjm1);
}

WeightTable weights_by_recurrence(const ThetaScheme& scheme,
                                  std::size_t n_max) {
  const auto rc = recurrence_coeffs(scheme);
  if (rc.psi[0] == 0.0) {
    throw Error(ErrorCode::degenerate_weight,
                "recurrence leading coefficient vanishes");
  }
  WeightTable table{scheme, std::vector<double>(n_max + 1, 0.0)};
  if (scheme.family == Family::bt) {
    table.omega[0] = rc.omega0;
    run_recurrence(table.omega, rc.phi, rc.psi);
    return table;
  }
  // bn: the recurrence over the full generating function is unstable once
  // alpha*theta > 1/2 (the linear numerator's root moves inside the unit
  // disk and feeds an exponentially growing spurious mode). The numerator
  // enters at power one, so run the recurrence on the q(xi)^-alpha series
  // alone -- q's roots never lie inside the disk for valid theta -- and
  // apply the two-term numerator afterwards.
  const double a = scheme.alpha;
  const double at = a * scheme.theta;
  const auto q = quadratic_factor(scheme.theta);
  const std::array<double, 2> phi{-a * q[1], -2.0 * a * q[2]};
  const std::array<double, 3> psi{q[0], q[1], q[2]};
  std::vector<double> kappa(n_max + 1, 0.0);
  kappa[0] = std::pow(q[0], -a);
  run_recurrence(kappa, phi, psi);
  table.omega[0] = (1.0 - at) * kappa[0];
  for (std::size_t j = 1; j <= n_max; ++j) {
    table.omega[j] = (1.0 - at) * kappa[j] + at * kappa[j - 1];
  }
  return table;
}

WeightTable series_oracle(const ThetaScheme& scheme, std::size_t n_max) {
  const double a = scheme.alpha;
  const double t = scheme.theta;
  if (a == 0.0) {
    WeightTable table{scheme, std::vector<double>(n_max + 1, 0.0)};
    table.omega[0] = 1.0;
    return table;
  }
  const double g = (1.0 - 2.0 * t) / (3.0 - 2.0 * t);
  // q(xi)^-a = (3/2-t)^-a (1-xi)^-a (1-g xi)^-a expanded factor by factor.
  auto series = conv_trunc(binom_series(-a, -1.0, n_max),
                           binom_series(-a, -g, n_max), n_max);
  double scale = std::pow(1.5 - t, -a);
  if (scheme.family == Family::bt) {
    series = conv_trunc(series, binom_series(a, t / (1.0 - t), n_max), n_max);
    scale *= std::pow(1.0 - t, a);
  } else {
    series = conv_trunc(series, {1.0 - a * t, a * t}, n_max);
  }
  WeightTable table{scheme, std::move(series)};
  for (auto& w : table.omega) w *= scale;
  return table;
}

}  // namespace fractheta
