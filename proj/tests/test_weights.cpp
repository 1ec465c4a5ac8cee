#include <cmath>
#include <vector>

#include "doctest.h"
#include "fractheta/weights.hpp"
#include "testutil.hpp"

using fractheta::ErrorCode;
using fractheta::Family;
using fractheta::RecurrenceCoeffs;
using fractheta::ThetaScheme;
using fractheta::WeightTable;
using fractheta::binomial;
using fractheta::bn_weight_direct;
using fractheta::bt_weight_direct;
using fractheta::make_scheme;
using fractheta::recurrence_coeffs;
using fractheta::recurrence_coeffs_generic;
using fractheta::series_oracle;
using fractheta::weights_by_recurrence;
using testutil::throws_code;

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-10});
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("closed-form recurrence coefficients match polynomial assembly") {
  testutil::Rng rng(1234ull);
  for (int i = 0; i < 30; ++i) {
    const ThetaScheme scheme = testutil::random_scheme(rng);
    const RecurrenceCoeffs closed = recurrence_coeffs(scheme);
    const RecurrenceCoeffs generic = recurrence_coeffs_generic(scheme);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(closed.phi[k] - generic.phi[k]) <=
            1e-12 * std::max(1.0, std::abs(generic.phi[k])));
    }
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(closed.psi[k] - generic.psi[k]) <=
            1e-12 * std::max(1.0, std::abs(generic.psi[k])));
    }
    CHECK(std::abs(closed.omega0 - generic.omega0) <=
          1e-12 * std::max(1.0, std::abs(generic.omega0)));
  }
}

TEST_CASE("order-one members reduce to classical sequences") {
  // bt theta=0 at alpha=1 integrates with weights 1 - 3^-(k+1).
  const WeightTable bdf = weights_by_recurrence(make_scheme(Family::bt, 1.0, 0.0), 12);
  for (std::size_t k = 0; k <= 12; ++k) {
    CHECK(std::abs(bdf.omega[k] - (1.0 - std::pow(3.0, -(double(k) + 1.0)))) < 1e-14);
  }

  // bt theta=1/2 at alpha=1 is the trapezoidal rule: 1/2, 1, 1, ...
  const WeightTable trap =
      weights_by_recurrence(make_scheme(Family::bt, 1.0, 0.5), 10);
  CHECK(trap.omega[0] == doctest::Approx(0.5).epsilon(1e-15));
  for (std::size_t k = 1; k <= 10; ++k) {
    CHECK(std::abs(trap.omega[k] - 1.0) < 1e-13);
  }
}

TEST_CASE("degenerate bn member is computable directly but not by recurrence") {
  // alpha*theta = 1 zeroes the leading weight; the recurrence cannot start.
  const ThetaScheme degenerate = ThetaScheme::unchecked(Family::bn, 1.0, 1.0);
  CHECK(throws_code(ErrorCode::degenerate_weight,
                    [&] { return weights_by_recurrence(degenerate, 8); }));
  // The direct binomial formula stays meaningful: 2*xi/(1-xi^2) expands to
  // the alternating sequence 0, 2, 0, 2, ...
  for (std::size_t j = 0; j <= 9; ++j) {
    const double expected = (j % 2 == 0) ? 0.0 : 2.0;
    CHECK(std::abs(bn_weight_direct(degenerate, j) - expected) < 1e-14);
  }
}

TEST_CASE("alpha zero gives identity weights exactly") {
  for (const ThetaScheme& scheme : {make_scheme(Family::bt, 0.0, 0.3),
                                    make_scheme(Family::bn, 0.0, 0.9)}) {
    const WeightTable table = weights_by_recurrence(scheme, 16);
    CHECK(table.omega[0] == 1.0);
    for (std::size_t k = 1; k <= 16; ++k) {
      CHECK(table.omega[k] == 0.0);
    }
  }
}

TEST_CASE("three evaluation routes agree") {
  const std::vector<ThetaScheme> schemes = {
      make_scheme(Family::bt, 0.5, 0.2),
      make_scheme(Family::bt, -1.5, -0.4),
      make_scheme(Family::bn, 0.75, 0.9),
      make_scheme(Family::bn, -0.5, 0.6),
  };
  constexpr std::size_t n = 48;
  for (const ThetaScheme& scheme : schemes) {
    const WeightTable fast = weights_by_recurrence(scheme, n);
    const WeightTable series = series_oracle(scheme, n);
    for (std::size_t j = 0; j <= n; ++j) {
      const double direct = scheme.family == Family::bt
                                ? bt_weight_direct(scheme, j)
                                : bn_weight_direct(scheme, j);
      CHECK(rel_diff(fast.omega[j], direct) <= 1e-10);
      CHECK(rel_diff(fast.omega[j], series.omega[j]) <= 1e-10);
    }
  }
}

TEST_CASE("leading weight closed forms") {
  const ThetaScheme bt = make_scheme(Family::bt, 0.7, 0.3);
  CHECK(weights_by_recurrence(bt, 0).omega[0] ==
        doctest::Approx(std::pow((2.0 - 0.6) / (3.0 - 0.6), 0.7)).epsilon(1e-15));
  const ThetaScheme bn = make_scheme(Family::bn, 0.7, 0.3);
  CHECK(weights_by_recurrence(bn, 0).omega[0] ==
        doctest::Approx(std::pow(2.0, 0.7) * (1.0 - 0.21) /
                        std::pow(3.0 - 0.6, 0.7)).epsilon(1e-15));
  // Trapezoidal member: omega_0 = 2^-alpha.
  const ThetaScheme ftr = make_scheme(Family::bt, 0.42, 0.5);
  CHECK(weights_by_recurrence(ftr, 0).omega[0] ==
        doctest::Approx(std::pow(2.0, -0.42)).epsilon(1e-15));
}

TEST_CASE("generalized binomial coefficients") {
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(binomial(-1.0, k) == doctest::Approx((k % 2 == 0) ? 1.0 : -1.0));
  }
  CHECK(binomial(0.5, 2) == doctest::Approx(-0.125));
  CHECK(binomial(-0.5, 3) == doctest::Approx(-0.3125));
  CHECK(binomial(3.0, 2) == doctest::Approx(3.0));
  CHECK(binomial(3.0, 5) == doctest::Approx(0.0));
  CHECK(binomial(2.7, 0) == doctest::Approx(1.0));
}

TEST_CASE("weight tails decay at the order-determined power") {
  // |omega_n| ~ n^(alpha-1): the compensated sequence is nearly flat.
  const WeightTable table =
      weights_by_recurrence(make_scheme(Family::bt, 0.5, 0.2), 1024);
  double lo = 1e300;
  double hi = 0.0;
  for (std::size_t n = 256; n <= 1024; ++n) {
    const double value = std::abs(table.omega[n]) * std::pow(double(n), 0.5);
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  CHECK(hi / lo <= 1.3);
}

}  // TEST_SUITE
