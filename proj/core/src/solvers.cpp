#include "fractheta/solvers.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "fractheta/errors.hpp"
#include "fractheta/linalg.hpp"
#include "fractheta/weights.hpp"

namespace fractheta {

namespace {

constexpr double kStepTol = 1e-13;
constexpr double kOrderTol = 1e-12;

void require_order(const ThetaScheme& scheme, double order, const char* what) {
  if (std::abs(scheme.alpha - order) > kOrderTol) {
    throw Error(ErrorCode::constraint_violation, what);
  }
}

double quiet_nan() noexcept {
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

CaputoProblem manufactured_caputo(double alpha) {
  CaputoProblem problem;
  problem.alpha = alpha;
  problem.u0 = 1.0;
  const double scale = 6.0 / std::tgamma(4.0 - alpha);
  problem.f = [alpha, scale](double x) {
    return scale * std::pow(x, 3.0 - alpha) - x * x * x - 1.0;
  };
  problem.exact = [](double x) { return 1.0 + x * x * x; };
  return problem;
}

BagleyTorvikProblem manufactured_bagley(double mu) {
  if (!(mu > 1.0)) {
    throw Error(ErrorCode::constraint_violation,
                "manufactured solution needs mu > 1 for zero initial slope");
  }
  BagleyTorvikProblem problem;
  problem.mu = mu;
  const double second = mu * (mu - 1.0);
  const double damp_mu = std::tgamma(mu + 1.0) / std::tgamma(mu - 0.5);
  const double damp_five = std::tgamma(6.0) / std::tgamma(4.5);
  problem.f = [=](double x) {
    return second * std::pow(x, mu - 2.0) + 20.0 * x * x * x +
           2.0 * (damp_mu * std::pow(x, mu - 1.5) +
                  damp_five * std::pow(x, 3.5)) +
           2.0 * (std::pow(x, mu) + std::pow(x, 5.0));
  };
  problem.exact = [mu](double x) {
    return std::pow(x, mu) + std::pow(x, 5.0);
  };
  return problem;
}

SolveReport solve_caputo_linear(const ThetaScheme& scheme,
                                const CaputoProblem& problem,
                                const UniformGrid& grid) {
  if (!(problem.alpha > 0.0 && problem.alpha < 1.0)) {
    throw Error(ErrorCode::constraint_violation,
                "derivative order must lie in (0, 1)");
  }
  require_order(scheme, -problem.alpha,
                "scheme order must be the negated derivative order");
  if (!problem.f) {
    throw Error(ErrorCode::constraint_violation, "forcing function required");
  }
  const WeightTable table = weights_by_recurrence(scheme, grid.N);
  const double hma = std::pow(grid.h, scheme.alpha);
  const double denom = hma * table.omega[0] - 1.0;
  if (std::abs(denom) < kStepTol) {
    throw Error(ErrorCode::step_singular,
                "implicit step denominator h^-alpha omega_0 - 1 vanishes");
  }

  std::vector<double> shifted(grid.N + 1, 0.0);  // v = u - u0, v(0) = 0
  for (std::size_t n = 1; n <= grid.N; ++n) {
    double history = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      history += table.omega[n - j] * shifted[j];
    }
    shifted[n] = (problem.f(grid.node(n)) + problem.u0 - hma * history) / denom;
  }

  SolveReport report{grid, std::vector<double>(grid.N + 1), std::nullopt};
  for (std::size_t n = 0; n <= grid.N; ++n) {
    report.numerical[n] = shifted[n] + problem.u0;
  }
  if (problem.exact) {
    double worst = 0.0;
    for (std::size_t n = 1; n <= grid.N; ++n) {
      worst = std::max(worst,
                       std::abs(report.numerical[n] - problem.exact(grid.node(n))));
    }
    report.max_error = worst;
  }
  return report;
}

AbelReport solve_abel(const ThetaScheme& scheme, const AbelProblem& problem,
                      const UniformGrid& grid) {
  if (!(problem.alpha > 0.0 && problem.alpha < 1.0)) {
    throw Error(ErrorCode::constraint_violation,
                "integral order must lie in (0, 1)");
  }
  require_order(scheme, problem.alpha,
                "scheme order must equal the integral order");
  if (!problem.f) {
    throw Error(ErrorCode::constraint_violation, "forcing function required");
  }
  const WeightTable table = weights_by_recurrence(scheme, grid.N);
  const double ha = std::pow(grid.h, scheme.alpha);
  const std::complex<double> denom = 1.0 - problem.lambda * ha * table.omega[0];
  if (std::abs(denom) < kStepTol) {
    throw Error(ErrorCode::step_singular,
                "implicit step denominator 1 - lambda h^alpha omega_0 vanishes");
  }

  AbelReport report{grid, std::vector<std::complex<double>>(grid.N + 1)};
  for (std::size_t n = 0; n <= grid.N; ++n) {
    std::complex<double> history = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      history += table.omega[n - j] * report.numerical[j];
    }
    report.numerical[n] =
        (problem.f(grid.node(n)) + problem.lambda * ha * history) / denom;
  }
  return report;
}

SolveReport solve_bagley_torvik(const ThetaScheme& scheme1,
                                const ThetaScheme& scheme2,
                                const BagleyTorvikProblem& problem,
                                const UniformGrid& grid, bool use_correction) {
  require_order(scheme1, -2.0, "first scheme must differentiate at order 2");
  require_order(scheme2, -1.5, "second scheme must differentiate at order 3/2");
  if (!problem.f) {
    throw Error(ErrorCode::constraint_violation, "forcing function required");
  }
  const std::size_t n_steps = grid.N;
  const WeightTable table1 = weights_by_recurrence(scheme1, n_steps);
  const WeightTable table2 = weights_by_recurrence(scheme2, n_steps);
  const double c1 = std::pow(grid.h, scheme1.alpha);
  const double c2 = 2.0 * std::pow(grid.h, scheme2.alpha);

  CorrectionSet corr1, corr2;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  if (use_correction) {
    const ExponentSet exps1 = exponent_set(problem.mu, scheme1.alpha);
    const ExponentSet exps2 = exponent_set(problem.mu, scheme2.alpha);
    if (exps1.s() > 0) {
      corr1 = solve_starting_weights(table1, exps1, n_steps);
      s1 = corr1.s();
    }
    if (exps2.s() > 0) {
      corr2 = solve_starting_weights(table2, exps2, n_steps);
      s2 = corr2.s();
    }
  }
  const std::size_t s_star = std::max(s1, s2);

  std::vector<double> u(n_steps + 1, 0.0);  // u(0) = 0

  // The starting weights multiply u^1..u^s, which are themselves unknown for
  // the first s* steps; those steps form one dense linear system.
  if (s_star >= 1) {
    std::vector<double> head(s_star * s_star, 0.0);
    std::vector<double> rhs(s_star);
    for (std::size_t n = 1; n <= s_star; ++n) {
      for (std::size_t j = 1; j <= s_star; ++j) {
        double entry = 0.0;
        if (j <= n) {
          entry += c1 * table1.omega[n - j] + c2 * table2.omega[n - j];
        }
        if (j <= s1) entry += c1 * corr1.at(n, j);
        if (j <= s2) entry += c2 * corr2.at(n, j);
        if (j == n) entry += 2.0;
        head[(n - 1) * s_star + (j - 1)] = entry;
      }
      rhs[n - 1] = problem.f(grid.node(n));
    }
    const std::vector<double> head_solution =
        solve_dense(std::move(head), s_star, std::move(rhs));
    for (std::size_t n = 1; n <= s_star; ++n) {
      u[n] = head_solution[n - 1];
    }
  }

  const double denom = c1 * table1.omega[0] + c2 * table2.omega[0] + 2.0;
  if (std::abs(denom) < kStepTol) {
    throw Error(ErrorCode::step_singular,
                "implicit step denominator of the composite scheme vanishes");
  }
  for (std::size_t n = s_star + 1; n <= n_steps; ++n) {
    double history = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      history += (c1 * table1.omega[n - j] + c2 * table2.omega[n - j]) * u[j];
    }
    for (std::size_t j = 1; j <= s1; ++j) history += c1 * corr1.at(n, j) * u[j];
    for (std::size_t j = 1; j <= s2; ++j) history += c2 * corr2.at(n, j) * u[j];
    u[n] = (problem.f(grid.node(n)) - history) / denom;
  }

  SolveReport report{grid, std::move(u), std::nullopt};
  if (problem.exact) {
    double worst = 0.0;
    for (std::size_t n = 1; n <= n_steps; ++n) {
      worst = std::max(worst,
                       std::abs(report.numerical[n] - problem.exact(grid.node(n))));
    }
    report.max_error = worst;
  }
  return report;
}

ConvergenceTable convergence_table(ModelProblem problem, Family family,
                                   const std::vector<double>& alphas,
                                   const std::vector<ThetaPair>& thetas,
                                   const std::vector<Rational>& h_list,
                                   double mu, double L) {
  if (h_list.empty()) {
    throw Error(ErrorCode::constraint_violation,
                "at least one step size required");
  }
  for (const Rational& h : h_list) {
    if (h.num <= 0 || h.den <= 0) {
      throw Error(ErrorCode::constraint_violation,
                  "step sizes must be positive rationals");
    }
  }
  for (std::size_t k = 1; k < h_list.size(); ++k) {
    const bool halves = h_list[k - 1].num * h_list[k].den ==
                        2 * h_list[k].num * h_list[k - 1].den;
    if (!halves) {
      throw Error(ErrorCode::constraint_violation,
                  "step sizes must decrease by exact factors of 2");
    }
  }
  if (!(L > 0.0)) {
    throw Error(ErrorCode::constraint_violation, "interval length must be positive");
  }

  std::vector<std::size_t> step_counts(h_list.size());
  for (std::size_t k = 0; k < h_list.size(); ++k) {
    const double hv = h_list[k].value();
    const auto n = static_cast<long long>(std::llround(L / hv));
    if (n < 1 || std::abs(static_cast<double>(n) * hv - L) > 1e-9 * L) {
      throw Error(ErrorCode::constraint_violation,
                  "every step size must divide the interval length");
    }
    step_counts[k] = static_cast<std::size_t>(n);
  }

  ConvergenceTable out{problem, family, {}};
  const auto run_column = [&](double alpha, const ThetaPair& pair) {
    double previous = quiet_nan();
    for (std::size_t k = 0; k < h_list.size(); ++k) {
      const UniformGrid grid(L, step_counts[k]);
      double error = 0.0;
      if (problem == ModelProblem::caputo_linear) {
        const ThetaScheme scheme = make_scheme(family, -alpha, pair.theta1);
        error = *solve_caputo_linear(scheme, manufactured_caputo(alpha), grid)
                     .max_error;
      } else {
        const ThetaScheme first = make_scheme(family, -2.0, pair.theta1);
        const ThetaScheme second = make_scheme(family, -1.5, pair.theta2);
        error = *solve_bagley_torvik(first, second, manufactured_bagley(mu), grid)
                     .max_error;
      }
      double rate = quiet_nan();
      if (k > 0 && previous > 0.0 && error > 0.0) {
        rate = std::log2(previous / error);
      }
      out.cells.push_back(ConvergenceCell{alpha, pair, h_list[k], error, rate});
      previous = error;
    }
  };

  if (problem == ModelProblem::caputo_linear) {
    for (const double alpha : alphas) {
      for (const ThetaPair& pair : thetas) run_column(alpha, pair);
    }
  } else {
    for (const ThetaPair& pair : thetas) run_column(quiet_nan(), pair);
  }
  return out;
}

}  // namespace fractheta
