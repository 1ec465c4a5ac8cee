#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "fractheta/correction.hpp"
#include "fractheta/grid.hpp"
#include "fractheta/scheme.hpp"

namespace fractheta {

/// Linear fractional initial-value problem: the order-alpha Caputo
/// derivative of u equals u + f(x) on (0, L], u(0) = u0, alpha in (0, 1).
struct CaputoProblem {
  double alpha;
  std::function<double(double)> f;
  std::function<double(double)> exact;  // optional reference solution
  double u0 = 0.0;
};

/// Linear Abel integral equation of the second kind:
/// u = f + lambda * (fractional integral of order alpha of u), alpha in (0,1).
struct AbelProblem {
  double alpha;
  std::complex<double> lambda;
  std::function<double(double)> f;
};

/// Forced oscillator with a half-order damping term:
/// u'' + 2 * (Caputo derivative of order 3/2 of u) + 2u = f(x),
/// u(0) = u'(0) = 0. mu declares the leading exponent of the solution and
/// drives the correction sets even when f is supplied directly.
struct BagleyTorvikProblem {
  double mu = 1.1;
  std::function<double(double)> f;
  std::function<double(double)> exact;  // optional reference solution
};

/// Problem whose exact solution is x^mu + x^5, with f assembled accordingly.
[[nodiscard]] BagleyTorvikProblem manufactured_bagley(double mu);

struct SolveReport {
  UniformGrid grid;
  std::vector<double> numerical;      // u^0..u^N
  std::optional<double> max_error;    // max_{1<=n<=N} |U^n - u(x_n)| when exact known
};

struct AbelReport {
  UniformGrid grid;
  std::vector<std::complex<double>> numerical;
};

/// Manufactured Caputo problem with exact solution u = 1 + x^3.
[[nodiscard]] CaputoProblem manufactured_caputo(double alpha);

/// Implicit stepping for CaputoProblem with a differentiation scheme of
/// order -problem.alpha. Shifts to v = u - u0 (zero-initialized) and solves
/// one scalar equation per step. No correction terms are needed: the shifted
/// solution's leading exponent lies above the correction cutoff for every
/// alpha in (0, 1). Throws Error(step_singular) when |h^-alpha omega_0 - 1|
/// falls below 1e-13.
[[nodiscard]] SolveReport solve_caputo_linear(const ThetaScheme& scheme,
                                              const CaputoProblem& problem,
                                              const UniformGrid& grid);

/// Implicit stepping for AbelProblem with an integration scheme of order
/// +problem.alpha. The trajectory is complex whenever lambda is.
/// Throws Error(step_singular) when |1 - lambda h^alpha omega_0| < 1e-13.
[[nodiscard]] AbelReport solve_abel(const ThetaScheme& scheme,
                                    const AbelProblem& problem,
                                    const UniformGrid& grid);

/// Two corrected differentiation quadratures (orders -2 and -3/2, schemes
/// scheme1 and scheme2 respectively) discretize the two derivative terms;
/// each gets its own correction set built from beta = mu at its order.
/// Starting weights couple the first s* = max(s1, s2) unknowns, which are
/// solved as one dense system; every later step is a scalar implicit solve.
/// Throws Error(step_singular) / Error(singular_system) on breakdown.
[[nodiscard]] SolveReport solve_bagley_torvik(const ThetaScheme& scheme1,
                                              const ThetaScheme& scheme2,
                                              const BagleyTorvikProblem& problem,
                                              const UniformGrid& grid,
                                              bool use_correction = true);

enum class ModelProblem { caputo_linear, bagley_torvik };

[[nodiscard]] constexpr const char* to_string(ModelProblem p) noexcept {
  return p == ModelProblem::caputo_linear ? "caputo" : "bagley";
}

/// Scheme parameters for one table column; theta2 participates only in the
/// two-operator problem.
struct ThetaPair {
  double theta1;
  double theta2 = 0.0;
};

struct ConvergenceCell {
  double alpha;  // operator order for the single-operator problem; NaN otherwise
  ThetaPair thetas;
  Rational h;
  double error;
  double rate;  // log2(E(2h)/E(h)); NaN for the coarsest h or when E = 0
};

struct ConvergenceTable {
  ModelProblem problem;
  Family family;
  std::vector<ConvergenceCell> cells;  // ordered by (alpha, theta, h)
};

/// Max-error convergence study across a parameter grid. For caputo_linear
/// the cells span alphas x thetas x h_list (theta2 ignored); for
/// bagley_torvik they span thetas x h_list with alphas unused.
/// h_list must decrease by exact factors of 2.
[[nodiscard]] ConvergenceTable convergence_table(
    ModelProblem problem, Family family, const std::vector<double>& alphas,
    const std::vector<ThetaPair>& thetas, const std::vector<Rational>& h_list,
    double mu = 1.1, double L = 1.0);

}  // namespace fractheta
