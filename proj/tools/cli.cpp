#include "cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fractheta/correction.hpp"
#include "fractheta/errors.hpp"
#include "fractheta/quadrature.hpp"
#include "fractheta/scheme.hpp"
#include "fractheta/solvers.hpp"
#include "fractheta/stability.hpp"
#include "fractheta/weights.hpp"

namespace fractheta::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sci17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string sci6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string compact(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

[[noreturn]] void bad_range(const std::string& what) {
  throw Error(ErrorCode::malformed_range, what);
}

std::int64_t parse_positive_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    bad_range("'" + text + "' is not an integer");
  }
  if (used != text.size() || value <= 0 || value > 1000000000) {
    bad_range("'" + text + "' is not a positive integer below 1e9");
  }
  return value;
}

Rational parse_rational(const std::string& token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string::npos) {
    return Rational{parse_positive_int(token), 1};
  }
  if (token.find('/', slash + 1) != std::string::npos) {
    bad_range("'" + token + "' has more than one '/'");
  }
  return Rational{parse_positive_int(token.substr(0, slash)),
                  parse_positive_int(token.substr(slash + 1))};
}

Rational halved(const Rational& h) {
  return h.num % 2 == 0 ? Rational{h.num / 2, h.den}
                        : Rational{h.num, 2 * h.den};
}

Family parse_family(const std::string& name) {
  return name == "bt" ? Family::bt : Family::bn;
}

std::complex<double> parse_lambda(const std::string& text) {
  const auto fail = [&text]() -> double {
    throw Error(ErrorCode::constraint_violation,
                "lambda must be 're' or 're,im', got '" + text + "'");
  };
  const auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != part.size()) return fail();
    return value;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    return {to_double(text), 0.0};
  }
  return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::constraint_violation,
                "cannot open output file '" + out_path + "'");
  }
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

UniformGrid resolve_grid(std::optional<std::size_t> n,
                         const std::optional<std::string>& h_token, double L) {
  if (n.has_value() == h_token.has_value()) {
    throw Error(ErrorCode::constraint_violation,
                "provide exactly one of --n and --h");
  }
  if (n) {
    return UniformGrid(L, *n);
  }
  const Rational h = parse_rational(*h_token);
  const double hv = h.value();
  const auto steps = static_cast<long long>(std::llround(L / hv));
  if (steps < 1 || std::abs(static_cast<double>(steps) * hv - L) > 1e-9 * L) {
    throw Error(ErrorCode::constraint_violation,
                "step size must divide the interval length");
  }
  return UniformGrid(L, static_cast<std::size_t>(steps));
}

ordered_json scheme_json(const ThetaScheme& scheme) {
  return ordered_json{{"family", to_string(scheme.family)},
                      {"alpha", scheme.alpha},
                      {"theta", scheme.theta}};
}

ordered_json grid_json(const UniformGrid& grid) {
  return ordered_json{{"L", grid.L}, {"N", grid.N}, {"h", grid.h}};
}

struct WeightsParams {
  std::string family;
  double alpha = 0.0;
  double theta = 0.0;
  std::size_t n = 0;
};

std::string run_weights(const WeightsParams& p, const std::string& format) {
  const ThetaScheme scheme = make_scheme(parse_family(p.family), p.alpha, p.theta);
  const WeightTable table = weights_by_recurrence(scheme, p.n);
  if (format == "json") {
    ordered_json doc{{"command", "weights"}, {"scheme", scheme_json(scheme)},
                     {"n", p.n}, {"omega", table.omega}};
    return doc.dump(2) + "\n";
  }
  std::string out = "j,omega\n";
  for (std::size_t j = 0; j < table.omega.size(); ++j) {
    out += std::to_string(j) + "," + sci17(table.omega[j]) + "\n";
  }
  return out;
}

struct CorrectionsParams {
  std::string family;
  double alpha = 0.0;
  double theta = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
};

std::string run_corrections(const CorrectionsParams& p, const std::string& format) {
  const ThetaScheme scheme = make_scheme(parse_family(p.family), p.alpha, p.theta);
  const ExponentSet exps = exponent_set(p.beta, p.alpha);
  std::optional<CorrectionSet> corr;
  if (exps.s() > 0) {
    const WeightTable table = weights_by_recurrence(scheme, p.n);
    corr = solve_starting_weights(table, exps, p.n);
  }
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    if (corr) {
      for (std::size_t n = 0; n <= corr->n_max; ++n) {
        for (std::size_t j = 1; j <= corr->s(); ++j) {
          rows.push_back(ordered_json{{"n", n}, {"j", j},
                                      {"omega_nj", corr->at(n, j)}});
        }
      }
    }
    ordered_json doc{{"command", "corrections"},
                     {"scheme", scheme_json(scheme)},
                     {"beta", p.beta},
                     {"exponents", exps.exponents},
                     {"max_residual", corr ? corr->max_residual : 0.0},
                     {"rows", rows}};
    return doc.dump(2) + "\n";
  }
  std::string out = "n,j,omega_nj\n";
  if (corr) {
    for (std::size_t n = 0; n <= corr->n_max; ++n) {
      for (std::size_t j = 1; j <= corr->s(); ++j) {
        out += std::to_string(n) + "," + std::to_string(j) + "," +
               sci17(corr->at(n, j)) + "\n";
      }
    }
  }
  return out;
}

struct SolveParams {
  std::string example;
  std::string family;
  double alpha = 0.5;
  double theta = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double mu = 1.1;
  std::string lambda = "-1";
  double L = 1.0;
  std::optional<std::size_t> n;
  std::optional<std::string> h;
  std::string correction = "auto";
};

std::string trajectory_csv(const UniformGrid& grid,
                           const std::vector<double>& numerical,
                           const std::function<double(double)>& exact) {
  std::string out = "n,x,u_num,u_exact,abs_err\n";
  for (std::size_t n = 0; n < numerical.size(); ++n) {
    const double x = grid.node(n);
    out += std::to_string(n) + "," + sci17(x) + "," + sci17(numerical[n]);
    if (exact) {
      const double reference = exact(x);
      out += "," + sci17(reference) + "," + sci17(std::abs(numerical[n] - reference));
    } else {
      out += ",nan,nan";
    }
    out += "\n";
  }
  return out;
}

std::string run_solve(const SolveParams& p, const std::string& format) {
  const Family family = parse_family(p.family);
  const bool want_correction =
      p.correction == "on" ||
      (p.correction == "auto" && p.example == "bagley");
  if (want_correction && p.example != "bagley") {
    throw Error(ErrorCode::constraint_violation,
                "--correction on applies only to the bagley example");
  }
  const UniformGrid grid = resolve_grid(p.n, p.h, p.L);

  if (p.example == "abel") {
    const ThetaScheme scheme = make_scheme(family, p.alpha, p.theta);
    const AbelProblem problem{p.alpha, parse_lambda(p.lambda),
                              [](double) { return 1.0; }};
    const AbelReport report = solve_abel(scheme, problem, grid);
    if (format == "json") {
      ordered_json rows = ordered_json::array();
      for (std::size_t n = 0; n < report.numerical.size(); ++n) {
        rows.push_back(ordered_json{{"n", n},
                                    {"x", grid.node(n)},
                                    {"re", report.numerical[n].real()},
                                    {"im", report.numerical[n].imag()}});
      }
      ordered_json doc{{"command", "solve"}, {"example", "abel"},
                       {"scheme", scheme_json(scheme)},
                       {"lambda", {{"re", problem.lambda.real()},
                                   {"im", problem.lambda.imag()}}},
                       {"grid", grid_json(grid)}, {"trajectory", rows}};
      return doc.dump(2) + "\n";
    }
    std::string out = "n,x,u_num,u_exact,abs_err\n";
    for (std::size_t n = 0; n < report.numerical.size(); ++n) {
      out += std::to_string(n) + "," + sci17(grid.node(n)) + "," +
             sci17(report.numerical[n].real()) + ",nan,nan\n";
    }
    return out;
  }

  if (p.example == "caputo") {
    const ThetaScheme scheme = make_scheme(family, -p.alpha, p.theta);
    const CaputoProblem problem = manufactured_caputo(p.alpha);
    const SolveReport report = solve_caputo_linear(scheme, problem, grid);
    if (format == "json") {
      ordered_json rows = ordered_json::array();
      for (std::size_t n = 0; n < report.numerical.size(); ++n) {
        const double x = grid.node(n);
        rows.push_back(ordered_json{{"n", n}, {"x", x},
                                    {"u_num", report.numerical[n]},
                                    {"u_exact", problem.exact(x)}});
      }
      ordered_json doc{{"command", "solve"}, {"example", "caputo"},
                       {"scheme", scheme_json(scheme)},
                       {"grid", grid_json(grid)},
                       {"max_error", *report.max_error}, {"trajectory", rows}};
      return doc.dump(2) + "\n";
    }
    return trajectory_csv(grid, report.numerical, problem.exact);
  }

  const ThetaScheme first = make_scheme(family, -2.0, p.theta1);
  const ThetaScheme second = make_scheme(family, -1.5, p.theta2);
  const BagleyTorvikProblem problem = manufactured_bagley(p.mu);
  const SolveReport report =
      solve_bagley_torvik(first, second, problem, grid, want_correction);
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 0; n < report.numerical.size(); ++n) {
      const double x = grid.node(n);
      rows.push_back(ordered_json{{"n", n}, {"x", x},
                                  {"u_num", report.numerical[n]},
                                  {"u_exact", problem.exact(x)}});
    }
    ordered_json doc{{"command", "solve"}, {"example", "bagley"},
                     {"schemes", {scheme_json(first), scheme_json(second)}},
                     {"mu", p.mu}, {"correction", want_correction},
                     {"grid", grid_json(grid)},
                     {"max_error", *report.max_error}, {"trajectory", rows}};
    return doc.dump(2) + "\n";
  }
  return trajectory_csv(grid, report.numerical, problem.exact);
}

struct TableParams {
  std::string example;
  std::string family;
  std::vector<double> alphas;
  std::vector<double> thetas;
  std::vector<double> theta1s;
  std::vector<double> theta2s;
  std::string h_spec;
  double mu = 1.1;
  double L = 1.0;
};

std::string run_table(const TableParams& p, const std::string& format) {
  const Family family = parse_family(p.family);
  const std::vector<Rational> h_list = parse_h_list(p.h_spec);
  const bool caputo = p.example == "caputo";

  std::vector<ThetaPair> pairs;
  if (caputo) {
    if (p.alphas.empty() || p.thetas.empty()) {
      throw Error(ErrorCode::constraint_violation,
                  "caputo tables need --alphas and --thetas");
    }
    for (const double t : p.thetas) pairs.push_back(ThetaPair{t, 0.0});
  } else {
    if (p.theta1s.empty() || p.theta1s.size() != p.theta2s.size()) {
      throw Error(ErrorCode::constraint_violation,
                  "bagley tables need --theta1 and --theta2 of equal length");
    }
    for (std::size_t i = 0; i < p.theta1s.size(); ++i) {
      pairs.push_back(ThetaPair{p.theta1s[i], p.theta2s[i]});
    }
  }

  const ConvergenceTable table = convergence_table(
      caputo ? ModelProblem::caputo_linear : ModelProblem::bagley_torvik,
      family, p.alphas, pairs, h_list, p.mu, p.L);
  const std::size_t column = h_list.size();

  if (format == "json") {
    ordered_json cells = ordered_json::array();
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
      const ConvergenceCell& cell = table.cells[i];
      ordered_json row;
      if (caputo) {
        row["alpha"] = cell.alpha;
        row["theta"] = cell.thetas.theta1;
      } else {
        row["theta1"] = cell.thetas.theta1;
        row["theta2"] = cell.thetas.theta2;
      }
      row["h"] = cell.h.str();
      row["error"] = cell.error;
      row["rate"] = i % column == 0 || std::isnan(cell.rate)
                        ? ordered_json(nullptr)
                        : ordered_json(cell.rate);
      cells.push_back(std::move(row));
    }
    ordered_json doc{{"command", "table"}, {"example", p.example},
                     {"family", to_string(family)}, {"L", p.L}};
    if (!caputo) doc["mu"] = p.mu;
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
  }

  std::string out = "alpha,thetas,h,error,rate\n";
  for (std::size_t i = 0; i < table.cells.size(); ++i) {
    const ConvergenceCell& cell = table.cells[i];
    const std::string alpha_field = caputo ? compact(cell.alpha) : "-2;-1.5";
    const std::string theta_field =
        caputo ? compact(cell.thetas.theta1)
               : compact(cell.thetas.theta1) + ";" + compact(cell.thetas.theta2);
    std::string rate_field;
    if (i % column != 0) {
      rate_field = std::isnan(cell.rate) ? "nan" : sci6(cell.rate);
    }
    out += alpha_field + "," + theta_field + "," + cell.h.str() + "," +
           sci6(cell.error) + "," + rate_field + "\n";
  }
  return out;
}

struct RegionParams {
  std::string family;
  double alpha = 0.0;
  double theta = 0.0;
  std::size_t samples = 4096;
};

std::string run_region(const RegionParams& p, const std::string& format) {
  const ThetaScheme scheme = make_scheme(parse_family(p.family), p.alpha, p.theta);
  const BoundaryCurve curve = boundary_curve(scheme, p.samples);
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const BoundarySample& sample : curve.samples) {
      rows.push_back(ordered_json{{"phi", sample.phi},
                                  {"re", sample.z.real()},
                                  {"im", sample.z.imag()}});
    }
    ordered_json doc{{"command", "region"}, {"scheme", scheme_json(scheme)},
                     {"appended_origin", curve.appended_origin},
                     {"omitted_infinite_limit", curve.omitted_infinite_limit},
                     {"samples", rows}};
    return doc.dump(2) + "\n";
  }
  std::string out = "phi,re_z,im_z\n";
  for (const BoundarySample& sample : curve.samples) {
    out += sci17(sample.phi) + "," + sci17(sample.z.real()) + "," +
           sci17(sample.z.imag()) + "\n";
  }
  return out;
}

struct CheckParams {
  std::string family;
  double alpha = 0.0;
  double theta = 0.0;
  std::optional<double> vartheta;
  std::size_t samples = 4096;
};

std::string run_check(const CheckParams& p, const std::string& format) {
  const ThetaScheme scheme = make_scheme(parse_family(p.family), p.alpha, p.theta);
  double vartheta = 0.0;
  if (p.vartheta) {
    vartheta = *p.vartheta;
  } else if (p.alpha > 0.0) {
    vartheta = (1.0 - p.alpha / 2.0) * std::numbers::pi;
  } else {
    throw Error(ErrorCode::constraint_violation,
                "--vartheta is required when alpha <= 0");
  }
  const BoundaryCurve curve = boundary_curve(scheme, p.samples);
  const SectorVerdict verdict = a_theta_check(curve, vartheta);
  if (format == "json") {
    ordered_json doc{{"command", "check-stability"},
                     {"scheme", scheme_json(scheme)},
                     {"vartheta", vartheta},
                     {"advisory", scheme.stability_advisory},
                     {"verdict", verdict.violation ? "violation" : "stable-evidence"}};
    if (verdict.violation) {
      doc["phi"] = verdict.phi;
      doc["z"] = ordered_json{{"re", verdict.z.real()}, {"im", verdict.z.imag()}};
    } else {
      doc["phi"] = nullptr;
      doc["z"] = nullptr;
    }
    return doc.dump(2) + "\n";
  }
  std::string out = "verdict,phi,re_z,im_z\n";
  if (verdict.violation) {
    out += "violation," + sci17(verdict.phi) + "," + sci17(verdict.z.real()) +
           "," + sci17(verdict.z.imag()) + "\n";
  } else {
    out += "stable-evidence,nan,nan,nan\n";
  }
  return out;
}

}  // namespace

std::vector<Rational> parse_h_list(const std::string& spec) {
  if (spec.empty()) bad_range("empty step-size specification");
  std::vector<Rational> out;
  const std::size_t dots = spec.find("..");
  if (dots != std::string::npos) {
    if (spec.find(',') != std::string::npos ||
        spec.find("..", dots + 2) != std::string::npos) {
      bad_range("a range cannot be combined with further entries");
    }
    const Rational coarse = parse_rational(spec.substr(0, dots));
    const Rational fine = parse_rational(spec.substr(dots + 2));
    // The ratio coarse/fine must be an exact power of 2.
    const std::int64_t numerator = coarse.num * fine.den;
    const std::int64_t denominator = coarse.den * fine.num;
    if (numerator % denominator != 0) {
      bad_range("range endpoints are not related by a power of 2");
    }
    std::int64_t ratio = numerator / denominator;
    if (ratio < 1 || (ratio & (ratio - 1)) != 0) {
      bad_range("range endpoints are not related by a power of 2");
    }
    Rational h = coarse;
    out.push_back(h);
    while (ratio > 1) {
      h = halved(h);
      out.push_back(h);
      ratio /= 2;
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string token =
        spec.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    out.push_back(parse_rational(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(std::vector<std::string> args) {
  CLI::App app{"fractional theta-method convolution quadrature toolkit"};
  app.require_subcommand(1);
  // --h is a step-size option below, so help must not claim the short -h.
  app.set_help_flag("--help", "print usage");

  std::string out_path;
  std::string format = "csv";
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_scheme_options = [](CLI::App* cmd, std::string& family,
                                     double& alpha, double& theta) {
    cmd->add_option("--family", family, "weight family")
        ->required()
        ->check(CLI::IsMember({"bt", "bn"}));
    cmd->add_option("--alpha", alpha, "operator order")->required();
    cmd->add_option("--theta", theta, "scheme parameter")->required();
  };

  WeightsParams weights_params;
  CLI::App* weights_cmd =
      app.add_subcommand("weights", "dump convolution weights omega_0..omega_n");
  add_scheme_options(weights_cmd, weights_params.family, weights_params.alpha,
                     weights_params.theta);
  weights_cmd->add_option("--n", weights_params.n, "largest weight index")
      ->required();
  add_output(weights_cmd);

  CorrectionsParams corrections_params;
  CLI::App* corrections_cmd = app.add_subcommand(
      "corrections", "dump starting weights for a singular leading exponent");
  add_scheme_options(corrections_cmd, corrections_params.family,
                     corrections_params.alpha, corrections_params.theta);
  corrections_cmd
      ->add_option("--beta", corrections_params.beta, "leading exponent")
      ->required();
  corrections_cmd->add_option("--n", corrections_params.n, "largest row index")
      ->required();
  add_output(corrections_cmd);

  SolveParams solve_params;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "run one built-in model problem");
  solve_cmd->add_option("--example", solve_params.example, "model problem")
      ->required()
      ->check(CLI::IsMember({"caputo", "abel", "bagley"}));
  solve_cmd->add_option("--family", solve_params.family, "weight family")
      ->required()
      ->check(CLI::IsMember({"bt", "bn"}));
  solve_cmd->add_option("--alpha", solve_params.alpha,
                        "order for caputo/abel examples");
  solve_cmd->add_option("--theta", solve_params.theta,
                        "scheme parameter for caputo/abel examples");
  solve_cmd->add_option("--theta1", solve_params.theta1,
                        "second-derivative scheme parameter (bagley)");
  solve_cmd->add_option("--theta2", solve_params.theta2,
                        "damping-term scheme parameter (bagley)");
  solve_cmd->add_option("--mu", solve_params.mu,
                        "leading solution exponent (bagley)");
  solve_cmd->add_option("--lambda", solve_params.lambda,
                        "abel coefficient, 're' or 're,im'");
  solve_cmd->add_option("--L", solve_params.L, "interval length");
  solve_cmd->add_option("--n", solve_params.n, "number of steps");
  solve_cmd->add_option("--h", solve_params.h, "step size as a rational");
  solve_cmd->add_option("--correction", solve_params.correction,
                        "starting-weight correction switch")
      ->check(CLI::IsMember({"on", "off", "auto"}));
  add_output(solve_cmd);

  TableParams table_params;
  CLI::App* table_cmd =
      app.add_subcommand("table", "max-error convergence table");
  table_cmd->add_option("--example", table_params.example, "model problem")
      ->required()
      ->check(CLI::IsMember({"caputo", "bagley"}));
  table_cmd->add_option("--family", table_params.family, "weight family")
      ->required()
      ->check(CLI::IsMember({"bt", "bn"}));
  table_cmd->add_option("--alpha,--alphas", table_params.alphas,
                        "derivative orders (caputo)")
      ->delimiter(',');
  table_cmd->add_option("--theta,--thetas", table_params.thetas,
                        "scheme parameters (caputo)")
      ->delimiter(',');
  table_cmd->add_option("--theta1", table_params.theta1s,
                        "second-derivative scheme parameters (bagley)")
      ->delimiter(',');
  table_cmd->add_option("--theta2", table_params.theta2s,
                        "damping-term scheme parameters (bagley)")
      ->delimiter(',');
  table_cmd->add_option("--h", table_params.h_spec, "step sizes, e.g. 1/4..1/64")
      ->required();
  table_cmd->add_option("--mu", table_params.mu,
                        "leading solution exponent (bagley)");
  table_cmd->add_option("--L", table_params.L, "interval length");
  add_output(table_cmd);

  RegionParams region_params;
  CLI::App* region_cmd =
      app.add_subcommand("region", "stability-region boundary curve");
  add_scheme_options(region_cmd, region_params.family, region_params.alpha,
                     region_params.theta);
  region_cmd->add_option("--samples", region_params.samples,
                         "number of boundary samples");
  add_output(region_cmd);

  CheckParams check_params;
  CLI::App* check_cmd = app.add_subcommand(
      "check-stability", "sector-inclusion verdict for one scheme");
  add_scheme_options(check_cmd, check_params.family, check_params.alpha,
                     check_params.theta);
  check_cmd->add_option("--vartheta", check_params.vartheta,
                        "sector half-angle in radians "
                        "(default for alpha > 0: (1 - alpha/2) pi)");
  check_cmd->add_option("--samples", check_params.samples,
                        "number of boundary samples");
  add_output(check_cmd);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fractheta");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::string artifact;
    if (app.got_subcommand(weights_cmd)) {
      artifact = run_weights(weights_params, format);
    } else if (app.got_subcommand(corrections_cmd)) {
      artifact = run_corrections(corrections_params, format);
    } else if (app.got_subcommand(solve_cmd)) {
      artifact = run_solve(solve_params, format);
    } else if (app.got_subcommand(table_cmd)) {
      artifact = run_table(table_params, format);
    } else if (app.got_subcommand(region_cmd)) {
      artifact = run_region(region_params, format);
    } else {
      artifact = run_check(check_params, format);
    }
    emit(artifact, out_path);
    return 0;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}

}  // namespace fractheta::cli
