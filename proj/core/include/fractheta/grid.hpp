#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "fractheta/errors.hpp"

namespace fractheta {

/// Exact rational step size, kept as integers so that h-range chains like
/// 1/4, 1/8, ... carry no rounding and print reproducibly.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  [[nodiscard]] std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
  [[nodiscard]] bool operator==(const Rational&) const noexcept = default;
};

/// Uniform partition of [0, L] into N steps; nodes x_k = k*h, h = L/N.
struct UniformGrid {
  double L;
  std::size_t N;
  double h;

  UniformGrid(double length, std::size_t steps)
      : L(length), N(steps), h(length / static_cast<double>(steps)) {
    if (!(length > 0.0) || steps < 1) {
      throw Error(ErrorCode::constraint_violation,
                  "grid requires L > 0 and N >= 1");
    }
  }

  [[nodiscard]] double node(std::size_t k) const noexcept {
    return static_cast<double>(k) * h;
  }
};

}  // namespace fractheta
