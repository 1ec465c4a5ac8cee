#include "fractheta/linalg.hpp"

#include <cmath>
#include <utility>

#include "fractheta/errors.hpp"

namespace fractheta {

namespace {
constexpr double kPivotTol = 1e-13;
}

DenseLU::DenseLU(std::vector<double> a, std::size_t n)
    : lu_(std::move(a)), perm_(n), n_(n) {
  if (lu_.size() != n * n) {
    throw Error(ErrorCode::length_mismatch, "matrix storage is not n*n");
  }
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(lu_[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(lu_[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < kPivotTol) {
      throw Error(ErrorCode::singular_system,
                  "pivot below threshold during factorization");
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(lu_[piv * n + c], lu_[col * n + c]);
      }
      std::swap(perm_[piv], perm_[col]);
    }
    const double d = lu_[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = lu_[r * n + col] / d;
      lu_[r * n + col] = m;
      for (std::size_t c = col + 1; c < n; ++c) {
        lu_[r * n + c] -= m * lu_[col * n + c];
      }
    }
  }
}

std::vector<double> DenseLU::solve(std::vector<double> rhs) const {
  if (rhs.size() != n_) {
    throw Error(ErrorCode::length_mismatch, "rhs length does not match matrix");
  }
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
  for (std::size_t r = 1; r < n_; ++r) {
    double acc = x[r];
    for (std::size_t c = 0; c < r; ++c) acc -= lu_[r * n_ + c] * x[c];
    x[r] = acc;
  }
  for (std::size_t ri = n_; ri-- > 0;) {
    double acc = x[ri];
    for (std::size_t c = ri + 1; c < n_; ++c) acc -= lu_[ri * n_ + c] * x[c];
    x[ri] = acc / lu_[ri * n_ + ri];
  }
  return x;
}

std::vector<double> solve_dense(std::vector<double> a, std::size_t n,
                                std::vector<double> rhs) {
  return DenseLU(std::move(a), n).solve(std::move(rhs));
}

}  // namespace fractheta
