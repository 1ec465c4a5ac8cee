#pragma once

#include <cstddef>
#include <vector>

namespace fractheta {

/// LU factorization with partial pivoting of a small dense square matrix,
/// factored once and reused across many right-hand sides.
/// Throws Error(singular_system) when a pivot magnitude drops below 1e-13.
class DenseLU {
 public:
  /// a is row-major n x n; consumed by the factorization.
  DenseLU(std::vector<double> a, std::size_t n);

  [[nodiscard]] std::vector<double> solve(std::vector<double> rhs) const;
  [[nodiscard]] std::size_t size() const noexcept { return n_; }

 private:
  std::vector<double> lu_;
  std::vector<std::size_t> perm_;
  std::size_t n_;
};

/// One-shot convenience wrapper around DenseLU.
[[nodiscard]] std::vector<double> solve_dense(std::vector<double> a,
                                              std::size_t n,
                                              std::vector<double> rhs);

}  // namespace fractheta
