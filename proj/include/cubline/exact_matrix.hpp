#pragma once

#include <cubline/rational.hpp>

#include <cstddef>
#include <vector>

namespace cubline {

// How rank is computed. Exact is fraction-free integer elimination and is
// always authoritative. Modular runs the elimination modulo several fixed
// word-size primes and requires full agreement; it can only ever
// underestimate the rational rank, and on disagreement it falls back to
// Exact. Auto picks Modular above a size threshold.
enum class RankPolicy { Auto, Exact, Modular };

class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::size_t rank(RankPolicy policy = RankPolicy::Auto) const;
  std::size_t kernel_dimension(RankPolicy policy = RankPolicy::Auto) const;

  // Image of a rational column vector, for kernel-membership checks.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
  std::size_t rank_exact() const;
  std::size_t rank_modular() const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> a_;
};

// Dimension of the null space: cols - rank.
std::size_t kernel_dimension(const ExactMatrix& M, RankPolicy policy = RankPolicy::Auto);

}  // namespace cubline
