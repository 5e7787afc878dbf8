#include <cubline/exact_matrix.hpp>

#include <cubline/errors.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace cubline {

namespace {

// Three fixed 31-bit primes for the modular path. Keeping them compile-time
// constants lets the compiler strength-reduce the % in the hot loop.
constexpr std::uint64_t kPrimes[3] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

template <std::uint64_t P>
std::size_t rank_mod(std::vector<std::uint64_t> m, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const std::uint64_t inv = pow_mod(m[rank * cols + col], P - 2, P);
    std::uint64_t* prow = &m[rank * cols];
    for (std::size_t j = col; j < cols; ++j) prow[j] = prow[j] * inv % P;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* row = &m[i * cols];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      const std::uint64_t neg = P - f;
      row[col] = 0;
      for (std::size_t j = col + 1; j < cols; ++j) {
        // prow[j] < P and neg < P, so the product stays below 2^62.
        row[j] = (row[j] + neg * prow[j]) % P;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw ParseError("vector length does not match column count");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc(0);
    const Rational* row = &a_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] != 0 && v[j] != 0) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

std::size_t ExactMatrix::rank_exact() const {
  // Clear denominators row by row, then run fraction-free (Bareiss)
  // elimination with full pivoting; every intermediate entry is a minor
  // of the integer matrix, so the division below is exact.
  const std::size_t n = rows_, m = cols_;
  std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(m));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm_den = 1;
    for (std::size_t j = 0; j < m; ++j)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              a_[i * m + j].get_den().get_mpz_t());
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& q = a_[i * m + j];
      M[i][j] = q.get_num() * (lcm_den / q.get_den());
    }
  }

  std::vector<std::size_t> colp(m);
  std::iota(colp.begin(), colp.end(), 0);

  mpz_class prev = 1;
  std::size_t r = 0;
  while (r < n && r < m) {
    // Smallest nonzero entry (by bit size) as pivot keeps growth down.
    std::size_t pi = n, pj = m;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = r; j < m; ++j) {
        const mpz_class& e = M[i][colp[j]];
        if (e == 0) continue;
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        if (pi == n || bits < best_bits) {
          pi = i;
          pj = j;
          best_bits = bits;
        }
      }
    if (pi == n) break;
    std::swap(M[r], M[pi]);
    std::swap(colp[r], colp[pj]);

    const mpz_class& piv = M[r][colp[r]];
    mpz_class t;
    for (std::size_t i = r + 1; i < n; ++i) {
      const mpz_class head = M[i][colp[r]];
      M[i][colp[r]] = 0;
      for (std::size_t j = r + 1; j < m; ++j) {
        mpz_class& e = M[i][colp[j]];
        t = e * piv;
        if (head != 0) t -= head * M[r][colp[j]];
        if (prev == 1)
          e = t;
        else
          mpz_divexact(e.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::size_t ExactMatrix::rank_modular() const {
  std::size_t agreed = 0;
  bool have = false;
  for (const std::uint64_t p : kPrimes) {
    std::vector<std::uint64_t> m(rows_ * cols_);
    bool ok = true;
    for (std::size_t idx = 0; idx < a_.size() && ok; ++idx) {
      const Rational& q = a_[idx];
      const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
      if (den == 0) {
        ok = false;  // denominator divisible by p: this prime is unusable
        break;
      }
      const std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
      m[idx] = num * pow_mod(den, p - 2, p) % p;
    }
    if (!ok) return rank_exact();
    std::size_t rk;
    switch (p) {
      case kPrimes[0]: rk = rank_mod<kPrimes[0]>(std::move(m), rows_, cols_); break;
      case kPrimes[1]: rk = rank_mod<kPrimes[1]>(std::move(m), rows_, cols_); break;
      default: rk = rank_mod<kPrimes[2]>(std::move(m), rows_, cols_); break;
    }
    if (have && rk != agreed) return rank_exact();
    agreed = rk;
    have = true;
  }
  return agreed;
}

std::size_t ExactMatrix::rank(RankPolicy policy) const {
  if (rows_ == 0 || cols_ == 0) return 0;
  switch (policy) {
    case RankPolicy::Exact: return rank_exact();
    case RankPolicy::Modular: return rank_modular();
    case RankPolicy::Auto: break;
  }
  // Threshold picked so every degree <= 9 arrangement stays on the exact
  // path; only the large stabilization-degree matrices go modular.
  return std::min(rows_, cols_) <= 320 ? rank_exact() : rank_modular();
}

std::size_t ExactMatrix::kernel_dimension(RankPolicy policy) const {
  return cols_ - rank(policy);
}

std::size_t kernel_dimension(const ExactMatrix& M, RankPolicy policy) {
  return M.kernel_dimension(policy);
}

}  // namespace cubline
