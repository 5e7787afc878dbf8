#include <cubline/jacobian.hpp>

#include <cubline/errors.hpp>

#include <array>
#include <sstream>

namespace cubline {

ExactMatrix syzygy_matrix(const HomogeneousPoly& f, int r) {
  if (f.degree() < 1) throw DegreeUnderflow("syzygy matrix needs deg f >= 1");
  if (r < 0) throw DegreeUnderflow("syzygy matrix needs r >= 0");
  const int target = r + f.degree() - 1;
  const auto mults = monomial_basis(r);
  const std::size_t rows = static_cast<std::size_t>((target + 1) * (target + 2) / 2);
  const std::size_t block = mults.size();
  ExactMatrix M(rows, 3 * block);

  const std::array<HomogeneousPoly, 3> grad = {partial(f, Var::X), partial(f, Var::Y),
                                               partial(f, Var::Z)};
  for (int v = 0; v < 3; ++v) {
    for (std::size_t c = 0; c < block; ++c) {
      const Monomial& mu = mults[c];
      for (const auto& [mono, coef] : grad[static_cast<std::size_t>(v)].terms()) {
        const Monomial prod{mono.ex + mu.ex, mono.ey + mu.ey, mono.ez + mu.ez};
        M.at(static_cast<std::size_t>(monomial_index(prod)),
             static_cast<std::size_t>(v) * block + c) += coef;
      }
    }
  }
  return M;
}

int mdr(const HomogeneousPoly& f, RankPolicy policy) {
  if (f.degree() < 1) throw DegreeUnderflow("mdr needs deg f >= 1");
  for (int r = 0; r <= f.degree() - 1; ++r) {
    if (syzygy_matrix(f, r).kernel_dimension(policy) > 0) {
      if (r == 0) throw PartialsDependent("the partial derivatives are linearly dependent");
      return r;
    }
  }
  // Unreachable for nonzero f: a Koszul relation lives in degree deg f - 1.
  throw StabilizationFailure("no relation found through degree deg f - 1");
}

int hilbert_jacobian(const HomogeneousPoly& f, int t, RankPolicy policy) {
  if (f.degree() < 2) throw DegreeUnderflow("Jacobian Hilbert function needs deg f >= 2");
  if (t < 0) throw DegreeUnderflow("Jacobian Hilbert function needs t >= 0");
  const int dim_t = (t + 1) * (t + 2) / 2;
  const int r = t - f.degree() + 1;
  if (r < 0) return dim_t;
  return dim_t - static_cast<int>(syzygy_matrix(f, r).rank(policy));
}

long long total_tjurina_algebraic(const HomogeneousPoly& f, RankPolicy policy) {
  if (f.degree() < 2) throw DegreeUnderflow("Tjurina number needs deg f >= 2");
  const int start = 3 * (f.degree() - 2);
  const int cap = 5 * f.degree();
  int run = 0;
  int value = -1;
  for (int t = start; t <= cap; ++t) {
    const int h = hilbert_jacobian(f, t, policy);
    if (h == value) {
      if (++run == 3) return value;
    } else {
      value = h;
      run = 1;
    }
  }
  throw StabilizationFailure(
      "Jacobian Hilbert function did not stabilize; the singular locus is not isolated");
}

long long total_tjurina_combinatorial(const WeakCombinatorics& wc) {
  if (wc.n2 < 0 || wc.n3 < 0 || wc.t5 < 0) throw HypothesisViolated("negative point count");
  return wc.n2 + 4 * wc.n3 + 5 * wc.t5;
}

bool du_plessis_wall(int m, int d1, long long tau) {
  if (d1 < 0 || 2 * d1 > m - 1)
    throw MdrOutOfRange("freeness test needs 0 <= d1 <= (m-1)/2");
  const long long lhs = static_cast<long long>(m - 1) * (m - 1) -
                        static_cast<long long>(d1) * (m - d1 - 1);
  return lhs == tau;
}

std::string to_string(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::Free: return "Free";
    case FreenessVerdict::NotFree: return "NotFree";
    default: return "NotFreeByDegreeWindow";
  }
}

FreenessReport analyze(const HomogeneousPoly& f, std::optional<WeakCombinatorics> wc,
                       RankPolicy policy) {
  if (f.degree() < 3) throw DegreeUnderflow("analysis needs deg f >= 3");
  FreenessReport rep;
  rep.m = f.degree();
  rep.d1 = mdr(f, policy);
  rep.tau_algebraic = total_tjurina_algebraic(f, policy);
  if (wc) rep.tau_combinatorial = total_tjurina_combinatorial(*wc);
  rep.window = degree_window(rep.m);

  std::ostringstream reason;
  if (rep.window.empty()) {
    rep.verdict = FreenessVerdict::NotFreeByDegreeWindow;
    reason << "no curve of degree " << rep.m << " can be free: the exponent window ["
           << rep.window.lower << ", " << rep.window.upper << "] is empty";
  } else if (!rep.window.contains(rep.d1)) {
    rep.verdict = FreenessVerdict::NotFreeByDegreeWindow;
    reason << "mdr " << rep.d1 << " lies outside the exponent window [" << rep.window.lower
           << ", " << rep.window.upper << "]";
    if (rep.tau_algebraic == 0)
      reason << "; the curve is smooth, so the freeness question is vacuous";
  } else if (du_plessis_wall(rep.m, rep.d1, rep.tau_algebraic)) {
    rep.verdict = FreenessVerdict::Free;
    rep.exponents = {rep.d1, rep.m - 1 - rep.d1};
    reason << "mdr " << rep.d1 << " is admissible and (m-1)^2 - d1*(m-d1-1) = "
           << rep.tau_algebraic << " matches the total Tjurina number";
  } else {
    rep.verdict = FreenessVerdict::NotFree;
    const long long target = static_cast<long long>(rep.m - 1) * (rep.m - 1) -
                             static_cast<long long>(rep.d1) * (rep.m - rep.d1 - 1);
    reason << "mdr " << rep.d1 << " is admissible but the free value " << target
           << " differs from the total Tjurina number " << rep.tau_algebraic;
  }
  rep.reason = reason.str();
  return rep;
}

}  // namespace cubline
