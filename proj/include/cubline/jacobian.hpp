#pragma once

#include <cubline/combinatorics.hpp>
#include <cubline/exact_matrix.hpp>
#include <cubline/poly.hpp>

#include <optional>
#include <string>
#include <utility>

namespace cubline {

// Matrix of the map S_r^3 -> S_{r + deg f - 1}, (a,b,c) |-> a f_x + b f_y + c f_z,
// over the monomial bases. Columns come in three blocks (the a, b and c
// multipliers), each in monomial_basis(r) order. Its kernel consists of the
// degree-r relations among the partials. Requires deg f >= 1.
ExactMatrix syzygy_matrix(const HomogeneousPoly& f, int r);

// Minimal degree of a relation among f_x, f_y, f_z. Scans r = 0, 1, ...;
// a degree-0 relation means the partials are linearly dependent and raises
// PartialsDependent. The Koszul relations guarantee termination by
// r = deg f - 1.
int mdr(const HomogeneousPoly& f, RankPolicy policy = RankPolicy::Auto);

// dim (S / J_f)_t where J_f is the ideal of the partials: dim S_t minus the
// rank of the degree-(t - deg f + 1) multiples of the partials. Requires
// deg f >= 2 and t >= 0.
int hilbert_jacobian(const HomogeneousPoly& f, int t, RankPolicy policy = RankPolicy::Auto);

// The stable value of t |-> hilbert_jacobian(f, t): scanning from
// t = 3 (deg f - 2), returns the first value attained three times in a row.
// Throws StabilizationFailure if none appears by t = 5 deg f, which is the
// signature of a non-isolated singular locus.
long long total_tjurina_algebraic(const HomogeneousPoly& f,
                                  RankPolicy policy = RankPolicy::Auto);

// n2 + 4 n3 + 5 t5: the Tjurina total the combinatorics predicts.
long long total_tjurina_combinatorial(const WeakCombinatorics& wc);

// Freeness test for a reduced plane curve of degree m with mdr d1:
// under d1 <= (m-1)/2 the curve is free iff
// (m-1)^2 - d1*(m-d1-1) equals the total Tjurina number.
// Throws MdrOutOfRange when d1 < 0 or 2*d1 > m-1.
bool du_plessis_wall(int m, int d1, long long tau);

enum class FreenessVerdict { Free, NotFree, NotFreeByDegreeWindow };

struct FreenessReport {
  int m = 0;
  int d1 = 0;
  long long tau_algebraic = 0;
  std::optional<long long> tau_combinatorial;
  std::optional<std::pair<int, int>> exponents;  // (d1, m-1-d1) when Free
  DegreeWindow window;
  FreenessVerdict verdict = FreenessVerdict::NotFree;
  std::string reason;
};

std::string to_string(FreenessVerdict v);

// Full evidence chain for one curve: mdr, algebraic Tjurina, the degree
// window, then the du Plessis-Wall equality when the window admits d1.
// Requires deg f >= 3.
FreenessReport analyze(const HomogeneousPoly& f,
                       std::optional<WeakCombinatorics> wc = std::nullopt,
                       RankPolicy policy = RankPolicy::Auto);

}  // namespace cubline
