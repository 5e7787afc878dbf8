#pragma once

#include <cubline/errors.hpp>

#include <cstdint>
#include <vector>

namespace cubline {

// Weak combinatorics of an arrangement of k smooth cubics and d lines:
// n2 nodes, n3 ordinary triple points, t5 points where two members meet
// with intersection multiplicity 3 (the A5 contacts). All counts are over
// the complex projective plane.
struct WeakCombinatorics {
  long long k = 0;
  long long d = 0;
  long long n2 = 0;
  long long n3 = 0;
  long long t5 = 0;

  long long m() const { return 3 * k + d; }  // degree of the product curve
  friend bool operator==(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

// Total pairwise intersection budget 9*C(k,2) + 3kd + C(d,2).
long long combinatorial_count(long long k, long long d);

// Whether n2 + 3*n3 + 3*t5 spends exactly the pairwise budget.
bool count_satisfied(const WeakCombinatorics& wc);

// The inequality 4*(27k + n2) + 3*n3 >= 4*(d + 5*t5), in exact integers.
// Hypotheses k >= 1, d >= 1, 3k + d >= 6; throws HypothesisViolated otherwise.
bool hirzebruch_check(const WeakCombinatorics& wc);

// Exponent-degree window for a free curve of degree m: the candidate d1
// must lie in [ceil(2m/3 - 2), floor((m-1)/2)].
struct DegreeWindow {
  int m = 0;
  int lower = 0;
  int upper = 0;
  bool empty() const { return lower > upper; }
  bool contains(int d1) const { return lower <= d1 && d1 <= upper; }
  std::vector<int> admissible() const;
};

DegreeWindow degree_window(int m);  // m >= 3

// All (n2, n3, t5) satisfying the count identity for k cubics and d lines,
// in lexicographic order. Tuples with n3 > 0 are dropped when k + d < 3:
// an ordinary triple point needs three distinct members.
std::vector<WeakCombinatorics> enumerate_admissible(long long k, long long d);

enum class HirzebruchTag { Pass, Fail, NotApplicable };

struct FreeCandidate {
  WeakCombinatorics wc;
  int d1 = 0;                 // exponent the candidate would realize
  long long tau = 0;          // n2 + 4*n3 + 5*t5 = (m-1)^2 - d1*(m-d1-1)
  HirzebruchTag hirzebruch = HirzebruchTag::NotApplicable;
};

// Admissible combinatorics whose candidate Tjurina number matches the free
// value for some d1 in the degree window, ordered by (d1, n2, n3, t5).
// Requires k >= 1 and d >= 1.
std::vector<FreeCandidate> enumerate_free_candidates(long long k, long long d);

}  // namespace cubline
