#include <cubline/combinatorics.hpp>

#include <string>

namespace cubline {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

long long combinatorial_count(long long k, long long d) {
  if (k < 0 || d < 0) throw HypothesisViolated("negative component count");
  return 9 * choose2(k) + 3 * k * d + choose2(d);
}

bool count_satisfied(const WeakCombinatorics& wc) {
  if (wc.n2 < 0 || wc.n3 < 0 || wc.t5 < 0) throw HypothesisViolated("negative point count");
  return wc.n2 + 3 * wc.n3 + 3 * wc.t5 == combinatorial_count(wc.k, wc.d);
}

bool hirzebruch_check(const WeakCombinatorics& wc) {
  if (wc.k < 1 || wc.d < 1 || 3 * wc.k + wc.d < 6)
    throw HypothesisViolated("inequality needs k >= 1, d >= 1 and 3k + d >= 6");
  if (wc.n2 < 0 || wc.n3 < 0 || wc.t5 < 0) throw HypothesisViolated("negative point count");
  return 4 * (27 * wc.k + wc.n2) + 3 * wc.n3 >= 4 * (wc.d + 5 * wc.t5);
}

std::vector<int> DegreeWindow::admissible() const {
  std::vector<int> out;
  for (int d1 = lower; d1 <= upper; ++d1) out.push_back(d1);
  return out;
}

DegreeWindow degree_window(int m) {
  if (m < 3) throw HypothesisViolated("degree window needs m >= 3");
  DegreeWindow w;
  w.m = m;
  w.lower = (2 * m - 4) / 3;  // ceil((2m - 6) / 3) for m >= 3
  w.upper = (m - 1) / 2;
  return w;
}

std::vector<WeakCombinatorics> enumerate_admissible(long long k, long long d) {
  const long long total = combinatorial_count(k, d);
  const bool triple_points_possible = k + d >= 3;
  std::vector<WeakCombinatorics> out;
  for (long long n2 = 0; n2 <= total; ++n2) {
    const long long rest = total - n2;
    if (rest % 3 != 0) continue;
    for (long long n3 = 0; 3 * n3 <= rest; ++n3) {
      if (n3 > 0 && !triple_points_possible) continue;
      out.push_back({k, d, n2, n3, (rest - 3 * n3) / 3});
    }
  }
  return out;
}

std::vector<FreeCandidate> enumerate_free_candidates(long long k, long long d) {
  if (k < 1 || d < 1) throw HypothesisViolated("free candidates need k >= 1 and d >= 1");
  const long long m = 3 * k + d;
  const DegreeWindow window = degree_window(static_cast<int>(m));
  const auto admissible = enumerate_admissible(k, d);

  std::vector<FreeCandidate> out;
  for (const int d1 : window.admissible()) {
    const long long target = (m - 1) * (m - 1) - static_cast<long long>(d1) * (m - d1 - 1);
    for (const auto& wc : admissible) {
      if (wc.n2 + 4 * wc.n3 + 5 * wc.t5 != target) continue;
      FreeCandidate fc;
      fc.wc = wc;
      fc.d1 = d1;
      fc.tau = target;
      if (wc.k >= 1 && wc.d >= 1 && 3 * wc.k + wc.d >= 6)
        fc.hirzebruch = hirzebruch_check(wc) ? HirzebruchTag::Pass : HirzebruchTag::Fail;
      out.push_back(fc);
    }
  }
  return out;
}

}  // namespace cubline
