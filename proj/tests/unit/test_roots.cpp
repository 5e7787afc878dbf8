#include <cubline/roots.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace cubline::numeric;

namespace {

// Expand prod (x - r_i) from its roots, ascending coefficients.
std::vector<C> from_roots(const std::vector<C>& roots) {
  std::vector<C> c{C(1.0)};
  for (const C& r : roots) {
    std::vector<C> next(c.size() + 1, C(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_CASE("simple roots are recovered to near machine precision") {
  const std::vector<C> roots = {C(1.0), C(-2.0, 0.5), C(0.0, 1.0), C(3.0, -1.0)};
  const auto c = from_roots(roots);
  const auto got = clustered_roots(c, 1e-9);
  REQUIRE(got.size() == 4);
  for (const auto& rc : got) {
    CHECK(rc.multiplicity == 1);
    double best = 1e9;
    for (const C& r : roots) best = std::min(best, std::abs(rc.value - r));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("multiple roots get the right multiplicity and stay sharp") {
  // (x - 2)^3 (x + 1): the triple root must come back as one cluster. Its
  // polished accuracy is bounded by evaluation noise at an m-fold root
  // (roughly noise^(1/m)), so 1e-7 is the honest target, not 1e-12.
  const auto c = from_roots({C(2.0), C(2.0), C(2.0), C(-1.0)});
  for (double merge_tol : {1e-6, 1e-8, 1e-10}) {
    const auto got = clustered_roots(c, merge_tol);
    REQUIRE(got.size() == 2);
    const auto& triple = got[0].value.real() > 0 ? got[0] : got[1];
    const auto& simple = got[0].value.real() > 0 ? got[1] : got[0];
    CHECK(triple.multiplicity == 3);
    CHECK(std::abs(triple.value - C(2.0)) < 1e-7);
    CHECK(simple.multiplicity == 1);
    CHECK(std::abs(simple.value - C(-1.0)) < 1e-12);
  }
}

TEST_CASE("a degree-9 polynomial with mixed multiplicities") {
  std::vector<C> roots = {C(0.5, 0.5), C(0.5, 0.5), C(0.5, 0.5),
                          C(-1.0),     C(-1.0),     C(2.0, -1.0),
                          C(1.5),      C(0.0, -2.0), C(-0.5, 1.0)};
  const auto c = from_roots(roots);
  const auto got = clustered_roots(c, 1e-8);
  int total = 0;
  bool saw_triple = false, saw_double = false;
  for (const auto& rc : got) {
    total += rc.multiplicity;
    // Expanding to coefficients already moves an m-fold root by roughly
    // eps^(1/m), so the checks below bound conditioning, not the solver.
    if (rc.multiplicity == 3) {
      saw_triple = true;
      CHECK(std::abs(rc.value - C(0.5, 0.5)) < 1e-4);
    }
    if (rc.multiplicity == 2) {
      saw_double = true;
      CHECK(std::abs(rc.value - C(-1.0)) < 1e-7);
    }
    if (rc.multiplicity == 1) CHECK(std::abs(eval_poly(c, rc.value)) < 1e-9);
  }
  CHECK(total == 9);
  CHECK(saw_triple);
  CHECK(saw_double);
}

TEST_CASE("roots below the detection radius count as one multiple root") {
  // Two roots 1e-7 apart sit inside the fixed detection radius, so they are
  // reported as a double root whatever the caller's merge tolerance asks.
  const auto c = from_roots({C(1.0), C(1.0 + 1e-7)});
  for (double tol : {1e-12, 1e-9, 1e-6}) {
    const auto got = clustered_roots(c, tol);
    REQUIRE(got.size() == 1);
    CHECK(got[0].multiplicity == 2);
    CHECK(std::abs(got[0].value - C(1.0)) < 1e-6);
  }
}

TEST_CASE("the caller's tolerance merges polished clusters") {
  // Separation 1e-3 is above the detection radius: two simple roots at a
  // tight tolerance, one double cluster when the caller asks for 1e-2.
  const auto c = from_roots({C(1.0), C(1.0 + 1e-3)});
  const auto split = clustered_roots(c, 1e-9);
  REQUIRE(split.size() == 2);
  CHECK(std::abs(split[0].value - C(1.0)) < 1e-11);
  CHECK(std::abs(split[1].value - C(1.0 + 1e-3)) < 1e-11);
  const auto merged = clustered_roots(c, 1e-2);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].multiplicity == 2);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS(clustered_roots({}, 1e-9));
  CHECK_THROWS(clustered_roots({C(1.0), C(0.0)}, 1e-9));
  CHECK(clustered_roots({C(5.0)}, 1e-9).empty());  // constants have no roots
}

TEST_CASE("random monic polynomials: roots reproduce the polynomial") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int it = 0; it < 30; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<C> roots;
    for (int i = 0; i < n; ++i) roots.emplace_back(coord(rng), coord(rng));
    const auto c = from_roots(roots);
    const auto got = clustered_roots(c, 1e-9);
    int total = 0;
    for (const auto& rc : got) {
      total += rc.multiplicity;
      CHECK(std::abs(eval_poly(c, rc.value)) < 1e-7);
    }
    CHECK(total == n);
  }
}
