#include <cubline/builders.hpp>
#include <cubline/census.hpp>

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace cubline;

namespace {

using C = std::complex<double>;

Component line(C a, C b, C c) { return Component::from_numeric(ComponentKind::Line, {a, b, c}); }

bool near_point(const ComplexPoint& p, const ComplexPoint& q, double tol = 1e-9) {
  return projective_distance(p, q) < tol;
}

}  // namespace

TEST_CASE("two lines meet in one simple point") {
  const auto pts = pair_intersections(line(1, 0, 0), line(0, 1, 0), 1e-9);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].second == 1);
  CHECK(near_point(pts[0].first, ComplexPoint{0.0, 0.0, 1.0}));
}

TEST_CASE("coincident lines raise SharedComponent") {
  CHECK_THROWS_AS(pair_intersections(line(1, 2, -1), line(-2, -4, 2), 1e-9), SharedComponent);
  const Component fermat = Component::from_exact(ComponentKind::Cubic, fermat_cubic());
  CHECK_THROWS_AS(pair_intersections(fermat, fermat, 1e-9), SharedComponent);
}

TEST_CASE("a transverse line meets the cubic in three simple points") {
  const Component cubic = Component::from_exact(ComponentKind::Cubic, fermat_cubic());
  const auto pts = pair_intersections(line(0, 0, 1), cubic, 1e-9);
  REQUIRE(pts.size() == 3);
  for (const auto& [p, mult] : pts) {
    CHECK(mult == 1);
    CHECK(std::abs(std::pow(p.x, 3) + std::pow(p.y, 3) + std::pow(p.z, 3)) < 1e-12);
    CHECK(std::abs(p.z) < 1e-12);
  }
}

TEST_CASE("an inflectional tangent meets the cubic triply") {
  // x + y = 0 is tangent to the Fermat cubic at the inflection (1 : -1 : 0).
  const Component cubic = Component::from_exact(ComponentKind::Cubic, fermat_cubic());
  const auto pts = pair_intersections(line(1, 1, 0), cubic, 1e-9);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].second == 3);
  CHECK(near_point(pts[0].first, ComplexPoint{1.0, -1.0, 0.0}, 1e-8));
}

TEST_CASE("cubic-cubic intersection satisfies Bezout") {
  const Component a = Component::from_exact(ComponentKind::Cubic, fermat_cubic());
  const Component b = Component::from_exact(ComponentKind::Cubic,
                                            parse_poly("x^3 + 2*y^3 + 5*z^3 + x*y*z"));
  const auto pts = pair_intersections(a, b, 1e-9);
  int total = 0;
  for (const auto& [p, mult] : pts) {
    total += mult;
    CHECK(std::abs(std::pow(p.x, 3) + std::pow(p.y, 3) + std::pow(p.z, 3)) < 1e-8);
  }
  CHECK(total == 9);
}

TEST_CASE("pair results are deterministic in the seed") {
  const Component cubic = Component::from_exact(ComponentKind::Cubic, fermat_cubic());
  const auto a = pair_intersections(line(1, 1, 0), cubic, 1e-9, 7);
  const auto b = pair_intersections(line(1, 1, 0), cubic, 1e-9, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].second == b[i].second);
    CHECK(a[i].first.x == b[i].first.x);
    CHECK(a[i].first.y == b[i].first.y);
    CHECK(a[i].first.z == b[i].first.z);
  }
}

TEST_CASE("clustering groups all pairs through one point") {
  // The coordinate triangle: three lines, three vertices.
  std::vector<RawIntersection> raw;
  const Component lx = line(1, 0, 0), ly = line(0, 1, 0), lz = line(0, 0, 1);
  const Component lines[3] = {lx, ly, lz};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto pts = pair_intersections(lines[i], lines[j], 1e-9);
      for (const auto& [p, mult] : pts) raw.push_back({i, j, p, mult});
    }
  const auto recs = cluster(raw, 1e-9);
  REQUIRE(recs.size() == 3);
  for (const auto& r : recs) {
    CHECK(r.members.size() == 2);
    CHECK(r.pairs.size() == 1);
  }
  CHECK(cluster({}, 1e-9).empty());
}

TEST_CASE("classification recognizes the three supported types") {
  const Component lx = line(1, 0, 0);
  const Component ly = line(0, 1, 0);
  const Component diag = line(1, 1, 1);
  const std::vector<Component> comps = {lx, ly, diag};

  SingularPointRecord node;
  node.location = ComplexPoint{0.0, 0.0, 1.0}.normalized();
  node.members = {0, 1};
  node.pairs = {{0, 1, 1}};
  CHECK(classify_point(node, comps, 1e-9) == SingularityKind::A1);

  // Three concurrent lines: x, y and x + y meet at (0 : 0 : 1).
  const std::vector<Component> concurrent = {lx, ly, line(1, 1, 0)};
  SingularPointRecord triple;
  triple.location = ComplexPoint{0.0, 0.0, 1.0}.normalized();
  triple.members = {0, 1, 2};
  triple.pairs = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  CHECK(classify_point(triple, concurrent, 1e-9) == SingularityKind::D4);

  const Component cubic = Component::from_exact(ComponentKind::Cubic, fermat_cubic());
  const std::vector<Component> tangentpair = {cubic, line(1, 1, 0)};
  SingularPointRecord contact;
  contact.location = ComplexPoint{1.0, -1.0, 0.0}.normalized();
  contact.members = {0, 1};
  contact.pairs = {{0, 1, 3}};
  CHECK(classify_point(contact, tangentpair, 1e-9) == SingularityKind::A5);
}

TEST_CASE("unsupported local structures are rejected") {
  const std::vector<Component> comps = {
      line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, -1, 0)};

  SingularPointRecord tacnode;
  tacnode.location = ComplexPoint{0.0, 0.0, 1.0}.normalized();
  tacnode.members = {0, 1};
  tacnode.pairs = {{0, 1, 2}};
  CHECK_THROWS_AS(classify_point(tacnode, comps, 1e-9), UnsupportedSingularity);

  SingularPointRecord quad;
  quad.location = ComplexPoint{0.0, 0.0, 1.0}.normalized();
  quad.members = {0, 1, 2, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) quad.pairs.push_back({i, j, 1});
  CHECK_THROWS_AS(classify_point(quad, comps, 1e-9), UnsupportedSingularity);

  // Two lines through one point cannot meet with multiplicity 3; a forged
  // record with coincident tangents must be refused.
  SingularPointRecord fake;
  fake.location = ComplexPoint{0.0, 0.0, 1.0}.normalized();
  fake.members = {0, 2};
  fake.pairs = {{0, 2, 3}};
  CHECK_THROWS_AS(classify_point(fake, comps, 1e-9), UnsupportedSingularity);
}

TEST_CASE("census of the built-in arrangements") {
  const CensusResult el6 = census(example("EL6"));
  CHECK(el6.k == 1);
  CHECK(el6.d == 3);
  CHECK(el6.n2 == 0);
  CHECK(el6.n3 == 1);
  CHECK(el6.t5 == 3);
  CHECK(el6.points.size() == 4);
  CHECK(count_satisfied(el6.combinatorics()));
  CHECK(el6.min_gap > 0.5);

  const CensusResult el7 = census(example("EL7"));
  CHECK(el7.n2 == 3);
  CHECK(el7.n3 == 1);
  CHECK(el7.t5 == 4);
  CHECK(count_satisfied(el7.combinatorics()));

  const CensusResult fermat = census(example("FERMAT"));
  CHECK(fermat.n2 == 0);
  CHECK(fermat.n3 == 0);
  CHECK(fermat.t5 == 0);
  CHECK(fermat.points.empty());
}

TEST_CASE("census output does not depend on the tolerance inside its range") {
  for (const char* name : {"EL6", "EL7"}) {
    const Arrangement arr = example(name);
    const CensusResult base = census(arr, {1e-6, 0});
    for (double tol : {1e-8, 1e-10}) {
      const CensusResult r = census(arr, {tol, 0});
      CHECK(r.n2 == base.n2);
      CHECK(r.n3 == base.n3);
      CHECK(r.t5 == base.t5);
      REQUIRE(r.points.size() == base.points.size());
      for (std::size_t i = 0; i < r.points.size(); ++i)
        CHECK(near_point(r.points[i].location, base.points[i].location, 1e-9));
    }
  }
}

TEST_CASE("census is invariant across shear seeds") {
  const Arrangement arr = example("EL6");
  const CensusResult base = census(arr, {1e-9, 0});
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull, 6ull, 7ull, 8ull, 9ull}) {
    const CensusResult r = census(arr, {1e-9, seed});
    CHECK(r.n2 == base.n2);
    CHECK(r.n3 == base.n3);
    CHECK(r.t5 == base.t5);
  }
}

TEST_CASE("the EL6 triple point sits at the coordinate vertex") {
  const CensusResult r = census(example("EL6"));
  int d4 = 0;
  for (const auto& rec : r.points)
    if (rec.kind == SingularityKind::D4) {
      ++d4;
      CHECK(near_point(rec.location, ComplexPoint{0.0, 0.0, 1.0}, 1e-9));
      CHECK(rec.members == std::vector<int>{1, 2, 3});
    }
  CHECK(d4 == 1);
}

TEST_CASE("smoothness of cubics") {
  CHECK(is_smooth_cubic(Component::from_exact(ComponentKind::Cubic, fermat_cubic())));
  CHECK(is_smooth_cubic(Component::from_exact(ComponentKind::Cubic,
                                              parse_poly("x^3 + y^3 + z^3 + x*y*z"))));
  // Cuspidal cubic, exact and numeric routes.
  const HomogeneousPoly cusp = parse_poly("x^2*z - y^3");
  CHECK(!is_smooth_cubic(Component::from_exact(ComponentKind::Cubic, cusp)));
  CHECK(!is_smooth_cubic(Component::from_numeric(ComponentKind::Cubic,
                                                 NumericPoly(cusp).coeffs())));
  // Nodal cubic and a cone.
  CHECK(!is_smooth_cubic(Component::from_exact(ComponentKind::Cubic,
                                               parse_poly("x*y*z + x^3 + y^3"))));
  CHECK(!is_smooth_cubic(Component::from_numeric(
      ComponentKind::Cubic, NumericPoly(parse_poly("x^3 + y^3")).coeffs())));
  CHECK(!is_smooth_cubic(Component::from_numeric(
      ComponentKind::Cubic, NumericPoly(parse_poly("x^3")).coeffs())));
}

TEST_CASE("numeric smoothness agrees with the exact criterion on random cubics") {
  std::mt19937_64 rng(61);
  int smooth_seen = 0;
  for (int it = 0; it < 12; ++it) {
    HomogeneousPoly f(3);
    for (const auto& m : monomial_basis(3))
      f.add_term(m, rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
    if (f.is_zero()) continue;
    const Component exact = Component::from_exact(ComponentKind::Cubic, f);
    const Component numeric =
        Component::from_numeric(ComponentKind::Cubic, NumericPoly(f).coeffs());
    const bool se = is_smooth_cubic(exact);
    const bool sn = is_smooth_cubic(numeric);
    CHECK(se == sn);
    smooth_seen += se;
  }
  CHECK(smooth_seen > 0);  // random cubics are overwhelmingly smooth
}

TEST_CASE("census rejects arrangements with a repeated member") {
  Arrangement arr = example("EL6");
  arr.components.push_back(arr.components[1]);
  CHECK_THROWS_AS(census(arr), SharedComponent);
}

TEST_CASE("census rejects a singular cubic member") {
  Arrangement arr;
  arr.label = "bad";
  arr.components.push_back(
      Component::from_exact(ComponentKind::Cubic, parse_poly("x^2*z - y^3")));
  arr.components.push_back(line(1, 0, 0));
  CHECK_THROWS_AS(census(arr), NotSmooth);
}
