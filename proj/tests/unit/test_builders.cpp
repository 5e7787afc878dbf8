#include <cubline/builders.hpp>
#include <cubline/census.hpp>
#include <cubline/jacobian.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace cubline;

namespace {

using C = std::complex<double>;

bool contains_point(const std::vector<ComplexPoint>& pts, const ComplexPoint& q, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](const ComplexPoint& p) {
    return projective_distance(p, q) < tol;
  });
}

}  // namespace

TEST_CASE("the reference cubic is what it says") {
  const HomogeneousPoly f = fermat_cubic();
  CHECK(f.degree() == 3);
  CHECK(f == parse_poly("x^3 + y^3 + z^3"));
  CHECK(is_smooth_cubic(Component::from_exact(ComponentKind::Cubic, f)));
  // Its Hessian determinant is a scalar multiple of xyz.
  CHECK(hessian_det(f) == parse_poly("216*x*y*z"));
}

TEST_CASE("a smooth cubic has exactly nine inflection points") {
  const HomogeneousPoly f = fermat_cubic();
  const auto pts = inflection_points(f);
  REQUIRE(pts.size() == 9);

  // Each point lies on the curve and on the Hessian.
  const NumericPoly nf(f);
  const NumericPoly nh(hessian_det(f));
  for (const auto& p : pts) {
    CHECK(std::abs(nf.eval(p.x, p.y, p.z)) < 1e-8);
    CHECK(std::abs(nh.eval(p.x, p.y, p.z)) < 1e-6);
  }

  // For this cubic the inflections are the points with one coordinate zero
  // and the other two cube roots of -1 apart: (0 : 1 : -w^j) and rotations.
  const C w = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  int matched = 0;
  for (int j = 0; j < 3; ++j) {
    const C r = -std::pow(w, j);
    matched += contains_point(pts, ComplexPoint{0.0, 1.0, r}, 1e-7);
    matched += contains_point(pts, ComplexPoint{1.0, 0.0, r}, 1e-7);
    matched += contains_point(pts, ComplexPoint{1.0, r, 0.0}, 1e-7);
  }
  CHECK(matched == 9);
}

TEST_CASE("inflection points work on a generic smooth cubic") {
  const HomogeneousPoly f = parse_poly("x^3 + y^3 + z^3 + 2*x*y*z");
  const auto pts = inflection_points(f);
  REQUIRE(pts.size() == 9);
  const NumericPoly nf(f);
  for (const auto& p : pts) CHECK(std::abs(nf.eval(p.x, p.y, p.z)) < 1e-8);
}

TEST_CASE("singular cubics are refused") {
  CHECK_THROWS_AS(inflection_points(parse_poly("x^2*z - y^3")), NotSmooth);
  CHECK_THROWS_AS(inflection_points(parse_poly("x*y*z + x^3 + y^3")), NotSmooth);
  CHECK_THROWS_AS(inflection_points(parse_poly("x^2 + y*z", 2)), NotSmooth);
}

TEST_CASE("tangent lines touch where they should") {
  const HomogeneousPoly f = fermat_cubic();
  const ComplexPoint p = ComplexPoint{1.0, -1.0, 0.0}.normalized();
  const Component t = tangent_line_at(f, p);
  REQUIRE(t.kind == ComponentKind::Line);

  // The tangent at (1 : -1 : 0) is x + y = 0: grad = (3, 3, 0).
  const auto canon = normalize_vector({C(1), C(1), C(0)});
  for (int i = 0; i < 3; ++i) CHECK(std::abs(t.numeric[i] - canon[i]) < 1e-12);

  // An inflectional tangent meets the curve triply at the contact point.
  const Component cubic = Component::from_exact(ComponentKind::Cubic, f);
  const auto meets = pair_intersections(t, cubic, 1e-9);
  REQUIRE(meets.size() == 1);
  CHECK(meets[0].second == 3);
  CHECK(projective_distance(meets[0].first, p) < 1e-8);

  CHECK_THROWS_AS(tangent_line_at(parse_poly("x^2*z - y^3"), ComplexPoint{0.0, 0.0, 1.0}),
                  SingularPoint);
}

TEST_CASE("built-in arrangements have the advertised shape") {
  const Arrangement el6 = example("EL6");
  CHECK(el6.label == "EL6");
  CHECK(el6.cubic_count() == 1);
  CHECK(el6.line_count() == 3);
  CHECK(el6.total_degree() == 6);
  CHECK(el6.exact_product() == multiply(fermat_cubic(), parse_poly("x^3 + y^3")));

  const Arrangement el7 = example("EL7");
  CHECK(el7.cubic_count() == 1);
  CHECK(el7.line_count() == 4);
  CHECK(el7.total_degree() == 7);
  CHECK(el7.exact_product() ==
        multiply(multiply(fermat_cubic(), parse_poly("x^3 + y^3")), parse_poly("y + z")));

  const Arrangement cppp = example("CPPP");
  CHECK(cppp.cubic_count() == 1);
  CHECK(cppp.line_count() == 9);
  CHECK(cppp.total_degree() == 12);

  const Arrangement fermat = example("FERMAT");
  CHECK(fermat.cubic_count() == 1);
  CHECK(fermat.line_count() == 0);
  CHECK(fermat.exact_product() == fermat_cubic());

  CHECK_THROWS_AS(example("nope"), UnknownExample);
  CHECK(example_names() == std::vector<std::string>{"EL6", "EL7", "CPPP", "FERMAT"});
}

TEST_CASE("the nine tangent lines multiply out to the stated product") {
  // The product of the nine inflectional tangents of the reference cubic
  // factors as (x^3 + y^3)(y^3 + z^3)(x^3 + z^3); the arrangement stores
  // that exact polynomial, and the numeric product of its line components
  // must match it up to scale.
  const Arrangement cppp = example("CPPP");
  const HomogeneousPoly expected = multiply(
      multiply(fermat_cubic(), multiply(parse_poly("x^3 + y^3"), parse_poly("y^3 + z^3"))),
      parse_poly("x^3 + z^3"));
  CHECK(cppp.exact_product() == expected);

  NumericPoly prod(0, {C(1)});
  for (const auto& c : cppp.components)
    if (c.kind == ComponentKind::Line) prod = prod.multiply(c.poly());
  const auto got = normalize_vector(prod.coeffs());
  const auto want = normalize_vector(
      NumericPoly(multiply(multiply(parse_poly("x^3 + y^3"), parse_poly("y^3 + z^3")),
                           parse_poly("x^3 + z^3")))
          .coeffs());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
}

TEST_CASE("the census of CPPP matches its freeness analysis") {
  const Arrangement cppp = example("CPPP");
  const CensusResult r = census(cppp);
  CHECK(r.k == 1);
  CHECK(r.d == 9);
  CHECK(r.n2 == 27);
  CHECK(r.n3 == 3);
  CHECK(r.t5 == 9);
  CHECK(count_satisfied(r.combinatorics()));
  CHECK(hirzebruch_check(r.combinatorics()));

  // The numeric counts feed the same Tjurina number the exact pipeline finds.
  CHECK(total_tjurina_combinatorial(r.combinatorics()) == 84);
}
