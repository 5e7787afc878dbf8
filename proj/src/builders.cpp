#include <cubline/builders.hpp>

#include <cubline/errors.hpp>
#include <cubline/jacobian.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace cubline {

namespace {

using C = std::complex<double>;

// Primitive cube root of unity.
const C kOmega = std::polar(1.0, 2.0 * M_PI / 3.0);

Component line_from_coeffs(C a, C b, C c) {
  return Component::from_numeric(ComponentKind::Line, {a, b, c});
}

// The three lines with product x^3 + y^3: x + omega^j y.
std::vector<Component> lines_of_x3_plus_y3() {
  std::vector<Component> out;
  for (int j = 0; j < 3; ++j)
    out.push_back(line_from_coeffs(1.0, std::pow(kOmega, j), 0.0));
  return out;
}

Arrangement build_el6() {
  Arrangement arr;
  arr.label = "EL6";
  arr.components.push_back(Component::from_exact(ComponentKind::Cubic, fermat_cubic()));
  for (auto& l : lines_of_x3_plus_y3()) arr.components.push_back(std::move(l));
  arr.product = fermat_cubic() * parse_poly("x^3 + y^3");
  return arr;
}

Arrangement build_el7() {
  Arrangement arr = build_el6();
  arr.label = "EL7";
  arr.components.push_back(
      Component::from_both(ComponentKind::Line, parse_poly("y + z"), {0.0, 1.0, 1.0}));
  arr.product = *arr.product * parse_poly("y + z");
  return arr;
}

Arrangement build_cppp() {
  Arrangement arr;
  arr.label = "CPPP";
  arr.components.push_back(Component::from_exact(ComponentKind::Cubic, fermat_cubic()));
  for (const ComplexPoint& p : inflection_points(fermat_cubic()))
    arr.components.push_back(tangent_line_at(fermat_cubic(), p));
  // The nine inflectional tangents multiply out to this exact form; the
  // builder tests re-derive it from the numeric pipeline.
  arr.product = fermat_cubic() * parse_poly("x^3 + y^3") * parse_poly("y^3 + z^3") *
                parse_poly("x^3 + z^3");
  return arr;
}

Arrangement build_fermat() {
  Arrangement arr;
  arr.label = "FERMAT";
  arr.components.push_back(Component::from_exact(ComponentKind::Cubic, fermat_cubic()));
  arr.product = fermat_cubic();
  return arr;
}

}  // namespace

HomogeneousPoly fermat_cubic() { return parse_poly("x^3 + y^3 + z^3"); }

std::vector<ComplexPoint> inflection_points(const HomogeneousPoly& cubic, double tol) {
  if (cubic.degree() != 3) throw NotSmooth("inflection points need a cubic curve");
  if (!is_smooth_cubic(Component::from_exact(ComponentKind::Cubic, cubic), tol))
    throw NotSmooth("inflection points of a singular cubic");
  const HomogeneousPoly hess = hessian_det(cubic);

  const NumericPoly F(cubic);
  const NumericPoly H(hess);
  const auto pts = intersect_curves(NumericPoly(3, normalize_vector(F.coeffs())),
                                    NumericPoly(3, normalize_vector(H.coeffs())), tol, 0x1f1e);
  std::vector<ComplexPoint> out;
  for (const auto& [p, mult] : pts) {
    if (mult != 1)
      throw NotSmooth("an inflection point of a smooth cubic must be transverse");
    out.push_back(p);
  }
  if (out.size() != 9) throw NotSmooth("expected nine inflection points");
  // Guard the defining equations, then order deterministically.
  const double fscale = F.max_abs();
  const double hscale = H.max_abs();
  for (const auto& p : out) {
    if (std::abs(F.eval(p.x, p.y, p.z)) > tol * fscale ||
        std::abs(H.eval(p.x, p.y, p.z)) > tol * hscale)
      throw NotSmooth("an inflection point fails its defining equations");
  }
  std::sort(out.begin(), out.end(), [](const ComplexPoint& a, const ComplexPoint& b) {
    const auto key = [](const ComplexPoint& p) {
      return std::array<double, 6>{p.x.real(), p.x.imag(), p.y.real(),
                                   p.y.imag(), p.z.real(), p.z.imag()};
    };
    return key(a) < key(b);
  });
  return out;
}

Component tangent_line_at(const HomogeneousPoly& f, const ComplexPoint& p) {
  const NumericPoly F(f);
  std::vector<C> grad(3);
  for (int v = 0; v < 3; ++v)
    grad[static_cast<std::size_t>(v)] =
        F.partial(static_cast<Var>(v)).eval(p.x, p.y, p.z);
  double gn = 0.0;
  for (const auto& e : grad) gn = std::max(gn, std::abs(e));
  const double scale = F.max_abs() * std::pow(p.norm(), f.degree() - 1);
  if (gn < 1e-9 * scale) throw SingularPoint("tangent line requested at a singular point");
  return Component::from_numeric(ComponentKind::Line, std::move(grad));
}

Arrangement example(const std::string& name) {
  if (name == "EL6") return build_el6();
  if (name == "EL7") return build_el7();
  if (name == "CPPP") return build_cppp();
  if (name == "FERMAT") return build_fermat();
  throw UnknownExample("unknown example '" + name + "'; expected EL6, EL7, CPPP or FERMAT");
}

std::vector<std::string> example_names() { return {"EL6", "EL7", "CPPP", "FERMAT"}; }

}  // namespace cubline
