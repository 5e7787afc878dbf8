#pragma once

#include <cubline/census.hpp>
#include <cubline/poly.hpp>

#include <string>
#include <vector>

namespace cubline {

// x^3 + y^3 + z^3.
HomogeneousPoly fermat_cubic();

// The nine inflection points of a smooth cubic: the intersection of the
// curve with its Hessian. Each returned point p satisfies |f(p)| < tol and
// |hessian(p)| < tol after normalization. Throws NotSmooth when the curve
// is singular.
std::vector<ComplexPoint> inflection_points(const HomogeneousPoly& cubic, double tol = 1e-9);

// Tangent line of V(f) at a smooth point p: the line whose coefficients
// are the gradient of f at p. Throws SingularPoint when the gradient
// vanishes there.
Component tangent_line_at(const HomogeneousPoly& f, const ComplexPoint& p);

// Built-in arrangements:
//   EL6     smooth Fermat cubic and the three lines of x^3 + y^3 = 0
//   EL7     EL6 plus the line y + z = 0
//   CPPP    smooth Fermat cubic and its nine inflectional tangent lines
//   FERMAT  the smooth Fermat cubic alone
Arrangement example(const std::string& name);

std::vector<std::string> example_names();

}  // namespace cubline
