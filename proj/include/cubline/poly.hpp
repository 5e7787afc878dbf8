#pragma once

#include <cubline/errors.hpp>
#include <cubline/rational.hpp>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cubline {

enum class Var : int { X = 0, Y = 1, Z = 2 };

struct Monomial {
  int ex = 0;
  int ey = 0;
  int ez = 0;

  int degree() const { return ex + ey + ez; }
  int exponent(Var v) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with x > y > z, largest first. Within one
// degree this is plain lex on (ex, ey).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.ex != b.ex) return a.ex > b.ex;
    return a.ey > b.ey;
  }
};

// All monomials of total degree t in x, y, z, in MonomialOrder. Size is
// (t+1)(t+2)/2.
std::vector<Monomial> monomial_basis(int t);

// Position of m inside monomial_basis(m.degree()).
int monomial_index(const Monomial& m);

// A point of the complex projective plane, stored as one affine
// representative. normalized() picks the canonical one: unit Euclidean
// norm, largest-modulus coordinate rotated onto the positive real axis.
struct ComplexPoint {
  std::complex<double> x{};
  std::complex<double> y{};
  std::complex<double> z{};

  double norm() const;
  ComplexPoint normalized() const;
  std::complex<double> coord(int i) const;
};

// Chordal distance between the projective points underlying a and b;
// zero exactly when they are projectively equal, and at most sqrt(2).
double projective_distance(const ComplexPoint& a, const ComplexPoint& b);

// Homogeneous polynomial in Q[x,y,z]. Invariants: every stored term has
// total degree degree() and a nonzero coefficient; the zero polynomial
// stores no terms but keeps its degree tag, so the graded operations
// below stay total.
class HomogeneousPoly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit HomogeneousPoly(int degree = 0);

  static HomogeneousPoly term(const Monomial& m, const Rational& c);
  static HomogeneousPoly variable(Var v);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  // Adds c * m into the polynomial. The monomial degree must match.
  void add_term(const Monomial& m, const Rational& c);

  HomogeneousPoly& operator+=(const HomogeneousPoly& other);
  HomogeneousPoly& operator-=(const HomogeneousPoly& other);
  HomogeneousPoly& operator*=(const Rational& c);

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) {
    a += b;
    return a;
  }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) {
    a -= b;
    return a;
  }
  friend HomogeneousPoly operator*(const Rational& c, HomogeneousPoly p) {
    p *= c;
    return p;
  }
  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

private:
  int degree_;
  TermMap terms_;
};

// Product; degrees add, zero tags included.
HomogeneousPoly multiply(const HomogeneousPoly& a, const HomogeneousPoly& b);
inline HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  return multiply(a, b);
}

// Partial derivative; degree drops by one. Throws DegreeUnderflow on a
// degree-0 input.
HomogeneousPoly partial(const HomogeneousPoly& f, Var v);

// Determinant of the 3x3 matrix of second partials. Requires degree >= 2;
// result has degree 3*(deg f - 2).
HomogeneousPoly hessian_det(const HomogeneousPoly& f);

// f evaluated at the given affine representative.
std::complex<double> evaluate_complex(const HomogeneousPoly& f, const ComplexPoint& p);

// Exact linear change of coordinates: returns f(M * (x,y,z)^T), i.e. the
// variable with index i is replaced by the linear form in row i of M.
HomogeneousPoly substitute_linear(const HomogeneousPoly& f,
                                  const std::array<std::array<Rational, 3>, 3>& M);

// Coefficient vector of f over monomial_basis(f.degree()), cast to double.
std::vector<std::complex<double>> numeric_coeffs(const HomogeneousPoly& f);

// Text form: sum of terms c*x^a*y^b*z^c with exact rational c, in
// MonomialOrder. parse_poly accepts the same shape (exponents and the
// '*' separators may be omitted where unambiguous) and checks
// homogeneity. An explicit degree is required only for "0".
std::string to_string(const HomogeneousPoly& f);
HomogeneousPoly parse_poly(const std::string& text, int degree_hint = -1);

}  // namespace cubline
