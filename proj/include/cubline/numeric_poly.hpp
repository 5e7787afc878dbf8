#pragma once

#include <cubline/poly.hpp>

#include <array>
#include <complex>
#include <vector>

namespace cubline {

// Dense numeric homogeneous polynomial in x, y, z: coefficients over
// monomial_basis(degree). The floating shadow of HomogeneousPoly used by
// the intersection pipeline, where exact data may not exist.
class NumericPoly {
public:
  using C = std::complex<double>;

  NumericPoly() : degree_(0), c_(1, C(0.0)) {}
  NumericPoly(int degree, std::vector<C> coeffs);
  explicit NumericPoly(const HomogeneousPoly& f)
      : NumericPoly(f.degree(), numeric_coeffs(f)) {}

  int degree() const { return degree_; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(const Monomial& m) const { return c_[static_cast<std::size_t>(monomial_index(m))]; }

  double max_abs() const;
  bool is_negligible(double tol) const;  // max |coeff| < tol

  C eval(C x, C y, C z) const;
  NumericPoly partial(Var v) const;
  NumericPoly multiply(const NumericPoly& other) const;

  // Composition with the linear map v -> M v (row i replaces variable i).
  NumericPoly compose(const std::array<std::array<C, 3>, 3>& M) const;

  // Coefficients of z^0..z^degree in p(x, y, z) for fixed x, y.
  std::vector<C> z_profile(C x, C y) const;

private:
  int degree_;
  std::vector<C> c_;
};

// Unit Euclidean norm with the largest-modulus entry rotated onto the
// positive real axis; the canonical representative of a coefficient
// vector up to complex scale. Throws on the zero vector.
std::vector<std::complex<double>> normalize_vector(std::vector<std::complex<double>> v);

}  // namespace cubline
