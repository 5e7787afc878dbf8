#include <cubline/numeric_poly.hpp>

#include <cubline/errors.hpp>

#include <cmath>
#include <limits>

namespace cubline {

NumericPoly::NumericPoly(int degree, std::vector<C> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
  const std::size_t want = static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
  if (degree < 0 || c_.size() != want)
    throw ParseError("coefficient vector length does not match the degree");
}

double NumericPoly::max_abs() const {
  double m = 0.0;
  for (const C& v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool NumericPoly::is_negligible(double tol) const { return max_abs() < tol; }

NumericPoly::C NumericPoly::eval(C x, C y, C z) const {
  std::vector<C> px(degree_ + 1, C(1.0)), py(degree_ + 1, C(1.0)), pz(degree_ + 1, C(1.0));
  for (int i = 1; i <= degree_; ++i) {
    px[i] = px[i - 1] * x;
    py[i] = py[i - 1] * y;
    pz[i] = pz[i - 1] * z;
  }
  C acc(0.0);
  std::size_t idx = 0;
  for (int ex = degree_; ex >= 0; --ex)
    for (int ey = degree_ - ex; ey >= 0; --ey, ++idx)
      acc += c_[idx] * px[ex] * py[ey] * pz[degree_ - ex - ey];
  return acc;
}

NumericPoly NumericPoly::partial(Var v) const {
  if (degree_ == 0) throw DegreeUnderflow("partial derivative of a degree-0 form");
  const int d = degree_ - 1;
  std::vector<C> out(static_cast<std::size_t>((d + 1) * (d + 2) / 2), C(0.0));
  std::size_t idx = 0;
  for (int ex = degree_; ex >= 0; --ex)
    for (int ey = degree_ - ex; ey >= 0; --ey, ++idx) {
      const int ez = degree_ - ex - ey;
      const Monomial m{ex, ey, ez};
      const int e = m.exponent(v);
      if (e == 0) continue;
      Monomial dm = m;
      switch (v) {
        case Var::X: --dm.ex; break;
        case Var::Y: --dm.ey; break;
        case Var::Z: --dm.ez; break;
      }
      out[static_cast<std::size_t>(monomial_index(dm))] += double(e) * c_[idx];
    }
  return NumericPoly(d, std::move(out));
}

NumericPoly NumericPoly::multiply(const NumericPoly& other) const {
  const int d = degree_ + other.degree_;
  std::vector<C> out(static_cast<std::size_t>((d + 1) * (d + 2) / 2), C(0.0));
  std::size_t ia = 0;
  for (int ax = degree_; ax >= 0; --ax)
    for (int ay = degree_ - ax; ay >= 0; --ay, ++ia) {
      if (c_[ia] == C(0.0)) continue;
      const int az = degree_ - ax - ay;
      std::size_t ib = 0;
      for (int bx = other.degree_; bx >= 0; --bx)
        for (int by = other.degree_ - bx; by >= 0; --by, ++ib) {
          const int bz = other.degree_ - bx - by;
          out[static_cast<std::size_t>(monomial_index({ax + bx, ay + by, az + bz}))] +=
              c_[ia] * other.c_[ib];
        }
    }
  return NumericPoly(d, std::move(out));
}

NumericPoly NumericPoly::compose(const std::array<std::array<C, 3>, 3>& M) const {
  std::array<NumericPoly, 3> image;
  for (int i = 0; i < 3; ++i)
    image[i] = NumericPoly(1, {M[i][0], M[i][1], M[i][2]});

  std::array<std::vector<NumericPoly>, 3> pow;
  for (int i = 0; i < 3; ++i) {
    pow[i].push_back(NumericPoly(0, {C(1.0)}));
    for (int e = 1; e <= degree_; ++e) pow[i].push_back(pow[i][e - 1].multiply(image[i]));
  }

  std::size_t idx = 0;
  std::vector<C> sum(c_.size(), C(0.0));
  for (int ex = degree_; ex >= 0; --ex)
    for (int ey = degree_ - ex; ey >= 0; --ey, ++idx) {
      if (c_[idx] == C(0.0)) continue;
      const int ez = degree_ - ex - ey;
      const NumericPoly term = pow[0][ex].multiply(pow[1][ey]).multiply(pow[2][ez]);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += c_[idx] * term.coeffs()[j];
    }
  return NumericPoly(degree_, std::move(sum));
}

std::vector<NumericPoly::C> NumericPoly::z_profile(C x, C y) const {
  std::vector<C> px(degree_ + 1, C(1.0)), py(degree_ + 1, C(1.0));
  for (int i = 1; i <= degree_; ++i) {
    px[i] = px[i - 1] * x;
    py[i] = py[i - 1] * y;
  }
  std::vector<C> out(degree_ + 1, C(0.0));
  std::size_t idx = 0;
  for (int ex = degree_; ex >= 0; --ex)
    for (int ey = degree_ - ex; ey >= 0; --ey, ++idx)
      out[degree_ - ex - ey] += c_[idx] * px[ex] * py[ey];
  return out;
}

std::vector<std::complex<double>> normalize_vector(std::vector<std::complex<double>> v) {
  double norm2 = 0.0;
  for (const auto& e : v) norm2 += std::norm(e);
  const double n = std::sqrt(norm2);
  if (!(n > 0.0)) throw ParseError("cannot normalize the zero vector");
  std::size_t k = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > best) {
      best = std::abs(v[i]);
      k = i;
    }
  // Bit-idempotent: an already canonical vector passes through untouched,
  // so emitting and re-reading a normalized vector is a fixed point.
  const bool unit = std::abs(n - 1.0) <= 64.0 * std::numeric_limits<double>::epsilon();
  const bool aligned = v[k].imag() == 0.0 && v[k].real() > 0.0;
  if (unit && aligned) return v;
  const std::complex<double> rot = std::conj(v[k] / std::abs(v[k]));
  for (auto& e : v) e *= rot / n;
  v[k] = std::abs(v[k]);  // exactly real by construction, not just roundoff close
  return v;
}

}  // namespace cubline
