#include <cubline/poly.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace cubline {

int Monomial::exponent(Var v) const {
  switch (v) {
    case Var::X: return ex;
    case Var::Y: return ey;
    case Var::Z: return ez;
  }
  return 0;
}

std::vector<Monomial> monomial_basis(int t) {
  if (t < 0) throw DegreeUnderflow("monomial_basis of negative degree");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>((t + 1) * (t + 2) / 2));
  for (int ex = t; ex >= 0; --ex)
    for (int ey = t - ex; ey >= 0; --ey)
      out.push_back({ex, ey, t - ex - ey});
  return out;
}

int monomial_index(const Monomial& m) {
  // Blocks with larger ex come first; within a block ey descends.
  const int t = m.degree();
  const int s = t - m.ex;
  return s * (s + 1) / 2 + (s - m.ey);
}

double ComplexPoint::norm() const {
  return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
}

std::complex<double> ComplexPoint::coord(int i) const {
  switch (i) {
    case 0: return x;
    case 1: return y;
    default: return z;
  }
}

ComplexPoint ComplexPoint::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw ParseError("cannot normalize the zero point");
  ComplexPoint p{x / n, y / n, z / n};
  int k = 0;
  double best = std::abs(p.coord(0));
  for (int i = 1; i < 3; ++i) {
    if (std::abs(p.coord(i)) > best) {
      best = std::abs(p.coord(i));
      k = i;
    }
  }
  const std::complex<double> phase = p.coord(k) / best;
  const std::complex<double> rot = std::conj(phase);
  return {p.x * rot, p.y * rot, p.z * rot};
}

double projective_distance(const ComplexPoint& a, const ComplexPoint& b) {
  // |a||b| sin(angle), computed as the norm of the complex cross product
  // of unit representatives; invariant under scaling either point.
  const double na = a.norm();
  const double nb = b.norm();
  if (!(na > 0.0) || !(nb > 0.0)) throw ParseError("projective distance with zero point");
  const std::complex<double> ax = a.x / na, ay = a.y / na, az = a.z / na;
  const std::complex<double> bx = b.x / nb, by = b.y / nb, bz = b.z / nb;
  const std::complex<double> cx = ay * bz - az * by;
  const std::complex<double> cy = az * bx - ax * bz;
  const std::complex<double> cz = ax * by - ay * bx;
  return std::sqrt(std::norm(cx) + std::norm(cy) + std::norm(cz));
}

HomogeneousPoly::HomogeneousPoly(int degree) : degree_(degree) {
  if (degree < 0) throw DegreeUnderflow("polynomial of negative degree");
}

HomogeneousPoly HomogeneousPoly::term(const Monomial& m, const Rational& c) {
  HomogeneousPoly p(m.degree());
  p.add_term(m, c);
  return p;
}

HomogeneousPoly HomogeneousPoly::variable(Var v) {
  Monomial m;
  switch (v) {
    case Var::X: m.ex = 1; break;
    case Var::Y: m.ey = 1; break;
    case Var::Z: m.ez = 1; break;
  }
  return term(m, 1);
}

Rational HomogeneousPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.degree() != degree_)
    throw ParseError("term of degree " + std::to_string(m.degree()) +
                     " in a polynomial of degree " + std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
  if (other.degree_ != degree_)
    throw ParseError("adding polynomials of degrees " + std::to_string(degree_) +
                     " and " + std::to_string(other.degree_));
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& other) {
  if (other.degree_ != degree_)
    throw ParseError("subtracting polynomials of degrees " + std::to_string(degree_) +
                     " and " + std::to_string(other.degree_));
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

HomogeneousPoly multiply(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  HomogeneousPoly out(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term({ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez}, Rational(ca * cb));
  return out;
}

HomogeneousPoly partial(const HomogeneousPoly& f, Var v) {
  if (f.degree() == 0) throw DegreeUnderflow("partial derivative of a degree-0 form");
  HomogeneousPoly out(f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    Monomial dm = m;
    switch (v) {
      case Var::X: --dm.ex; break;
      case Var::Y: --dm.ey; break;
      case Var::Z: --dm.ez; break;
    }
    out.add_term(dm, Rational(c * e));
  }
  return out;
}

HomogeneousPoly hessian_det(const HomogeneousPoly& f) {
  if (f.degree() < 2) throw DegreeUnderflow("Hessian of a form of degree < 2");
  const Var vars[3] = {Var::X, Var::Y, Var::Z};
  HomogeneousPoly h[3][3];
  for (int i = 0; i < 3; ++i) {
    const HomogeneousPoly fi = partial(f, vars[i]);
    for (int j = 0; j < 3; ++j) h[i][j] = partial(fi, vars[j]);
  }
  HomogeneousPoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]);
  det -= h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]);
  det += h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  return det;
}

std::complex<double> evaluate_complex(const HomogeneousPoly& f, const ComplexPoint& p) {
  const int t = f.degree();
  // Power tables keep the evaluation O(terms + degree).
  std::vector<std::complex<double>> px(t + 1, 1.0), py(t + 1, 1.0), pz(t + 1, 1.0);
  for (int i = 1; i <= t; ++i) {
    px[i] = px[i - 1] * p.x;
    py[i] = py[i - 1] * p.y;
    pz[i] = pz[i - 1] * p.z;
  }
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : f.terms())
    acc += c.get_d() * px[m.ex] * py[m.ey] * pz[m.ez];
  return acc;
}

HomogeneousPoly substitute_linear(const HomogeneousPoly& f,
                                  const std::array<std::array<Rational, 3>, 3>& M) {
  std::array<HomogeneousPoly, 3> image;
  for (int i = 0; i < 3; ++i) {
    HomogeneousPoly row(1);
    row.add_term({1, 0, 0}, M[i][0]);
    row.add_term({0, 1, 0}, M[i][1]);
    row.add_term({0, 0, 1}, M[i][2]);
    image[i] = row;
  }
  // Cache powers of each image up to the needed exponent.
  const int t = f.degree();
  std::array<std::vector<HomogeneousPoly>, 3> pow;
  for (int i = 0; i < 3; ++i) {
    pow[i].reserve(t + 1);
    pow[i].push_back(HomogeneousPoly::term({0, 0, 0}, 1));
    for (int e = 1; e <= t; ++e) pow[i].push_back(pow[i][e - 1] * image[i]);
  }
  HomogeneousPoly out(t);
  for (const auto& [m, c] : f.terms()) {
    HomogeneousPoly prod = c * pow[0][m.ex];
    prod = prod * pow[1][m.ey];
    prod = prod * pow[2][m.ez];
    out += prod;
  }
  return out;
}

std::vector<std::complex<double>> numeric_coeffs(const HomogeneousPoly& f) {
  const auto basis = monomial_basis(f.degree());
  std::vector<std::complex<double>> out(basis.size(), 0.0);
  for (const auto& [m, c] : f.terms()) out[monomial_index(m)] = c.get_d();
  return out;
}

namespace {

void append_power(std::ostringstream& os, char var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  first_factor = false;
  os << var;
  if (e > 1) os << '^' << e;
}

}  // namespace

std::string to_string(const HomogeneousPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool first_factor = true;
    if (a != 1 || m.degree() == 0) {
      os << to_string(a);
      first_factor = false;
    }
    append_power(os, 'x', m.ex, first_factor);
    append_power(os, 'y', m.ey, first_factor);
    append_power(os, 'z', m.ez, first_factor);
  }
  return os.str();
}

namespace {

// Minimal recursive-free term scanner for the canonical text form.
struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;

  explicit PolyLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }

  Rational number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected a number at '" + s.substr(start) + "'");
    std::string text = s.substr(start, i - start);
    skip_ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      skip_ws();
      std::size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) throw ParseError("expected a denominator in '" + s + "'");
      text += "/" + s.substr(dstart, i - dstart);
    }
    return rational_from_string(text);
  }

  int exponent() {
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws();
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw ParseError("expected an exponent in '" + s + "'");
      return std::stoi(s.substr(start, i - start));
    }
    return 1;
  }
};

}  // namespace

HomogeneousPoly parse_poly(const std::string& text, int degree_hint) {
  PolyLexer lex(text);
  std::vector<std::pair<Monomial, Rational>> parsed;
  bool any_nonzero = false;
  int degree = -1;

  bool first_term = true;
  while (!lex.done()) {
    Rational sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.take();
      if (c == '-') sign = -1;
    } else if (!first_term) {
      throw ParseError("expected '+' or '-' between terms in '" + text + "'");
    }
    first_term = false;

    Rational coef = sign;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coef *= lex.number();
      saw_factor = true;
    }
    Monomial m;
    while (true) {
      char v = lex.peek();
      if (v == '*') {
        lex.take();
        v = lex.peek();
        if (v != 'x' && v != 'y' && v != 'z' && !std::isdigit(static_cast<unsigned char>(v)))
          throw ParseError("dangling '*' in '" + text + "'");
        if (std::isdigit(static_cast<unsigned char>(v))) {
          coef *= lex.number();
          continue;
        }
      }
      if (v != 'x' && v != 'y' && v != 'z') break;
      lex.take();
      const int e = lex.exponent();
      if (v == 'x')
        m.ex += e;
      else if (v == 'y')
        m.ey += e;
      else
        m.ez += e;
      saw_factor = true;
    }
    if (!saw_factor) throw ParseError("empty term in '" + text + "'");
    if (coef != 0) {
      any_nonzero = true;
      if (degree == -1)
        degree = m.degree();
      else if (m.degree() != degree)
        throw ParseError("inhomogeneous input: '" + text + "'");
      parsed.emplace_back(m, coef);
    }
  }

  if (!any_nonzero) {
    if (degree_hint < 0)
      throw ParseError("zero polynomial needs an explicit degree: '" + text + "'");
    return HomogeneousPoly(degree_hint);
  }
  if (degree_hint >= 0 && degree != degree_hint)
    throw ParseError("expected degree " + std::to_string(degree_hint) + ", got " +
                     std::to_string(degree) + " in '" + text + "'");
  HomogeneousPoly out(degree);
  for (const auto& [m, c] : parsed) out.add_term(m, c);
  return out;
}

}  // namespace cubline
