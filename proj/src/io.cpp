#include <cubline/io.hpp>

#include <cubline/errors.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace cubline {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Integers round-trip as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so arbitrary rational coefficients survive.
ordered_json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return ordered_json(z.get_si());
  return ordered_json(z.get_str());
}

mpz_class integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0)
      throw ParseError(std::string(what) + " is not a decimal integer");
    return z;
  }
  throw ParseError(std::string(what) + " must be an integer or a decimal string");
}

int exponent_from_json(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError("exponents must be non-negative integers");
  return static_cast<int>(j.get<long long>());
}

ComponentKind kind_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "line") return ComponentKind::Line;
    if (s == "cubic") return ComponentKind::Cubic;
  }
  throw ParseError("component kind must be \"line\" or \"cubic\"");
}

std::vector<std::complex<double>> numeric_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("numeric coefficients must be an array of [re, im] pairs");
  std::vector<std::complex<double>> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError("numeric coefficients must be an array of [re, im] pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

ordered_json numeric_to_json(const std::vector<std::complex<double>>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : v) arr.push_back({c.real(), c.imag()});
  return arr;
}

}  // namespace

ordered_json poly_to_json(const HomogeneousPoly& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, q] : f.terms()) {
    ordered_json term = ordered_json::array();
    term.push_back(integer_to_json(numerator(q)));
    term.push_back(integer_to_json(denominator(q)));
    term.push_back(m.ex);
    term.push_back(m.ey);
    term.push_back(m.ez);
    arr.push_back(std::move(term));
  }
  return arr;
}

HomogeneousPoly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("a polynomial must be a non-empty array of [num, den, ex, ey, ez] terms");
  int degree = -1;
  HomogeneousPoly f(0);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 5)
      throw ParseError("each polynomial term must be [num, den, ex, ey, ez]");
    const mpz_class num = integer_from_json(t[0], "a numerator");
    const mpz_class den = integer_from_json(t[1], "a denominator");
    if (den == 0) throw ParseError("a denominator is zero");
    const Monomial m{exponent_from_json(t[2]), exponent_from_json(t[3]),
                     exponent_from_json(t[4])};
    if (degree < 0) {
      degree = m.degree();
      f = HomogeneousPoly(degree);
    } else if (m.degree() != degree) {
      throw ParseError("polynomial terms have mixed total degrees");
    }
    Rational q(num, den);
    q.canonicalize();
    f.add_term(m, q);
  }
  if (f.is_zero()) throw ParseError("polynomial terms cancel to zero");
  return f;
}

ordered_json arrangement_to_json(const Arrangement& arr) {
  ordered_json j;
  j["label"] = arr.label;
  j["components"] = ordered_json::array();
  for (const auto& c : arr.components) {
    ordered_json cj;
    cj["kind"] = to_string(c.kind);
    if (c.exact)
      cj["exact"] = poly_to_json(*c.exact);
    else
      cj["numeric"] = numeric_to_json(c.numeric);
    j["components"].push_back(std::move(cj));
  }
  if (arr.product) j["product"] = poly_to_json(*arr.product);
  return j;
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("an arrangement file must be a JSON object");
  Arrangement arr;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    arr.label = j["label"].get<std::string>();
  }
  if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
    throw ParseError("an arrangement needs a non-empty components array");
  for (const auto& cj : j["components"]) {
    if (!cj.is_object() || !cj.contains("kind"))
      throw ParseError("each component needs a kind");
    const ComponentKind kind = kind_from_json(cj["kind"]);
    const bool has_exact = cj.contains("exact");
    const bool has_numeric = cj.contains("numeric");
    if (has_exact && has_numeric)
      arr.components.push_back(Component::from_both(kind, poly_from_json(cj["exact"]),
                                                    numeric_from_json(cj["numeric"])));
    else if (has_exact)
      arr.components.push_back(Component::from_exact(kind, poly_from_json(cj["exact"])));
    else if (has_numeric)
      arr.components.push_back(Component::from_numeric(kind, numeric_from_json(cj["numeric"])));
    else
      throw ParseError("each component needs exact or numeric coefficients");
  }
  if (j.contains("product")) {
    HomogeneousPoly p = poly_from_json(j["product"]);
    if (p.degree() != arr.total_degree())
      throw ParseError("product degree does not match the sum of component degrees");
    arr.product = std::move(p);
  }
  return arr;
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return arrangement_from_json(j);
}

void save_arrangement(const std::string& path, const Arrangement& arr) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << arrangement_to_json(arr).dump(2) << '\n';
}

}  // namespace cubline
