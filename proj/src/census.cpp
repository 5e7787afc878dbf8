#include <cubline/census.hpp>

#include <cubline/errors.hpp>
#include <cubline/jacobian.hpp>
#include <cubline/roots.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

namespace cubline {

namespace {

using C = std::complex<double>;

constexpr int kShearBudget = 16;

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b,
                              std::uint64_t salt_c) {
  std::seed_seq seq{static_cast<unsigned>(seed & 0xffffffffu),
                    static_cast<unsigned>(seed >> 32), static_cast<unsigned>(salt_a),
                    static_cast<unsigned>(salt_b), static_cast<unsigned>(salt_c)};
  return std::mt19937_64(seq);
}

double unit_double(std::mt19937_64& rng) {
  // Engine output mapped to [0,1) directly, identical on every platform.
  return double(rng() >> 11) * 0x1.0p-53;
}

C random_phase(std::mt19937_64& rng) { return std::polar(1.0, 2.0 * M_PI * unit_double(rng)); }

std::array<C, 3> random_unit_vector3(std::mt19937_64& rng) {
  while (true) {
    std::array<C, 3> v;
    double n2 = 0.0;
    for (auto& e : v) {
      e = C(2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0);
      n2 += std::norm(e);
    }
    if (n2 > 0.05) {
      const double n = std::sqrt(n2);
      for (auto& e : v) e /= n;
      return v;
    }
  }
}

// Random unitary by Gram-Schmidt on random complex vectors.
std::array<std::array<C, 3>, 3> random_unitary3(std::mt19937_64& rng) {
  while (true) {
    std::array<std::array<C, 3>, 3> u;
    u[0] = random_unit_vector3(rng);
    bool ok = true;
    for (int r = 1; r < 3 && ok; ++r) {
      std::array<C, 3> v = random_unit_vector3(rng);
      for (int p = 0; p < r; ++p) {
        C dot(0.0);
        for (int i = 0; i < 3; ++i) dot += std::conj(u[p][i]) * v[i];
        for (int i = 0; i < 3; ++i) v[i] -= dot * u[p][i];
      }
      double n2 = 0.0;
      for (const auto& e : v) n2 += std::norm(e);
      if (n2 < 1e-4) {
        ok = false;
        break;
      }
      const double n = std::sqrt(n2);
      for (int i = 0; i < 3; ++i) u[r][i] = v[i] / n;
    }
    if (ok) return u;
  }
}

std::array<std::array<C, 2>, 2> random_unitary2(std::mt19937_64& rng) {
  while (true) {
    const C a(2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0);
    const C b(2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0);
    const double n2 = std::norm(a) + std::norm(b);
    if (n2 < 0.05) continue;
    const double n = std::sqrt(n2);
    const C phase = random_phase(rng);
    return {{{a / n, -std::conj(b) / n * phase}, {b / n, std::conj(a) / n * phase}}};
  }
}

// Determinant of a small complex matrix by partial-pivot LU.
C small_det(std::vector<std::vector<C>> m) {
  const std::size_t n = m.size();
  C det(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (std::abs(m[piv][k]) == 0.0) return C(0.0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const C f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// Sylvester resultant of two univariate polynomials given by ascending
// coefficients, with formal degrees da and db.
C sylvester_det(const std::vector<C>& a, const std::vector<C>& b, int da, int db) {
  const int n = da + db;
  std::vector<std::vector<C>> m(static_cast<std::size_t>(n),
                                std::vector<C>(static_cast<std::size_t>(n), C(0.0)));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) m[r][r + i] = a[static_cast<std::size_t>(da - i)];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) m[db + r][r + i] = b[static_cast<std::size_t>(db - i)];
  return small_det(std::move(m));
}

struct BinaryRoot {
  C s;
  C t;
  int multiplicity;
};

// Roots of the degree-n binary form G(s,t) presented as an evaluator.
// A random unitary substitution makes the dehomogenized polynomial keep
// full degree; the coefficients then come from an exact inverse DFT over
// n+1 samples. Returns nullopt when the form vanishes identically.
std::optional<std::vector<BinaryRoot>> binary_form_roots(
    const std::function<C(C, C)>& g, int n, double tol, std::mt19937_64& rng,
    double zero_scale) {
  for (int attempt = 0; attempt < kShearBudget; ++attempt) {
    const auto u = random_unitary2(rng);
    std::vector<C> samples(static_cast<std::size_t>(n) + 1);
    double sample_scale = 0.0;
    for (int j = 0; j <= n; ++j) {
      const C x = std::polar(1.0, 2.0 * M_PI * double(j) / double(n + 1));
      const C s = u[0][0] * x + u[0][1];
      const C t = u[1][0] * x + u[1][1];
      samples[static_cast<std::size_t>(j)] = g(s, t);
      sample_scale = std::max(sample_scale, std::abs(samples[static_cast<std::size_t>(j)]));
    }
    if (sample_scale < 1e-9 * zero_scale) return std::nullopt;

    std::vector<C> coeff(static_cast<std::size_t>(n) + 1, C(0.0));
    for (int k = 0; k <= n; ++k) {
      C acc(0.0);
      for (int j = 0; j <= n; ++j)
        acc += samples[static_cast<std::size_t>(j)] *
               std::polar(1.0, -2.0 * M_PI * double(j * k) / double(n + 1));
      coeff[static_cast<std::size_t>(k)] = acc / double(n + 1);
    }
    double cmax = 0.0;
    for (const C& c : coeff) cmax = std::max(cmax, std::abs(c));
    if (std::abs(coeff.back()) < 1e-8 * cmax) continue;  // a root slipped to infinity

    std::vector<BinaryRoot> out;
    for (const auto& rc : numeric::clustered_roots(coeff, std::max(tol, 1e-13))) {
      const C s = u[0][0] * rc.value + u[0][1];
      const C t = u[1][0] * rc.value + u[1][1];
      const double nn = std::sqrt(std::norm(s) + std::norm(t));
      out.push_back({s / nn, t / nn, rc.multiplicity});
    }
    return out;
  }
  throw ProjectionDegenerate("no substitution kept the binary form regular");
}

std::vector<std::pair<ComplexPoint, int>> line_line(const Component& a, const Component& b) {
  const auto& u = a.numeric;
  const auto& v = b.numeric;
  const C cx = u[1] * v[2] - u[2] * v[1];
  const C cy = u[2] * v[0] - u[0] * v[2];
  const C cz = u[0] * v[1] - u[1] * v[0];
  const double n = std::sqrt(std::norm(cx) + std::norm(cy) + std::norm(cz));
  if (n < 1e-9) throw SharedComponent("the two lines coincide");
  return {{ComplexPoint{cx, cy, cz}.normalized(), 1}};
}

std::vector<std::pair<ComplexPoint, int>> line_curve(const Component& line,
                                                     const Component& curve, double tol,
                                                     std::uint64_t seed) {
  const auto& l = line.numeric;
  // Two spanning points of the line, pivoting on its largest coefficient.
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(l[static_cast<std::size_t>(i)]) > std::abs(l[static_cast<std::size_t>(k)]))
      k = i;
  std::array<C, 3> p1{}, p2{};
  const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
  p1[static_cast<std::size_t>(i1)] = C(1.0);
  p1[static_cast<std::size_t>(k)] =
      -l[static_cast<std::size_t>(i1)] / l[static_cast<std::size_t>(k)];
  p2[static_cast<std::size_t>(i2)] = C(1.0);
  p2[static_cast<std::size_t>(k)] =
      -l[static_cast<std::size_t>(i2)] / l[static_cast<std::size_t>(k)];

  const NumericPoly F = curve.poly();
  const auto g = [&](C s, C t) {
    return F.eval(s * p1[0] + t * p2[0], s * p1[1] + t * p2[1], s * p1[2] + t * p2[2]);
  };
  auto rng = seeded_engine(seed, 0x11, 0, 0);
  const auto roots = binary_form_roots(g, F.degree(), tol, rng, F.max_abs());
  if (!roots) throw SharedComponent("the line divides the other member");
  std::vector<std::pair<ComplexPoint, int>> out;
  for (const auto& r : *roots) {
    const ComplexPoint p{r.s * p1[0] + r.t * p2[0], r.s * p1[1] + r.t * p2[1],
                         r.s * p1[2] + r.t * p2[2]};
    out.push_back({p.normalized(), r.multiplicity});
  }
  return out;
}

}  // namespace

std::vector<std::pair<ComplexPoint, int>> intersect_curves(const NumericPoly& A,
                                                           const NumericPoly& B, double tol,
                                                           std::uint64_t seed) {
  const int da = A.degree();
  const int db = B.degree();
  const int n = da * db;
  const double scale_a = A.max_abs();
  const double scale_b = B.max_abs();
  if (!(scale_a > 0.0) || !(scale_b > 0.0))
    throw ParseError("intersection of an identically zero curve");

  for (int attempt = 0; attempt < kShearBudget; ++attempt) {
    auto rng = seeded_engine(seed, 0x22, static_cast<std::uint64_t>(attempt), 0);
    const auto u = random_unitary3(rng);
    const NumericPoly As = A.compose(u);
    const NumericPoly Bs = B.compose(u);
    // Full degree in z keeps the Sylvester matrix honest.
    if (std::abs(As.eval(0.0, 0.0, 1.0)) < 1e-6 * scale_a) continue;
    if (std::abs(Bs.eval(0.0, 0.0, 1.0)) < 1e-6 * scale_b) continue;

    // R(x, y) = Res_z(As, Bs) is a binary form of degree da*db; its roots
    // are the projections of the intersection points.
    const auto resultant = [&](C x, C y) {
      return sylvester_det(As.z_profile(x, y), Bs.z_profile(x, y), da, db);
    };
    const double res_scale = std::pow(scale_a, db) * std::pow(scale_b, da);
    std::optional<std::vector<BinaryRoot>> roots;
    try {
      roots = binary_form_roots(resultant, n, tol, rng, res_scale);
    } catch (const ProjectionDegenerate&) {
      continue;
    }
    if (!roots) throw SharedComponent("the two members share a component");

    std::vector<std::pair<ComplexPoint, int>> out;
    bool clean = true;
    for (const auto& r : *roots) {
      const auto za = numeric::clustered_roots(As.z_profile(r.s, r.t), 1e-9);
      const auto zb = numeric::clustered_roots(Bs.z_profile(r.s, r.t), 1e-9);
      // The fiber over a resultant root must show exactly one common z.
      const double fiber_tol = 1e-5;
      std::vector<C> common;
      for (const auto& ra : za)
        for (const auto& rb : zb)
          if (std::abs(ra.value - rb.value) <=
              fiber_tol * (1.0 + std::max(std::abs(ra.value), std::abs(rb.value))))
            common.push_back((ra.value + rb.value) * 0.5);
      if (common.size() != 1) {
        clean = false;
        break;
      }
      const C z = common.front();
      const ComplexPoint sheared{r.s, r.t, z};
      const ComplexPoint p{
          u[0][0] * sheared.x + u[0][1] * sheared.y + u[0][2] * sheared.z,
          u[1][0] * sheared.x + u[1][1] * sheared.y + u[1][2] * sheared.z,
          u[2][0] * sheared.x + u[2][1] * sheared.y + u[2][2] * sheared.z};
      out.push_back({p.normalized(), r.multiplicity});
    }
    if (!clean) continue;
    return out;
  }
  throw ProjectionDegenerate("no shear separated the intersection fibers");
}

int component_degree(ComponentKind kind) { return kind == ComponentKind::Line ? 1 : 3; }

std::string to_string(ComponentKind kind) {
  return kind == ComponentKind::Line ? "line" : "cubic";
}

NumericPoly Component::poly() const { return NumericPoly(degree(), numeric); }

Component Component::from_exact(ComponentKind kind, HomogeneousPoly f) {
  if (f.is_zero() || f.degree() != component_degree(kind))
    throw ParseError("component polynomial degree does not match its kind");
  Component c;
  c.kind = kind;
  c.numeric = normalize_vector(numeric_coeffs(f));
  c.exact = std::move(f);
  return c;
}

Component Component::from_numeric(ComponentKind kind, std::vector<std::complex<double>> coeffs) {
  const int deg = component_degree(kind);
  if (static_cast<int>(coeffs.size()) != (deg + 1) * (deg + 2) / 2)
    throw ParseError("component coefficient vector does not match its kind");
  Component c;
  c.kind = kind;
  c.numeric = normalize_vector(std::move(coeffs));
  return c;
}

Component Component::from_both(ComponentKind kind, HomogeneousPoly f,
                               std::vector<std::complex<double>> coeffs) {
  Component c = from_exact(kind, std::move(f));
  const auto given = normalize_vector(std::move(coeffs));
  if (given.size() != c.numeric.size())
    throw ParseError("component coefficient vector does not match its kind");
  for (std::size_t i = 0; i < given.size(); ++i)
    if (std::abs(given[i] - c.numeric[i]) > 1e-9)
      throw ParseError("exact and numeric coefficients of a component disagree");
  return c;
}

long long Arrangement::cubic_count() const {
  return std::count_if(components.begin(), components.end(),
                       [](const Component& c) { return c.kind == ComponentKind::Cubic; });
}

long long Arrangement::line_count() const {
  return static_cast<long long>(components.size()) - cubic_count();
}

int Arrangement::total_degree() const {
  int m = 0;
  for (const auto& c : components) m += c.degree();
  return m;
}

HomogeneousPoly Arrangement::exact_product() const {
  if (product) return *product;
  HomogeneousPoly acc = HomogeneousPoly::term({0, 0, 0}, 1);
  for (const auto& c : components) {
    if (!c.exact)
      throw NotApplicable("arrangement '" + label +
                          "' has no exact product: a component is numeric only");
    acc = acc * *c.exact;
  }
  if (components.empty()) throw NotApplicable("arrangement has no components");
  return acc;
}

std::vector<std::pair<ComplexPoint, int>> pair_intersections(const Component& a,
                                                             const Component& b, double tol,
                                                             std::uint64_t seed) {
  // Identical members (up to scale) are an immediate shared component.
  if (a.kind == b.kind) {
    double dist = 0.0;
    for (std::size_t i = 0; i < a.numeric.size(); ++i)
      dist = std::max(dist, std::abs(a.numeric[i] - b.numeric[i]));
    if (dist < 1e-9) throw SharedComponent("two members are the same curve");
  }
  if (a.kind == ComponentKind::Line && b.kind == ComponentKind::Line) return line_line(a, b);
  if (a.kind == ComponentKind::Line) return line_curve(a, b, tol, seed);
  if (b.kind == ComponentKind::Line) return line_curve(b, a, tol, seed);
  return intersect_curves(a.poly(), b.poly(), tol, seed);
}

std::vector<SingularPointRecord> cluster(const std::vector<RawIntersection>& raw, double tol) {
  const std::size_t n = raw.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (projective_distance(raw[i].point, raw[j].point) <= tol)
        parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    bool placed = false;
    for (auto& g : groups)
      if (find(g.front()) == root) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }

  const auto point_key = [](const ComplexPoint& p) {
    return std::array<double, 6>{p.x.real(), p.x.imag(), p.y.real(),
                                 p.y.imag(), p.z.real(), p.z.imag()};
  };

  std::vector<SingularPointRecord> out;
  for (const auto& g : groups) {
    SingularPointRecord rec;
    // Deterministic representative: lexicographically smallest member point.
    std::size_t best = g.front();
    for (const std::size_t idx : g)
      if (point_key(raw[idx].point) < point_key(raw[best].point)) best = idx;
    rec.location = raw[best].point;
    for (const std::size_t idx : g) {
      const auto& r = raw[idx];
      rec.members.push_back(r.a);
      rec.members.push_back(r.b);
      rec.pairs.push_back({std::min(r.a, r.b), std::max(r.a, r.b), r.multiplicity});
    }
    std::sort(rec.members.begin(), rec.members.end());
    rec.members.erase(std::unique(rec.members.begin(), rec.members.end()), rec.members.end());
    std::sort(rec.pairs.begin(), rec.pairs.end(), [](const PairMult& x, const PairMult& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [&](const SingularPointRecord& a, const SingularPointRecord& b) {
              return point_key(a.location) < point_key(b.location);
            });
  return out;
}

SingularityKind classify_point(const SingularPointRecord& rec,
                               const std::vector<Component>& components, double tol) {
  const auto describe = [&]() {
    std::ostringstream os;
    os << rec.members.size() << " members, multiplicities";
    for (const auto& pm : rec.pairs) os << ' ' << pm.multiplicity;
    return os.str();
  };

  // Tangent direction of each member at the point; members must be smooth
  // there for any supported type.
  std::vector<std::vector<C>> tangents;
  for (const int idx : rec.members) {
    const NumericPoly f = components[static_cast<std::size_t>(idx)].poly();
    std::vector<C> grad(3);
    for (int v = 0; v < 3; ++v)
      grad[static_cast<std::size_t>(v)] =
          f.partial(static_cast<Var>(v)).eval(rec.location.x, rec.location.y, rec.location.z);
    double gn = 0.0;
    for (const auto& e : grad) gn = std::max(gn, std::abs(e));
    if (gn < 1e-8)
      throw UnsupportedSingularity("a member is itself singular at a clustered point");
    tangents.push_back(std::move(grad));
  }
  const auto tangent_distance = [&](std::size_t i, std::size_t j) {
    const ComplexPoint a{tangents[i][0], tangents[i][1], tangents[i][2]};
    const ComplexPoint b{tangents[j][0], tangents[j][1], tangents[j][2]};
    return projective_distance(a, b);
  };
  const double direction_tol = std::max(tol, 1e-6);

  if (rec.members.size() == 2 && rec.pairs.size() == 1) {
    const int mult = rec.pairs.front().multiplicity;
    if (mult == 1) return SingularityKind::A1;
    if (mult == 3) {
      if (tangent_distance(0, 1) > direction_tol)
        throw UnsupportedSingularity(
            "two members meet with multiplicity 3 but distinct tangents: " + describe());
      return SingularityKind::A5;
    }
    throw UnsupportedSingularity("unsupported pair contact: " + describe());
  }
  if (rec.members.size() == 3 && rec.pairs.size() == 3) {
    for (const auto& pm : rec.pairs)
      if (pm.multiplicity != 1)
        throw UnsupportedSingularity("triple point with a tangency: " + describe());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (tangent_distance(i, j) <= direction_tol)
          throw UnsupportedSingularity("triple point with coincident tangents: " + describe());
    return SingularityKind::D4;
  }
  throw UnsupportedSingularity("unsupported local structure: " + describe());
}

WeakCombinatorics CensusResult::combinatorics() const { return {k, d, n2, n3, t5}; }

CensusResult census(const Arrangement& arr, const CensusOptions& opts) {
  if (arr.components.empty()) throw NotApplicable("census of an empty arrangement");
  for (std::size_t i = 0; i < arr.components.size(); ++i)
    if (arr.components[i].kind == ComponentKind::Cubic &&
        !is_smooth_cubic(arr.components[i], opts.tol)) {
      std::ostringstream os;
      os << "component " << i << " is a singular cubic; the census classifies"
         << " intersections of smooth members only";
      throw NotSmooth(os.str());
    }
  CensusResult res;
  res.k = arr.cubic_count();
  res.d = arr.line_count();
  res.tol = opts.tol;
  res.seed = opts.seed;

  std::vector<RawIntersection> raw;
  const int nc = static_cast<int>(arr.components.size());
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      const auto pts = pair_intersections(arr.components[static_cast<std::size_t>(i)],
                                          arr.components[static_cast<std::size_t>(j)],
                                          opts.tol, opts.seed);
      int total = 0;
      for (const auto& [p, mult] : pts) {
        raw.push_back({i, j, p, mult});
        total += mult;
      }
      const int expect = arr.components[static_cast<std::size_t>(i)].degree() *
                         arr.components[static_cast<std::size_t>(j)].degree();
      if (total != expect) {
        std::ostringstream os;
        os << "pair (" << i << ", " << j << ") accounts for " << total
           << " intersections, expected " << expect;
        throw CountMismatch(os.str());
      }
    }

  res.points = cluster(raw, opts.tol);
  for (auto& rec : res.points) {
    rec.kind = classify_point(rec, arr.components, opts.tol);
    switch (*rec.kind) {
      case SingularityKind::A1: ++res.n2; break;
      case SingularityKind::D4: ++res.n3; break;
      case SingularityKind::A5: ++res.t5; break;
    }
  }

  if (!count_satisfied(res.combinatorics())) {
    std::ostringstream os;
    os << "census (n2, n3, t5) = (" << res.n2 << ", " << res.n3 << ", " << res.t5
       << ") does not spend the pairwise budget " << combinatorial_count(res.k, res.d);
    throw CountMismatch(os.str());
  }

  for (std::size_t i = 0; i < res.points.size(); ++i)
    for (std::size_t j = i + 1; j < res.points.size(); ++j)
      res.min_gap = std::min(
          res.min_gap, projective_distance(res.points[i].location, res.points[j].location));
  return res;
}

bool is_smooth_cubic(const Component& c, double tol) {
  if (c.kind != ComponentKind::Cubic) return false;
  if (c.exact) {
    try {
      return total_tjurina_algebraic(*c.exact) == 0;
    } catch (const StabilizationFailure&) {
      return false;  // non-reduced or a cone: certainly not smooth
    }
  }
  const NumericPoly F = c.poly();
  const NumericPoly fx = F.partial(Var::X);
  const NumericPoly fy = F.partial(Var::Y);
  const NumericPoly fz = F.partial(Var::Z);
  const double scale = F.max_abs();
  if (fx.is_negligible(1e-12 * scale) || fy.is_negligible(1e-12 * scale) ||
      fz.is_negligible(1e-12 * scale))
    return false;  // the curve is a cone over a binary form
  std::vector<std::pair<ComplexPoint, int>> pts;
  try {
    pts = intersect_curves(fx, fy, tol, 0x5107);
  } catch (const SharedComponent&) {
    return false;  // common factor of two partials always meets the third
  }
  for (const auto& [p, mult] : pts)
    if (std::abs(fz.eval(p.x, p.y, p.z)) < 1e-6 * fz.max_abs()) return false;
  return true;
}

}  // namespace cubline
