#pragma once

#include <cubline/combinatorics.hpp>
#include <cubline/numeric_poly.hpp>
#include <cubline/poly.hpp>
#include <cubline/singularity.hpp>

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace cubline {

enum class ComponentKind { Line, Cubic };

int component_degree(ComponentKind kind);
std::string to_string(ComponentKind kind);

// One member of an arrangement: a line or a smooth cubic. Carries exact
// coefficients, a normalized numeric coefficient vector, or both; when
// both are present they describe the same curve (checked at construction
// to floating precision). The numeric vector is always populated and
// normalized via normalize_vector.
struct Component {
  ComponentKind kind = ComponentKind::Line;
  std::optional<HomogeneousPoly> exact;
  std::vector<std::complex<double>> numeric;

  int degree() const { return component_degree(kind); }
  NumericPoly poly() const;  // numeric form of this member

  static Component from_exact(ComponentKind kind, HomogeneousPoly f);
  static Component from_numeric(ComponentKind kind, std::vector<std::complex<double>> coeffs);
  static Component from_both(ComponentKind kind, HomogeneousPoly f,
                             std::vector<std::complex<double>> coeffs);
};

struct Arrangement {
  std::string label;
  std::vector<Component> components;
  std::optional<HomogeneousPoly> product;  // exact defining polynomial, when known

  long long cubic_count() const;
  long long line_count() const;
  int total_degree() const;

  // Exact product polynomial: the stored one, or the product of exact
  // component polynomials. Throws NotApplicable when exact data is missing.
  HomogeneousPoly exact_product() const;
};

// One intersection point of a specific pair of members.
struct RawIntersection {
  int a = 0;
  int b = 0;
  ComplexPoint point;
  int multiplicity = 0;
};

// A singular point of the product curve: where it is, which members pass
// through it, and how each pair meets there.
struct PairMult {
  int a = 0;
  int b = 0;
  int multiplicity = 0;
};

struct SingularPointRecord {
  ComplexPoint location;
  std::vector<int> members;      // ascending component indices
  std::vector<PairMult> pairs;   // ascending by (a, b)
  std::optional<SingularityKind> kind;
};

// Intersection points of two distinct members with multiplicities; the
// multiplicities sum to deg a * deg b. Throws SharedComponent if the two
// share a component and ProjectionDegenerate if no sheared projection
// within the retry budget separates the fibers.
std::vector<std::pair<ComplexPoint, int>> pair_intersections(const Component& a,
                                                             const Component& b, double tol,
                                                             std::uint64_t seed = 0);

// Generic curve-curve intersection by resultants, used by the pair and
// inflection pipelines. Coefficients over monomial_basis(deg).
std::vector<std::pair<ComplexPoint, int>> intersect_curves(const NumericPoly& A,
                                                           const NumericPoly& B, double tol,
                                                           std::uint64_t seed);

// Groups per-pair intersections into singular points of the product: two
// points land together when their projective distance is at most tol.
std::vector<SingularPointRecord> cluster(const std::vector<RawIntersection>& raw, double tol);

// Local type of one clustered point:
//   two members meeting once          -> A1
//   two members meeting triply        -> A5
//   three members, pairwise once,
//   pairwise distinct tangents        -> D4
// Anything else throws UnsupportedSingularity.
SingularityKind classify_point(const SingularPointRecord& rec,
                               const std::vector<Component>& components, double tol);

struct CensusOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

struct CensusResult {
  WeakCombinatorics combinatorics() const;
  long long k = 0;
  long long d = 0;
  long long n2 = 0;
  long long n3 = 0;
  long long t5 = 0;
  std::vector<SingularPointRecord> points;
  double min_gap = std::numeric_limits<double>::infinity();
  double tol = 0.0;
  std::uint64_t seed = 0;
};

// Full numeric singularity census of an arrangement. Classifies every
// clustered point, fills the counts, and checks them against the pairwise
// intersection budget (CountMismatch on failure).
CensusResult census(const Arrangement& arr, const CensusOptions& opts = {});

// Whether a degree-3 component is a smooth curve. Exact data uses the
// Jacobian criterion (total Tjurina zero); numeric data intersects two
// partial-derivative conics and probes the third.
bool is_smooth_cubic(const Component& c, double tol = 1e-9);

}  // namespace cubline
