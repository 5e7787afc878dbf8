#include <cubline/reproduce.hpp>

#include <cubline/builders.hpp>
#include <cubline/census.hpp>
#include <cubline/errors.hpp>
#include <cubline/jacobian.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cubline {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailure(msg);
}

template <typename T>
std::string eq(const char* label, const T& got, const T& want) {
  std::ostringstream os;
  os << label << ": got " << got << ", expected " << want;
  return os.str();
}

std::string triple(const WeakCombinatorics& wc) {
  std::ostringstream os;
  os << "(" << wc.n2 << ", " << wc.n3 << ", " << wc.t5 << ")";
  return os.str();
}

// The analyze -> census evidence chain for one built-in arrangement.
FreenessReport analyzed_with_census(const std::string& name, const CheckOptions& opts,
                                    WeakCombinatorics* census_wc = nullptr) {
  const Arrangement arr = example(name);
  const CensusResult c = census(arr, {opts.tol, opts.seed});
  expect(count_satisfied(c.combinatorics()),
         name + ": census counts do not satisfy the intersection identity");
  if (census_wc) *census_wc = c.combinatorics();
  return analyze(arr.exact_product(), c.combinatorics());
}

std::string check_free_curve(const std::string& name, int d1, long long tau, int e2,
                             const CheckOptions& opts) {
  const FreenessReport rep = analyzed_with_census(name, opts);
  expect(rep.d1 == d1, eq((name + " mdr").c_str(), rep.d1, d1));
  expect(rep.tau_algebraic == tau, eq((name + " total Tjurina").c_str(), rep.tau_algebraic, tau));
  expect(rep.tau_combinatorial.has_value() && *rep.tau_combinatorial == tau,
         name + ": combinatorial Tjurina disagrees with the algebraic one");
  expect(rep.verdict == FreenessVerdict::Free, name + ": expected verdict Free, got " +
                                                   to_string(rep.verdict) + " (" + rep.reason +
                                                   ")");
  expect(rep.exponents == std::make_pair(d1, e2), name + ": wrong exponents");
  std::ostringstream os;
  os << "mdr " << d1 << ", total Tjurina " << tau << " algebraic = combinatorial, free with "
     << "exponents (" << d1 << ", " << e2 << ")";
  return os.str();
}

std::string check_freeness_el6(const CheckOptions& opts) {
  return check_free_curve("EL6", 2, 19, 3, opts);
}

std::string check_freeness_el7(const CheckOptions& opts) {
  return check_free_curve("EL7", 3, 27, 3, opts);
}

std::string check_freeness_cppp(const CheckOptions& opts) {
  const FreenessReport rep = analyzed_with_census("CPPP", opts);
  expect(rep.m == 12, eq("CPPP degree", rep.m, 12));
  expect(rep.d1 == 7, eq("CPPP mdr", rep.d1, 7));
  expect(rep.tau_algebraic == 84, eq("CPPP total Tjurina", rep.tau_algebraic, 84LL));
  expect(rep.tau_combinatorial.has_value() && *rep.tau_combinatorial == 84,
         "CPPP: combinatorial Tjurina disagrees with the algebraic one");
  expect(rep.window.empty(), "CPPP: the degree-12 exponent window should be empty");
  expect(rep.verdict == FreenessVerdict::NotFreeByDegreeWindow,
         "CPPP: expected NotFreeByDegreeWindow, got " + to_string(rep.verdict));
  return "mdr 7, total Tjurina 84 algebraic = combinatorial, not free: degree-12 window empty";
}

std::string check_freeness_fermat(const CheckOptions& opts) {
  const FreenessReport rep = analyzed_with_census("FERMAT", opts);
  expect(rep.tau_algebraic == 0, eq("smooth cubic total Tjurina", rep.tau_algebraic, 0LL));
  expect(rep.verdict == FreenessVerdict::NotFreeByDegreeWindow,
         "smooth cubic: expected NotFreeByDegreeWindow, got " + to_string(rep.verdict));
  expect(rep.reason.find("smooth") != std::string::npos,
         "smooth cubic: the verdict should say the curve is smooth");
  return "total Tjurina 0: smooth, the freeness question is vacuous";
}

std::string check_census(const std::string& name, long long n2, long long n3, long long t5,
                         const CheckOptions& opts) {
  const Arrangement arr = example(name);
  const WeakCombinatorics want{arr.cubic_count(), arr.line_count(), n2, n3, t5};
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    const CensusResult c = census(arr, {tol, opts.seed});
    expect(c.combinatorics() == want, name + " at tol " + std::to_string(tol) + ": got " +
                                          triple(c.combinatorics()) + ", expected " +
                                          triple(want));
    expect(count_satisfied(c.combinatorics()),
           name + ": census counts do not satisfy the intersection identity");
  }
  return "(n2, n3, t5) = " + triple(want) + " at tolerances 1e-6, 1e-8, 1e-10";
}

std::string check_census_el6(const CheckOptions& opts) { return check_census("EL6", 0, 1, 3, opts); }
std::string check_census_el7(const CheckOptions& opts) { return check_census("EL7", 3, 1, 4, opts); }
std::string check_census_cppp(const CheckOptions& opts) {
  return check_census("CPPP", 27, 3, 9, opts);
}

std::string check_census_fermat(const CheckOptions& opts) {
  const CensusResult c = census(example("FERMAT"), {opts.tol, opts.seed});
  expect(c.points.empty() && c.n2 == 0 && c.n3 == 0 && c.t5 == 0,
         "a smooth cubic alone should have no singular points");
  return "a smooth cubic alone has no singular points";
}

std::string check_enumeration_degree4(const CheckOptions&) {
  const auto adm = enumerate_admissible(1, 1);
  const std::vector<WeakCombinatorics> want = {{1, 1, 0, 0, 1}, {1, 1, 3, 0, 0}};
  expect(adm == want, eq("degree-4 admissible count", adm.size(), want.size()) +
                          "; the tuples must be (0,0,1) and (3,0,0)");
  long long max_tau = 0;
  for (const auto& wc : adm) max_tau = std::max(max_tau, total_tjurina_combinatorial(wc));
  expect(max_tau == 5, eq("degree-4 max combinatorial Tjurina", max_tau, 5LL));
  // The only admissible exponent is 1, which would need Tjurina 9 - 2 = 7.
  expect(degree_window(4).admissible() == std::vector<int>{1},
         "the degree-4 window should be exactly {1}");
  expect(enumerate_free_candidates(1, 1).empty(),
         "no cubic-plus-line combinatorics should reach the free value");
  return "admissible (n2, n3, t5): (0,0,1), (3,0,0); max Tjurina 5 < 7, so never free";
}

std::string check_enumeration_degree5(const CheckOptions&) {
  const auto adm = enumerate_admissible(1, 2);
  const std::vector<WeakCombinatorics> want = {{1, 2, 1, 0, 2}, {1, 2, 1, 1, 1}, {1, 2, 1, 2, 0},
                                               {1, 2, 4, 0, 1}, {1, 2, 4, 1, 0}, {1, 2, 7, 0, 0}};
  expect(adm == want, "degree-5 admissible tuples differ from the expected six");
  long long max_tau = 0;
  for (const auto& wc : adm) max_tau = std::max(max_tau, total_tjurina_combinatorial(wc));
  expect(max_tau == 11, eq("degree-5 max combinatorial Tjurina", max_tau, 11LL));
  expect(degree_window(5).admissible() == std::vector<int>{2},
         "the degree-5 window should be exactly {2}");
  expect(enumerate_free_candidates(1, 2).empty(),
         "no cubic-plus-conic-of-lines combinatorics should reach the free value 12");
  return "six admissible tuples; max Tjurina 11 < 12, so never free";
}

std::string check_window_table(const CheckOptions&) {
  const std::vector<std::tuple<int, int, int>> table = {
      {3, 0, 1}, {4, 1, 1}, {5, 2, 2},  {6, 2, 2},  {7, 3, 3},
      {8, 4, 3}, {9, 4, 4}, {10, 5, 4}, {12, 6, 5}, {13, 7, 6}};
  for (const auto& [m, lo, hi] : table) {
    const DegreeWindow w = degree_window(m);
    expect(w.lower == lo && w.upper == hi,
           "window bounds for degree " + std::to_string(m) + " are off");
  }
  expect(!degree_window(6).empty() && !degree_window(7).empty() && !degree_window(9).empty(),
         "degrees 6, 7 and 9 must admit exponents");
  expect(degree_window(8).empty() && degree_window(12).empty() && degree_window(13).empty(),
         "degrees 8, 12 and 13 must have empty windows");
  expect(degree_window(9).admissible() == std::vector<int>{4},
         "the degree-9 window should be exactly {4}");
  return "windows for degrees 8, 12, 13 are empty; degree 9 admits only exponent 4";
}

std::string expect_candidates(const char* what, long long k, long long d,
                              const std::vector<std::tuple<long long, long long, long long,
                                                           HirzebruchTag>>& want,
                              long long tau) {
  const auto got = enumerate_free_candidates(k, d);
  expect(got.size() == want.size(), eq((std::string(what) + " candidate count").c_str(),
                                       got.size(), want.size()));
  std::ostringstream os;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto& [n2, n3, t5, tag] = want[i];
    const WeakCombinatorics wc{k, d, n2, n3, t5};
    expect(got[i].wc == wc, std::string(what) + ": candidate " + std::to_string(i) +
                                " is " + triple(got[i].wc) + ", expected " + triple(wc));
    expect(got[i].tau == tau, std::string(what) + ": candidate Tjurina is off");
    expect(got[i].hirzebruch == tag,
           std::string(what) + ": inequality tag for " + triple(wc) + " is wrong");
    if (i) os << ", ";
    os << triple(wc) << (tag == HirzebruchTag::Pass ? " passes" : " fails");
  }
  return os.str();
}

std::string check_degree9_two_cubics(const CheckOptions&) {
  using HT = HirzebruchTag;
  const auto detail = expect_candidates(
      "two cubics + three lines", 2, 3,
      {{0, 2, 8, HT::Pass}, {3, 0, 9, HT::Pass}}, 48);
  return "free candidates with Tjurina 48: " + detail;
}

std::string check_degree9_one_cubic(const CheckOptions&) {
  using HT = HirzebruchTag;
  const auto detail = expect_candidates(
      "one cubic + six lines", 1, 6,
      {{0, 7, 4, HT::Pass}, {3, 5, 5, HT::Pass}, {6, 3, 6, HT::Fail}, {9, 1, 7, HT::Fail}}, 48);
  return "free candidates with Tjurina 48: " + detail;
}

std::string check_hirzebruch_counts(const CheckOptions& opts) {
  // For each built-in arrangement with lines, the census counts must pass
  // the inequality 4*(27k + n2) + 3*n3 >= 4*(d + 5*t5); the twelve-degree
  // example sits closest to the bound.
  std::ostringstream os;
  for (const char* name : {"EL6", "EL7", "CPPP"}) {
    const CensusResult c = census(example(name), {opts.tol, opts.seed});
    expect(hirzebruch_check(c.combinatorics()),
           std::string(name) + ": census counts violate the inequality");
    const auto wc = c.combinatorics();
    const long long lhs = 4 * (27 * wc.k + wc.n2) + 3 * wc.n3;
    const long long rhs = 4 * (wc.d + 5 * wc.t5);
    if (os.tellp() > 0) os << "; ";
    os << name << " " << lhs << " >= " << rhs;
    if (std::string(name) == "CPPP")
      expect(lhs == 225 && rhs == 216, "CPPP margin should be 225 against 216");
  }
  return os.str();
}

std::string check_euler_relation(const CheckOptions& opts) {
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  for (int it = 0; it < 100; ++it) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    HomogeneousPoly f(deg);
    for (const auto& m : monomial_basis(deg))
      if (rng() % 2)
        f.add_term(m, rational(static_cast<long>(rng() % 19) - 9,
                               1 + static_cast<long>(rng() % 7)));
    if (f.is_zero()) continue;
    HomogeneousPoly lhs(deg);
    lhs += multiply(HomogeneousPoly::variable(Var::X), partial(f, Var::X));
    lhs += multiply(HomogeneousPoly::variable(Var::Y), partial(f, Var::Y));
    lhs += multiply(HomogeneousPoly::variable(Var::Z), partial(f, Var::Z));
    HomogeneousPoly rhs = f;
    rhs *= rational(deg);
    expect(lhs == rhs, "x f_x + y f_y + z f_z = deg(f) f failed on a random polynomial");
  }
  return "x f_x + y f_y + z f_z = deg(f) f on 100 random polynomials";
}

std::array<std::array<Rational, 3>, 3> random_unimodular(std::mt19937_64& rng) {
  // Small random integer matrices, retried until the determinant is nonzero.
  while (true) {
    std::array<std::array<Rational, 3>, 3> M;
    for (auto& row : M)
      for (auto& e : row) e = rational(static_cast<long>(rng() % 7) - 3);
    const Rational det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (det != 0) return M;
  }
}

std::string check_coordinate_invariance(const CheckOptions& opts) {
  // mdr and the total Tjurina number are projective invariants: recompute
  // both after exact random changes of coordinates.
  std::mt19937_64 rng(opts.seed ^ 0x1234567890abcdefull);
  constexpr int kChanges = 10;
  std::ostringstream os;
  for (const auto& name : example_names()) {
    const HomogeneousPoly f = example(name).exact_product();
    const int d1 = mdr(f);
    const long long tau = total_tjurina_algebraic(f);
    for (int it = 0; it < kChanges; ++it) {
      const HomogeneousPoly g = substitute_linear(f, random_unimodular(rng));
      expect(mdr(g) == d1, name + ": mdr changed under a coordinate change");
      expect(total_tjurina_algebraic(g) == tau,
             name + ": total Tjurina changed under a coordinate change");
    }
    if (os.tellp() > 0) os << ", ";
    os << name;
  }
  os << ", " << kChanges << " changes each";
  return "mdr and Tjurina stable under random exact coordinate changes: " + os.str();
}

std::string check_intersection_budget(const CheckOptions& opts) {
  long long pairs = 0;
  for (const auto& name : example_names()) {
    const Arrangement arr = example(name);
    for (std::size_t i = 0; i < arr.components.size(); ++i)
      for (std::size_t j = i + 1; j < arr.components.size(); ++j) {
        const auto pts =
            pair_intersections(arr.components[i], arr.components[j], opts.tol, opts.seed);
        long long total = 0;
        for (const auto& [p, mult] : pts) total += mult;
        const long long want = static_cast<long long>(arr.components[i].degree()) *
                               arr.components[j].degree();
        expect(total == want, name + ": a pair of members misses its intersection budget");
        ++pairs;
      }
  }
  std::ostringstream os;
  os << "multiplicities sum to deg * deg for all " << pairs << " member pairs";
  return os.str();
}

std::string check_tjurina_stabilization(const CheckOptions&) {
  // On the scan window of every built-in arrangement, two consecutive equal
  // Hilbert values of S/J_f imply a third, and the stable value is the
  // total Tjurina number.
  const struct {
    const char* name;
    long long tau;
  } plan[] = {{"EL6", 19}, {"EL7", 27}, {"CPPP", 84}, {"FERMAT", 0}};
  std::ostringstream os;
  for (const auto& [name, tau] : plan) {
    const HomogeneousPoly f = example(name).exact_product();
    const int start = 3 * (f.degree() - 2);
    std::vector<long long> h;
    for (int t = start; t <= start + 6; ++t)
      h.push_back(hilbert_jacobian(f, t));
    bool stable = false;
    for (std::size_t i = 0; i + 2 < h.size(); ++i)
      if (h[i] == h[i + 1]) {
        expect(h[i + 2] == h[i], std::string(name) +
                                     ": two consecutive Hilbert values agree but the third"
                                     " differs");
        stable = stable || h[i] == tau;
      }
    expect(stable, std::string(name) + ": the Hilbert function never settles at the Tjurina"
                                       " number on the scan window");
    if (os.tellp() > 0) os << "; ";
    os << name << " settles at " << tau << " from t = " << start;
  }
  return os.str();
}

std::string check_invariant_pins(const CheckOptions&) {
  // Frozen values, cross-checked against an independent computer algebra
  // computation (see docs/crosscheck.md).
  const struct {
    const char* name;
    int d1;
    long long tau;
  } pins[] = {{"EL6", 2, 19}, {"EL7", 3, 27}, {"CPPP", 7, 84}, {"FERMAT", 2, 0}};
  std::ostringstream os;
  for (const auto& [name, d1, tau] : pins) {
    const HomogeneousPoly f = example(name).exact_product();
    expect(mdr(f) == d1, std::string(name) + ": mdr drifted from its pinned value");
    expect(total_tjurina_algebraic(f) == tau,
           std::string(name) + ": total Tjurina drifted from its pinned value");
    if (os.tellp() > 0) os << ", ";
    os << name << " (" << d1 << ", " << tau << ")";
  }
  return "pinned (mdr, Tjurina): " + os.str();
}

std::string check_rank_agreement(const CheckOptions&) {
  // The exact and modular rank backends must agree on the matrices that
  // decide the hardest built-in Tjurina number.
  const HomogeneousPoly f = example("CPPP").exact_product();
  std::ostringstream os;
  for (int r = 19; r <= 21; ++r) {
    const ExactMatrix M = syzygy_matrix(f, r);
    const int exact = M.rank(RankPolicy::Exact);
    const int modular = M.rank(RankPolicy::Modular);
    expect(exact == modular, "exact and modular ranks disagree at multiplier degree " +
                                 std::to_string(r));
    if (os.tellp() > 0) os << ", ";
    os << M.rows() << "x" << M.cols() << " rank " << exact;
  }
  return "exact = modular on the deciding matrices: " + os.str();
}

using CheckFn = std::string (*)(const CheckOptions&);

struct Entry {
  const char* name;
  CheckFn fn;
};

constexpr Entry kChecks[] = {
    {"freeness/EL6", check_freeness_el6},
    {"freeness/EL7", check_freeness_el7},
    {"freeness/CPPP", check_freeness_cppp},
    {"freeness/FERMAT", check_freeness_fermat},
    {"census/EL6", check_census_el6},
    {"census/EL7", check_census_el7},
    {"census/CPPP", check_census_cppp},
    {"census/FERMAT", check_census_fermat},
    {"enumeration/degree-4", check_enumeration_degree4},
    {"enumeration/degree-5", check_enumeration_degree5},
    {"window/exponent-table", check_window_table},
    {"degree9/two-cubics-three-lines", check_degree9_two_cubics},
    {"degree9/one-cubic-six-lines", check_degree9_one_cubic},
    {"hirzebruch/census-counts", check_hirzebruch_counts},
    {"properties/euler-relation", check_euler_relation},
    {"properties/coordinate-invariance", check_coordinate_invariance},
    {"properties/intersection-budget", check_intersection_budget},
    {"properties/tjurina-stabilization", check_tjurina_stabilization},
    {"regression/invariant-pins", check_invariant_pins},
    {"regression/rank-agreement", check_rank_agreement},
};

std::string group_of(const std::string& name) { return name.substr(0, name.find('/')); }

}  // namespace

std::vector<std::string> check_groups() {
  std::vector<std::string> out;
  for (const auto& e : kChecks) {
    const std::string g = group_of(e.name);
    if (out.empty() || out.back() != g) out.push_back(g);
  }
  return out;
}

std::vector<CheckResult> run_checks(const CheckOptions& opts) {
  std::vector<CheckResult> out;
  for (const auto& e : kChecks) {
    if (!opts.group.empty() && group_of(e.name) != opts.group) continue;
    CheckResult r;
    r.name = e.name;
    try {
      r.detail = e.fn(opts);
      r.passed = true;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = ex.what();
    }
    out.push_back(std::move(r));
  }
  if (out.empty()) throw NotApplicable("no check group named '" + opts.group + "'");
  return out;
}

}  // namespace cubline
