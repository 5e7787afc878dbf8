#include <cubline/builders.hpp>
#include <cubline/census.hpp>
#include <cubline/errors.hpp>
#include <cubline/io.hpp>
#include <cubline/jacobian.hpp>
#include <cubline/reproduce.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cubline;
using nlohmann::ordered_json;

namespace {

struct GlobalFlags {
  bool json = false;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

ordered_json tool_json(const GlobalFlags& g) {
  ordered_json j;
  j["name"] = "cubline";
  j["version"] = kVersion;
  j["tol"] = g.tol;
  j["seed"] = g.seed;
  return j;
}

ordered_json complex_json(const std::complex<double>& c) {
  return ordered_json::array({c.real(), c.imag()});
}

ordered_json point_json(const SingularPointRecord& rec) {
  ordered_json j;
  j["location"] =
      ordered_json::array({complex_json(rec.location.x), complex_json(rec.location.y),
                           complex_json(rec.location.z)});
  j["members"] = rec.members;
  ordered_json pairs = ordered_json::array();
  for (const auto& pm : rec.pairs) pairs.push_back({pm.a, pm.b, pm.multiplicity});
  j["pairs"] = std::move(pairs);
  j["type"] = rec.kind ? ordered_json(to_string(*rec.kind)) : ordered_json(nullptr);
  return j;
}

ordered_json census_json(const CensusResult& c) {
  ordered_json j;
  j["cubics"] = c.k;
  j["lines"] = c.d;
  j["n2"] = c.n2;
  j["n3"] = c.n3;
  j["t5"] = c.t5;
  j["count_identity"] = count_satisfied(c.combinatorics());
  j["min_gap"] = c.points.size() > 1 ? ordered_json(c.min_gap) : ordered_json(nullptr);
  ordered_json pts = ordered_json::array();
  for (const auto& rec : c.points) pts.push_back(point_json(rec));
  j["points"] = std::move(pts);
  return j;
}

ordered_json window_json(const DegreeWindow& w) {
  ordered_json j;
  j["degree"] = w.m;
  j["lower"] = w.lower;
  j["upper"] = w.upper;
  j["empty"] = w.empty();
  j["admissible"] = w.admissible();
  return j;
}

ordered_json freeness_json(const FreenessReport& rep) {
  ordered_json j;
  j["degree"] = rep.m;
  j["mdr"] = rep.d1;
  j["tjurina_algebraic"] = rep.tau_algebraic;
  j["tjurina_combinatorial"] =
      rep.tau_combinatorial ? ordered_json(*rep.tau_combinatorial) : ordered_json(nullptr);
  j["window"] = window_json(rep.window);
  j["verdict"] = to_string(rep.verdict);
  j["exponents"] = rep.exponents
                       ? ordered_json::array({rep.exponents->first, rep.exponents->second})
                       : ordered_json(nullptr);
  j["reason"] = rep.reason;
  return j;
}

std::string format_complex(const std::complex<double>& c) {
  std::ostringstream os;
  os.precision(6);
  os << c.real();
  if (c.imag() != 0.0) os << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  return os.str();
}

std::string format_point(const ComplexPoint& p) {
  return "(" + format_complex(p.x) + " : " + format_complex(p.y) + " : " + format_complex(p.z) +
         ")";
}

std::string shape(const Arrangement& arr) {
  std::ostringstream os;
  os << arr.cubic_count() << (arr.cubic_count() == 1 ? " cubic + " : " cubics + ")
     << arr.line_count() << (arr.line_count() == 1 ? " line" : " lines") << ", degree "
     << arr.total_degree();
  return os.str();
}

void print_census(std::ostream& out, const CensusResult& c) {
  out << "census (tol " << c.tol << ", seed " << c.seed << "): n2 = " << c.n2
      << ", n3 = " << c.n3 << ", t5 = " << c.t5 << " over " << c.points.size()
      << (c.points.size() == 1 ? " singular point" : " singular points") << "\n";
  for (const auto& rec : c.points) {
    out << "  " << (rec.kind ? to_string(*rec.kind) : std::string("?")) << " at "
        << format_point(rec.location) << ", members";
    for (int m : rec.members) out << " " << m;
    out << "\n";
  }
  const auto wc = c.combinatorics();
  out << "  count identity: n2 + 3 n3 + 3 t5 = " << (wc.n2 + 3 * wc.n3 + 3 * wc.t5)
      << " spends the pairwise budget " << combinatorial_count(wc.k, wc.d) << "\n";
  if (c.points.size() > 1)
    out << "  minimum gap between singular points: " << c.min_gap << "\n";
}

int cmd_analyze(const std::string& file, const GlobalFlags& g) {
  const Arrangement arr = load_arrangement(file);
  const CensusResult c = census(arr, {g.tol, g.seed});

  std::optional<FreenessReport> rep;
  std::string exact_note;
  try {
    rep = analyze(arr.exact_product(), c.combinatorics());
  } catch (const NotApplicable& e) {
    exact_note = e.what();
  }

  if (g.json) {
    ordered_json j;
    j["command"] = "analyze";
    j["tool"] = tool_json(g);
    j["label"] = arr.label;
    j["shape"] = shape(arr);
    j["census"] = census_json(c);
    j["freeness"] = rep ? freeness_json(*rep) : ordered_json(nullptr);
    if (!rep) j["freeness_unavailable"] = exact_note;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "arrangement: " << (arr.label.empty() ? file : arr.label) << " (" << shape(arr)
            << ")\n";
  print_census(std::cout, c);
  if (!rep) {
    std::cout << "exact analysis unavailable: " << exact_note << "\n";
    return 0;
  }
  std::cout << "mdr: d1 = " << rep->d1 << "\n";
  std::cout << "total Tjurina: " << rep->tau_algebraic << " algebraic";
  if (rep->tau_combinatorial) std::cout << ", " << *rep->tau_combinatorial << " combinatorial";
  std::cout << "\n";
  std::cout << "exponent window for degree " << rep->m << ": [" << rep->window.lower << ", "
            << rep->window.upper << "]" << (rep->window.empty() ? " (empty)" : "") << "\n";
  std::cout << "verdict: " << to_string(rep->verdict);
  if (rep->exponents)
    std::cout << ", exponents (" << rep->exponents->first << ", " << rep->exponents->second
              << ")";
  std::cout << "\n  " << rep->reason << "\n";
  return 0;
}

std::string tag_text(HirzebruchTag tag) {
  switch (tag) {
    case HirzebruchTag::Pass: return "passes";
    case HirzebruchTag::Fail: return "fails";
    default: return "n/a";
  }
}

int cmd_enumerate(long long k, long long d, bool free_only, bool hfilter,
                  const GlobalFlags& g) {
  struct Row {
    WeakCombinatorics wc;
    long long tau = 0;
    std::optional<int> d1;
    HirzebruchTag tag = HirzebruchTag::NotApplicable;
  };
  std::vector<Row> rows;
  if (free_only) {
    for (const auto& cand : enumerate_free_candidates(k, d))
      rows.push_back({cand.wc, cand.tau, cand.d1, cand.hirzebruch});
  } else {
    const DegreeWindow w = degree_window(static_cast<int>(3 * k + d));
    for (const auto& wc : enumerate_admissible(k, d)) {
      Row row;
      row.wc = wc;
      row.tau = total_tjurina_combinatorial(wc);
      for (int d1 : w.admissible()) {
        const long long m = wc.m();
        if ((m - 1) * (m - 1) - d1 * (m - d1 - 1) == row.tau) row.d1 = d1;
      }
      try {
        row.tag = hirzebruch_check(wc) ? HirzebruchTag::Pass : HirzebruchTag::Fail;
      } catch (const HypothesisViolated&) {
        row.tag = HirzebruchTag::NotApplicable;
      }
      rows.push_back(row);
    }
  }
  if (hfilter)
    std::erase_if(rows, [](const Row& r) { return r.tag == HirzebruchTag::Fail; });

  if (g.json) {
    ordered_json j;
    j["command"] = "enumerate";
    j["tool"] = tool_json(g);
    j["cubics"] = k;
    j["lines"] = d;
    j["degree"] = 3 * k + d;
    j["free_only"] = free_only;
    j["hirzebruch_filter"] = hfilter;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["n2"] = r.wc.n2;
      row["n3"] = r.wc.n3;
      row["t5"] = r.wc.t5;
      row["tjurina"] = r.tau;
      row["d1"] = r.d1 ? ordered_json(*r.d1) : ordered_json(nullptr);
      row["hirzebruch"] = tag_text(r.tag);
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << k << (k == 1 ? " cubic, " : " cubics, ") << d << (d == 1 ? " line" : " lines")
            << ", degree " << (3 * k + d) << "; pairwise budget "
            << combinatorial_count(k, d) << "\n";
  std::cout << "  n2   n3   t5   tjurina   d1   hirzebruch\n";
  for (const auto& r : rows) {
    std::ostringstream d1s;
    if (r.d1)
      d1s << *r.d1;
    else
      d1s << "-";
    std::cout << "  " << r.wc.n2 << "    " << r.wc.n3 << "    " << r.wc.t5 << "    " << r.tau
              << "    " << d1s.str() << "    " << tag_text(r.tag) << "\n";
  }
  std::cout << rows.size() << (rows.size() == 1 ? " row\n" : " rows\n");
  return 0;
}

int cmd_window(int degree, const GlobalFlags& g) {
  const DegreeWindow w = degree_window(degree);
  if (g.json) {
    ordered_json j;
    j["command"] = "window";
    j["tool"] = tool_json(g);
    j["window"] = window_json(w);
    j["verdict"] = w.empty() ? "no arrangement of this degree can be free"
                             : "freeness requires mdr in the window";
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "degree " << degree << ": exponent window [" << w.lower << ", " << w.upper
            << "]\n";
  if (w.empty()) {
    std::cout << "  empty: an arrangement of cubics and lines with this degree"
              << " cannot be free\n";
  } else {
    std::cout << "  admissible d1:";
    for (int d1 : w.admissible()) std::cout << " " << d1;
    std::cout << "\n";
  }
  return 0;
}

int cmd_example(const std::string& name, const std::string& emit, const GlobalFlags& g) {
  const Arrangement arr = example(name);

  // Round-trip self check: the emitted form must parse back and re-emit
  // byte-identically.
  const ordered_json j1 = arrangement_to_json(arr);
  const ordered_json j2 = arrangement_to_json(arrangement_from_json(j1));
  if (j1.dump() != j2.dump()) throw Error("example '" + name + "' does not round-trip");

  if (!emit.empty()) save_arrangement(emit, arr);

  if (g.json) {
    ordered_json j;
    j["command"] = "example";
    j["tool"] = tool_json(g);
    j["arrangement"] = j1;
    if (!emit.empty()) j["emitted"] = emit;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "example " << arr.label << ": " << shape(arr) << "\n";
  std::cout << "components:\n";
  for (std::size_t i = 0; i < arr.components.size(); ++i) {
    const auto& c = arr.components[i];
    std::cout << "  [" << i << "] " << to_string(c.kind) << "  ";
    if (c.exact) {
      std::cout << to_string(*c.exact);
    } else {
      std::cout << "numeric (" << format_complex(c.numeric[0]);
      for (std::size_t t = 1; t < c.numeric.size(); ++t)
        std::cout << ", " << format_complex(c.numeric[t]);
      std::cout << ")";
    }
    std::cout << "\n";
  }
  try {
    std::cout << "product: " << to_string(arr.exact_product()) << "\n";
  } catch (const NotApplicable&) {
  }
  if (!emit.empty()) std::cout << "written to " << emit << "\n";
  return 0;
}

int cmd_reproduce(const std::string& only, const GlobalFlags& g) {
  const auto results = run_checks({only, g.tol, g.seed});
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;

  if (g.json) {
    ordered_json j;
    j["command"] = "reproduce";
    j["tool"] = tool_json(g);
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
      ordered_json cj;
      cj["name"] = r.name;
      cj["passed"] = r.passed;
      cj["detail"] = r.detail;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
    std::cout << passed << " of " << results.size() << " checks passed\n";
  }
  return passed == results.size() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrangements of smooth cubics and lines: exact freeness analysis,"
               " numeric singularity census, and combinatorial enumeration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalFlags g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--tol", g.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for the randomized numeric steps");

  std::string file;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "freeness analysis of an arrangement file");
  analyze_cmd->add_option("file", file, "arrangement JSON file")->required();
  analyze_cmd->fallthrough();

  long long k = 0, d = 0;
  bool free_only = false, hfilter = false;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "admissible singularity counts for k cubics and d lines");
  enum_cmd->add_option("--cubics", k, "number of smooth cubics")->required()->check(
      CLI::PositiveNumber);
  enum_cmd->add_option("--lines", d, "number of lines")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--free-only", free_only, "only counts matching a free exponent");
  enum_cmd->add_flag("--hirzebruch-filter", hfilter, "drop rows failing the inequality");
  enum_cmd->fallthrough();

  int degree = 0;
  auto* window_cmd = app.add_subcommand("window", "exponent window for a free curve");
  window_cmd->add_option("--degree", degree, "degree of the product curve")->required();
  window_cmd->fallthrough();

  std::string name, emit;
  auto* example_cmd = app.add_subcommand("example", "emit a built-in arrangement");
  example_cmd->add_option("name", name, "EL6, EL7, CPPP or FERMAT")->required();
  example_cmd->add_option("--emit", emit, "write the arrangement file here");
  example_cmd->fallthrough();

  std::string only;
  auto* repro_cmd =
      app.add_subcommand("reproduce", "recompute every built-in claim and report pass/fail");
  repro_cmd->add_option("--only", only, "run a single check group");
  repro_cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return cmd_analyze(file, g);
    if (*enum_cmd) return cmd_enumerate(k, d, free_only, hfilter, g);
    if (*window_cmd) return cmd_window(degree, g);
    if (*example_cmd) return cmd_example(name, emit, g);
    if (*repro_cmd) return cmd_reproduce(only, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
