#include <cubline/roots.hpp>

#include <cubline/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cubline::numeric {

C eval_poly(const std::vector<C>& c, C x) {
  C acc(0.0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

C eval_deriv(const std::vector<C>& c, C x) {
  C acc(0.0);
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + double(i) * c[i];
  return acc;
}

std::vector<C> durand_kerner(const std::vector<C>& c) {
  const std::size_t n = c.size() - 1;
  if (c.empty() || std::abs(c.back()) == 0.0)
    throw ParseError("root finding needs a nonzero leading coefficient");
  if (n == 0) return {};

  // Monic copy; the Cauchy bound gives a radius enclosing every root.
  std::vector<C> m(c.size());
  for (std::size_t i = 0; i <= n; ++i) m[i] = c[i] / c.back();
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(m[i]));
  radius = 1.0 + radius;

  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * M_PI * double(k) / double(n) + 0.4);

  for (int iter = 0; iter < 400; ++iter) {
    double shift = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      C denom(1.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      if (std::abs(denom) == 0.0) {
        // Two iterates collided (multiple root); nudge one apart.
        z[k] += C(1e-7, 1e-7) * radius;
        shift = 1.0;
        continue;
      }
      const C delta = eval_poly(m, z[k]) / denom;
      z[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * radius) break;
  }
  return z;
}

namespace {

// Greedy single-linkage clustering of a small point set.
std::vector<std::vector<std::size_t>> link_clusters(const std::vector<C>& pts, double radius) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);
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
  return groups;
}

}  // namespace

std::vector<RootCluster> clustered_roots(const std::vector<C>& c, double merge_tol) {
  const std::vector<C> raw = durand_kerner(c);
  if (raw.empty()) return {};
  double scale = 1.0;
  for (const C& z : raw) scale = std::max(scale, std::abs(z));

  const double detect = 1e-4 * scale;
  std::vector<RootCluster> clusters;
  for (const auto& group : link_clusters(raw, detect)) {
    C center(0.0);
    for (std::size_t idx : group) center += raw[idx];
    center /= double(group.size());
    const int mult = static_cast<int>(group.size());

    // Multiplicity-aware Newton: quadratic at an m-fold root.
    C z = center;
    for (int iter = 0; iter < 60; ++iter) {
      const C p = eval_poly(c, z);
      const C dp = eval_deriv(c, z);
      if (std::abs(dp) == 0.0) break;
      const C step = double(mult) * p / dp;
      z -= step;
      if (std::abs(step) < 1e-16 * scale) break;
    }
    if (std::abs(z - center) > 4.0 * detect) z = center;  // refinement ran away
    clusters.push_back({z, mult});
  }

  // merge_tol acts on the polished values only.
  std::vector<C> polished(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) polished[i] = clusters[i].value;
  std::vector<RootCluster> merged;
  for (const auto& group : link_clusters(polished, merge_tol * scale)) {
    C center(0.0);
    int mult = 0;
    for (std::size_t idx : group) {
      center += clusters[idx].value * double(clusters[idx].multiplicity);
      mult += clusters[idx].multiplicity;
    }
    merged.push_back({center / double(mult), mult});
  }
  std::sort(merged.begin(), merged.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return merged;
}

}  // namespace cubline::numeric
