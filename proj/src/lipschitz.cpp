#include "linf/lipschitz.hpp"

#include <algorithm>

namespace linf {

NotLipschitz::NotLipschitz(PointId a_, PointId b_)
    : std::runtime_error("function is not 1-Lipschitz on pair (" + std::to_string(a_) + "," + std::to_string(b_) + ")"),
      a(a_), b(b_) {}

std::optional<Pair> lipschitz_violation(const MetricSpace& ms, const LipschitzFn& f) {
  if (f.values.size() != ms.size()) throw DimensionMismatch("function size does not match the space");
  for (PointId a = 0; a < ms.size(); ++a)
    for (PointId b = a + 1; b < ms.size(); ++b)
      if (abs(f.values[a] - f.values[b]) > ms(a, b)) return Pair{a, b};
  return std::nullopt;
}

std::optional<Pair> lipschitz_violation(const MetricSpace& ms, const PartialFn& f) {
  if (f.size() != ms.size()) throw DimensionMismatch("function size does not match the space");
  for (PointId a = 0; a < ms.size(); ++a) {
    if (!f[a]) continue;
    for (PointId b = a + 1; b < ms.size(); ++b)
      if (f[b] && abs(*f[a] - *f[b]) > ms(a, b)) return Pair{a, b};
  }
  return std::nullopt;
}

Rational extension_value(const MetricSpace& ms, const PartialFn& f, PointId x0) {
  std::optional<Rational> best;
  for (PointId y = 0; y < f.size(); ++y) {
    if (y == x0 || !f[y]) continue;
    Rational candidate = *f[y] - ms(y, x0);
    if (!best || candidate > *best) best = std::move(candidate);
  }
  if (!best) throw std::invalid_argument("cannot extend a function defined nowhere");
  return *best;
}

PartialFn extend_lipschitz(const MetricSpace& ms, PartialFn f, PointId x0) {
  if (f.size() != ms.size()) throw DimensionMismatch("function size does not match the space");
  if (f[x0]) throw std::invalid_argument("point " + std::to_string(x0) + " already has a value");
  f[x0] = extension_value(ms, f, x0);
  return f;
}

LipschitzFn extend_to_all(const MetricSpace& ms, PartialFn f) {
  for (PointId x = 0; x < ms.size(); ++x)
    if (!f[x]) f = extend_lipschitz(ms, std::move(f), x);
  LipschitzFn out;
  out.values.reserve(f.size());
  for (auto& v : f) out.values.push_back(std::move(*v));
  return out;
}

TightGraph tight_graph(const MetricSpace& ms, const LipschitzFn& f) {
  if (auto bad = lipschitz_violation(ms, f)) throw NotLipschitz(bad->a, bad->b);
  TightGraph arcs;
  for (PointId a = 0; a < ms.size(); ++a)
    for (PointId b = a + 1; b < ms.size(); ++b) {
      const Rational diff = f.values[a] - f.values[b];
      if (diff == ms(a, b))
        arcs.push_back({a, b});
      else if (-diff == ms(a, b))
        arcs.push_back({b, a});
    }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

LipschitzFn distance_function(const MetricSpace& ms, PointId z) {
  LipschitzFn f;
  f.values.reserve(ms.size());
  for (PointId x = 0; x < ms.size(); ++x) f.values.push_back(ms(z, x));
  return f;
}

std::vector<Pair> cover_check(const MetricSpace& ms, const EdgeCover& cover) {
  const std::size_t n = ms.size();
  std::vector<char> covered(n * n, 0);
  for (const auto& f : cover.fns)
    for (const Arc& arc : tight_graph(ms, f)) {
      covered[arc.from * n + arc.to] = 1;
      covered[arc.to * n + arc.from] = 1;
    }
  std::vector<Pair> missing;
  for (const Pair& p : all_pairs(n))
    if (!covered[p.a * n + p.b]) missing.push_back(p);
  return missing;
}

EdgeCover lift_cover(const EdgeCover& cover, std::span<const PointId> subset, const MetricSpace& ms) {
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("subset must be strictly ascending");
  if (!subset.empty() && subset.back() >= ms.size()) throw std::out_of_range("subset point out of range");

  std::vector<char> inside(ms.size(), 0);
  for (PointId y : subset) inside[y] = 1;

  EdgeCover lifted;
  for (const auto& f : cover.fns) {
    if (f.values.size() != subset.size()) throw DimensionMismatch("cover function does not live on the subset");
    PartialFn partial(ms.size());
    for (std::size_t i = 0; i < subset.size(); ++i) partial[subset[i]] = f.values[i];
    lifted.fns.push_back(extend_to_all(ms, std::move(partial)));
  }
  for (PointId z = 0; z < ms.size(); ++z)
    if (!inside[z]) lifted.fns.push_back(distance_function(ms, z));
  return lifted;
}

Embedding frechet_embedding(const MetricSpace& ms, PointId x0) {
  const std::size_t n = ms.size();
  if (x0 >= n) throw std::out_of_range("base point out of range");
  Embedding e;
  e.n = n;
  e.k = n - 1;
  e.rows.assign(n, {});
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (y != x0) e.rows[x].push_back(ms(x, y) - ms(x0, y));
  return e;
}

Rational linf_distance(const Embedding& e, PointId a, PointId b) {
  Rational best = 0;
  for (std::size_t i = 0; i < e.k; ++i) {
    Rational diff = abs(e.rows[a][i] - e.rows[b][i]);
    if (diff > best) best = std::move(diff);
  }
  return best;
}

EmbeddingReport verify_embedding(const MetricSpace& ms, const Embedding& e) {
  if (e.n != ms.size() || e.rows.size() != ms.size())
    throw DimensionMismatch("embedding has " + std::to_string(e.rows.size()) + " rows for " +
                            std::to_string(ms.size()) + " points");
  for (const auto& row : e.rows)
    if (row.size() != e.k) throw DimensionMismatch("ragged embedding rows");

  EmbeddingReport report;
  report.max_deviation = 0;
  for (const Pair& p : all_pairs(ms.size())) {
    Rational achieved = linf_distance(e, p.a, p.b);
    Rational deviation = abs(achieved - ms(p.a, p.b));
    if (deviation > report.max_deviation) report.max_deviation = deviation;
    if (deviation != 0 && report.isometric) {
      report.isometric = false;
      report.witness = p;
      report.achieved = achieved;
      report.expected = ms(p.a, p.b);
    }
  }
  return report;
}

EdgeCover cover_from_embedding(const Embedding& e) {
  EdgeCover cover;
  cover.fns.resize(e.k);
  for (std::size_t i = 0; i < e.k; ++i)
    for (PointId x = 0; x < e.n; ++x) cover.fns[i].values.push_back(e.rows[x][i]);
  return cover;
}

}  // namespace linf
