#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linf/metric.hpp"
#include "linf/trees.hpp"

namespace linf::test {

inline Rational R(const std::string& text) { return parse_rational(text); }

/// p/q in lowest terms; mpq_class(p, q) alone is not canonical.
inline Rational Q(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Space with d(i,j) = g(i,j) for i<j.
inline MetricSpace space_from(std::size_t n, const std::function<Rational(PointId, PointId)>& g) {
  std::vector<Rational> upper;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = i + 1; j < n; ++j) upper.push_back(g(i, j));
  return MetricSpace::from_upper(n, std::move(upper));
}

/// d(i,j) = |i - j|.
inline MetricSpace line_space(std::size_t n) {
  return space_from(n, [](PointId i, PointId j) -> Rational { return Rational(static_cast<long>(j - i)); });
}

/// d(i,j) = 1 + (j - i)^2 / 100.
inline MetricSpace square_gap_space(std::size_t n) {
  return space_from(n, [](PointId i, PointId j) -> Rational {
    const long t = static_cast<long>(j - i);
    return Rational(1) + Q(t * t, 100);
  });
}

/// Random metric with distances drawn from [1, 2]; always a metric.
inline MetricSpace random_space(std::size_t n, Rng& rng, std::uint64_t steps = 1000) {
  return space_from(n, [&](PointId, PointId) { return uniform_rational(rng, 1, 2, steps); });
}

// Every 4-vertex path a-b-c-d, found by brute force over vertex sequences.
inline bool brute_force_criterion(const MetricSpace& ms, const CenteredTree& t) {
  std::set<Pair> edges;
  for (Pair e : t.edges()) edges.insert(e);
  auto adjacent = [&](PointId x, PointId y) { return edges.count({std::min(x, y), std::max(x, y)}) > 0; };
  auto pts = t.points();
  for (PointId a : pts)
    for (PointId b : pts)
      for (PointId c : pts)
        for (PointId d : pts) {
          if (a == c || b == d || a == d) continue;
          if (!adjacent(a, b) || !adjacent(b, c) || !adjacent(c, d)) continue;
          if (ms(a, d) + ms(b, c) < ms(a, b) + ms(c, d)) return false;
        }
  return true;
}

// Every center/mains/attach configuration on n points.
template <typename Visit>
void for_each_tree(std::size_t n, Visit visit) {
  for (PointId c = 0; c < n; ++c)
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (mask & (1u << c)) continue;
      std::vector<PointId> mains, rest;
      for (PointId x = 0; x < n; ++x)
        if (x != c) ((mask >> x) & 1 ? mains : rest).push_back(x);
      std::vector<std::size_t> choice(rest.size(), 0);
      for (;;) {
        CenteredTree t{c, mains, {}};
        for (std::size_t i = 0; i < rest.size(); ++i) t.attach[rest[i]] = mains[choice[i]];
        visit(t);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == mains.size()) choice[i++] = 0;
        if (i == choice.size()) break;
      }
    }
}

// Smallest |Ri - Rj| over all quadruples, computed directly.
inline Rational smallest_quad_gap(const MetricSpace& ms) {
  std::optional<Rational> gap;
  const std::size_t n = ms.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c)
        for (PointId d = c + 1; d < n; ++d) {
          const Rational r1 = ms(a, b) + ms(c, d), r2 = ms(a, c) + ms(b, d), r3 = ms(a, d) + ms(b, c);
          for (Rational diff : {Rational(r1 - r2), Rational(r1 - r3), Rational(r2 - r3)}) {
            if (diff < 0) diff = -diff;
            if (!gap || diff < *gap) gap = diff;
          }
        }
  return gap.value_or(Rational(1));
}

// Core followed by `extra` points at distances on a coarse grid in [1, 2],
// so the whole space has ties and must be perturbed.
inline MetricSpace coarse_plant(const MetricSpace& core, std::size_t extra, std::uint64_t seed) {
  Rng rng(seed);
  return test::space_from(core.size() + extra, [&](PointId i, PointId j) -> Rational {
    return j < core.size() ? core(i, j) : uniform_rational(rng, 1, 2, 4);
  });
}

}  // namespace linf::test
