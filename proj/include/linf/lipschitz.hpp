#pragma once

// 1-Lipschitz functions on a metric space, their tight graphs, covers of the
// complete graph by tight graphs, and l-infinity embeddings.
//
// A family of 1-Lipschitz functions whose tight graphs cover every pair is the
// same thing as an isometric embedding into l-infinity with one coordinate per
// function.

#include <optional>
#include <span>
#include <vector>

#include "linf/metric.hpp"

namespace linf {

/// Values indexed by PointId. Whether it is 1-Lipschitz depends on the metric
/// it is checked against.
struct LipschitzFn {
  std::vector<Rational> values;

  friend bool operator==(const LipschitzFn&, const LipschitzFn&) = default;
};

/// A function known only on some points of the ambient space.
using PartialFn = std::vector<std::optional<Rational>>;

/// Oriented edge from the larger value to the smaller one.
struct Arc {
  PointId from;
  PointId to;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

using TightGraph = std::vector<Arc>;

class NotLipschitz : public std::runtime_error {
 public:
  NotLipschitz(PointId a, PointId b);
  PointId a, b;
};

/// First pair (lexicographic) with |f(a) - f(b)| > d(a,b).
std::optional<Pair> lipschitz_violation(const MetricSpace& ms, const LipschitzFn& f);
std::optional<Pair> lipschitz_violation(const MetricSpace& ms, const PartialFn& f);

/// Smallest 1-Lipschitz value at x0 given the defined values of f:
/// max over defined y of f(y) - d(y, x0).
Rational extension_value(const MetricSpace& ms, const PartialFn& f, PointId x0);

/// f with x0 assigned its extension value. f must be defined somewhere and not at x0.
PartialFn extend_lipschitz(const MetricSpace& ms, PartialFn f, PointId x0);

/// Extends a partial function to every point, in ascending index order.
LipschitzFn extend_to_all(const MetricSpace& ms, PartialFn f);

/// Arcs a->b with f(a) - f(b) = d(a,b), sorted. Throws NotLipschitz.
TightGraph tight_graph(const MetricSpace& ms, const LipschitzFn& f);

/// d(z, .)
LipschitzFn distance_function(const MetricSpace& ms, PointId z);

struct EdgeCover {
  std::vector<LipschitzFn> fns;
};

/// Uncovered unordered pairs, lexicographic. Throws NotLipschitz if a function
/// is not 1-Lipschitz.
std::vector<Pair> cover_check(const MetricSpace& ms, const EdgeCover& cover);

/// Lifts a complete cover of the subspace on `subset` (ascending ambient ids;
/// functions indexed by local position) to a complete cover of `ms`: each
/// function is extended point by point in ascending order, then d(z, .) is
/// appended for every z outside the subset.
EdgeCover lift_cover(const EdgeCover& cover, std::span<const PointId> subset, const MetricSpace& ms);

struct Embedding {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<Rational>> rows;  // n rows of k coordinates

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Coordinates indexed by y != x0: x -> d(x,y) - d(x0,y). x0 maps to the origin.
Embedding frechet_embedding(const MetricSpace& ms, PointId x0 = 0);

class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmbeddingReport {
  bool isometric = true;
  /// First pair whose l-infinity distance differs from the metric.
  std::optional<Pair> witness;
  Rational achieved;  // l-infinity distance on the witness
  Rational expected;  // metric distance on the witness
  /// max over pairs of |l-infinity distance - metric distance|
  Rational max_deviation;
};

Rational linf_distance(const Embedding& e, PointId a, PointId b);

EmbeddingReport verify_embedding(const MetricSpace& ms, const Embedding& e);

/// Coordinate functions of an embedding, one per column.
EdgeCover cover_from_embedding(const Embedding& e);

}  // namespace linf
