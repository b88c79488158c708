#pragma once

// Trees of diameter at most 4, described by a center, main vertices joined to
// the center, and peripheral vertices each hanging off one main vertex.
//
// Orienting every edge out of the main vertices leaves no directed path of
// length 2, and the tree then determines a function with f(a) - f(b) = d(a,b)
// along each arc. A tree is admissible when that function is 1-Lipschitz.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "linf/lipschitz.hpp"

namespace linf {

/// Center and main vertices only; peripherals are implied by a metric.
struct CombinatorialTree {
  PointId center;
  std::vector<PointId> mains;  // ascending, center excluded

  friend bool operator==(const CombinatorialTree&, const CombinatorialTree&) = default;
};

struct CenteredTree {
  PointId center = 0;
  std::vector<PointId> mains;       // ascending
  std::map<PointId, PointId> attach;  // peripheral -> main

  /// Throws std::invalid_argument when the parts overlap or attach to non-mains.
  void validate() const;
  std::vector<PointId> points() const;  // ascending
  /// Undirected tree edges as (min, max), sorted.
  std::vector<Pair> edges() const;
  /// Canonical orientation: main -> center and main -> peripheral.
  std::vector<Arc> arcs() const;
  std::size_t diameter() const;

  friend bool operator==(const CenteredTree&, const CenteredTree&) = default;
};

/// Main vertex minimizing d(p, a) - d(a, center); lowest index on ties.
PointId attachment(const MetricSpace& ms, PointId center, const std::vector<PointId>& mains, PointId p);

/// Attaches every point of `ms` outside center and mains by the argmin rule.
CenteredTree instantiate(const CombinatorialTree& t, const MetricSpace& ms);

/// Adds x0 as a peripheral by the argmin rule; mains are unchanged.
CenteredTree extend_tree(const MetricSpace& ms, CenteredTree t, PointId x0);

/// Path a-b-c-d in the tree with d(a,d) + d(b,c) < d(a,b) + d(c,d).
struct FourPathViolation {
  std::array<PointId, 4> path;
  Rational cross;  // d(a,d) + d(b,c)
  Rational outer;  // d(a,b) + d(c,d)
};

/// First 4-vertex path violating the inequality, or nullopt if all hold.
std::optional<FourPathViolation> four_path_violation(const MetricSpace& ms, const CenteredTree& t);

inline bool four_path_criterion(const MetricSpace& ms, const CenteredTree& t) { return !four_path_violation(ms, t); }

/// Values of the canonically oriented tree: f(center) = 0, f(a) = d(a, center)
/// for mains, f(p) = d(m, center) - d(m, p) for p attached to m. Not checked.
LipschitzFn tree_values(const MetricSpace& ms, const CenteredTree& t);

class AdmissibilityViolation : public std::runtime_error {
 public:
  AdmissibilityViolation(const CenteredTree& tree, Pair pair, Rational excess, std::optional<FourPathViolation> path);
  CenteredTree tree;
  Pair pair;        // |f(a) - f(b)| > d(a,b)
  Rational excess;  // |f(a) - f(b)| - d(a,b)
  std::optional<FourPathViolation> path;
};

/// tree_values, checked exhaustively. The tree must span every point of `ms`.
/// Throws AdmissibilityViolation.
LipschitzFn tree_function(const MetricSpace& ms, const CenteredTree& t);

std::string describe(const CenteredTree& t);

}  // namespace linf
