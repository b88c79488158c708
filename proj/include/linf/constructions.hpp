#pragma once

// Color-indexed tree covers of monochromatic spaces.
//
// On a monochromatic space every argmin in the peripheral attachment rule is a
// comparison of two pair sums of one quadruple, so the instantiated trees and
// their tight graphs depend only on the color and the point order. The covers
// are therefore built combinatorially over 0..N-1 and instantiated on a metric.

#include <optional>
#include <vector>

#include "linf/coloring.hpp"
#include "linf/trees.hpp"

namespace linf {

class UnsupportedColor : public std::invalid_argument {
 public:
  explicit UnsupportedColor(QuadColor color);
};

/// Points needed for a cover with gain at least c:
/// 321 -> 2c, 132 -> c^2, 123 -> 2^(c+2) - 3, 231 -> 4c + 1.
std::size_t required_size(QuadColor color, std::size_t c);

/// One application of the two-vertex insertion step used for 132.
struct InsertionStage {
  Pair killed;                  // original pair covered by this step
  std::vector<PointId> points;  // final indices present after the step, ascending
  std::size_t trees = 0;        // trees emitted so far
};

struct CombinatorialCover {
  QuadColor color;
  std::size_t c = 0;
  std::size_t n_points = 0;
  std::vector<CombinatorialTree> trees;
  std::vector<InsertionStage> stages;  // 132 only

  std::size_t claimed_gain() const { return n_points - trees.size(); }
};

CombinatorialCover build_cover(QuadColor color, std::size_t c);

class CoverageGap : public std::runtime_error {
 public:
  explicit CoverageGap(std::vector<Pair> missing);
  std::vector<Pair> missing;
};

struct InstantiatedCover {
  std::vector<CenteredTree> trees;
  EdgeCover cover;
};

/// Instantiates every tree (argmin attachments) and compiles it. Throws
/// AdmissibilityViolation on the first non-admissible tree; with
/// `require_complete`, throws CoverageGap when some pair stays uncovered.
InstantiatedCover instantiate_cover(const CombinatorialCover& cc, const MetricSpace& ms, bool require_complete = true);

struct GreedyCover {
  std::vector<CenteredTree> trees;
  std::vector<PointId> distance_points;  // z for every d(z, .) used
  EdgeCover cover;                       // trees first, then distance functions
};

/// Repeatedly takes whichever function covers most uncovered pairs: an
/// admissible tree with 1..3 mains (then grown main by main while that helps)
/// or a distance function d(z, .). Always complete.
GreedyCover greedy_cover(const MetricSpace& ms);

}  // namespace linf
