#pragma once

// Exact minimal l-infinity dimension m(X) for tiny spaces.
//
// A cover by k tight graphs can be shrunk to a partition of the pairs into k
// parts, each still contained in one tight graph (a subset of a tight set is
// tight). So m(X) is the least k for which the pairs split into k parts that
// are each simultaneously tight for some 1-Lipschitz function. Tightness of a
// part is a system of difference constraints, solved exactly by incremental
// shortest-path closure over every orientation of the part.

#include <optional>
#include <vector>

#include "linf/coloring.hpp"
#include "linf/lipschitz.hpp"

namespace linf {

using EdgePart = std::vector<Pair>;

/// A 1-Lipschitz function tight on every pair of `part`, or nullopt if none
/// exists. Orientations are tried in binary order: the first pair is the most
/// significant bit, bit 0 meaning f(a) - f(b) = d(a,b) for a < b.
std::optional<LipschitzFn> part_feasible(const MetricSpace& ms, const EdgePart& part);

inline constexpr std::size_t kOracleMaxPoints = 7;

class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(std::size_t n);
};

struct OracleResult {
  /// m(X), or nullopt when it exceeds k_max.
  std::optional<std::size_t> m;
  std::vector<EdgePart> partition;  // witness for m
  EdgeCover cover;                  // one function per part
};

/// Throws GuardExceeded for n > 7.
OracleResult exact_m(const MetricSpace& ms, std::size_t k_max);

struct CrossCheck {
  QuadColor color;
  std::size_t c = 0;
  std::size_t n = 0;
  std::size_t construction_size = 0;
  std::optional<std::size_t> oracle_m;
  bool consistent = false;  // oracle_m <= construction_size
};

/// Generates a space of the construction's size (at most 7 points), covers it
/// with the construction and compares against exact_m.
CrossCheck cross_check_construction(QuadColor color, std::size_t c, std::uint64_t seed = 0);

}  // namespace linf
