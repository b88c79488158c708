#pragma once

// Quadruple coloring: for a<b<c<d the three pair sums
//   R1 = d(a,b) + d(c,d),  R2 = d(a,c) + d(b,d),  R3 = d(a,d) + d(b,c)
// are ranked, and the ranking is a permutation label. Label "231" means
// R2 > R3 > R1: the digits list the sum indices from largest to smallest.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linf/metric.hpp"

namespace linf {

enum class QuadColor : std::uint8_t { c123, c132, c213, c231, c312, c321 };

inline constexpr std::array<QuadColor, 6> kAllColors = {QuadColor::c123, QuadColor::c132, QuadColor::c213,
                                                         QuadColor::c231, QuadColor::c312, QuadColor::c321};

std::string to_string(QuadColor color);
std::optional<QuadColor> parse_color(std::string_view text);

/// Sum indices (1-based) from largest to smallest.
std::array<int, 3> ranking(QuadColor color);

using Quadruple = std::array<PointId, 4>;

struct QuadSums {
  Rational r1, r2, r3;
};

QuadSums quad_sums(const MetricSpace& ms, const Quadruple& q);

/// Color of three sums, or nullopt when two of them coincide.
std::optional<QuadColor> classify(const QuadSums& sums);

class TiedSums : public std::runtime_error {
 public:
  explicit TiedSums(Quadruple q);
  Quadruple quadruple;
};

/// Requires q sorted ascending. Throws TiedSums when the sums are not distinct.
QuadColor color_quadruple(const MetricSpace& ms, const Quadruple& q);

/// Colors of all C(n,4) quadruples, stored by colex rank. Tied quadruples hold
/// no color.
class QuadColorTable {
 public:
  explicit QuadColorTable(const MetricSpace& ms);

  std::size_t size() const { return n_; }
  std::optional<QuadColor> at(const Quadruple& sorted) const;
  /// Same as `at` but accepts the four indices in any order.
  std::optional<QuadColor> at_unsorted(Quadruple q) const;
  std::optional<Quadruple> first_tie() const { return first_tie_; }

 private:
  std::size_t rank(const Quadruple& sorted) const;

  std::size_t n_;
  std::vector<std::array<std::uint64_t, 5>> binom_;
  std::vector<std::uint8_t> colors_;
  std::optional<Quadruple> first_tie_;
};

struct ColorReport {
  std::array<std::uint64_t, 6> histogram{};  // indexed by QuadColor
  std::uint64_t quadruples = 0;
  std::optional<QuadColor> mono;
  /// True when n < 4: there is nothing to color and `mono` is left empty.
  bool vacuous = false;

  bool monochromatic() const { return vacuous || mono.has_value(); }
};

/// Colors every quadruple. Throws TiedSums with the first tied quadruple.
ColorReport mono_color(const MetricSpace& ms);

struct MonoSearchResult {
  std::optional<std::vector<PointId>> subset;  // ascending
  std::optional<QuadColor> color;
  /// True when the search was exhaustive, so an empty result proves absence.
  bool exhaustive = true;
};

inline constexpr std::size_t kExactMonoSearchLimit = 15;

/// Finds k points all of whose quadruples share one color (restricted to
/// `only` when given). Exact branch and bound for n <= 15, seeded peeling plus
/// randomized greedy restarts beyond.
MonoSearchResult find_monochromatic(const MetricSpace& ms, std::size_t k,
                                    std::optional<QuadColor> only = std::nullopt, std::uint64_t seed = 0);

/// Term d(x_i, x_j) over 1-based local indices.
using Term = std::pair<int, int>;

struct CertificateInequality {
  std::array<int, 4> quadruple;  // 1-based local indices
  int larger_sum;                // R index forced larger by the color
  int smaller_sum;
  std::array<Term, 2> lhs;
  std::array<Term, 2> rhs;
};

/// Three strict inequalities on a 5-point space that the color forces and that
/// sum to 0 > 0.
struct ImpossibilityCertificate {
  QuadColor color;
  std::array<CertificateInequality, 3> inequalities;
  std::vector<Term> lhs_terms;  // sorted multiset
  std::vector<Term> rhs_terms;  // sorted multiset
  bool identity_holds = false;

  std::string describe() const;
};

/// Only defined for 213 and 312; throws std::invalid_argument otherwise.
ImpossibilityCertificate impossibility_certificate(QuadColor color);

struct FivePointSearch {
  std::uint64_t trials = 0;
  std::uint64_t monochromatic_213 = 0;
  std::uint64_t monochromatic_312 = 0;
  std::array<std::uint64_t, 6> mono_histogram{};  // any monochromatic draw, by color
};

/// Draws `trials` random quad-generic 5-point spaces (distances in [1, 2]) and
/// counts the monochromatic ones by color.
FivePointSearch random_five_point_search(std::uint64_t trials, std::uint64_t seed);

}  // namespace linf
