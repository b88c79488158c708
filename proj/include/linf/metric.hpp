#pragma once

// Finite metric spaces with exact rational distances.
//
// Points are identified by their index 0..n-1. The index order is part of the
// data: quadruple colors are defined with respect to it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linf/rational.hpp"

namespace linf {

using PointId = std::size_t;

struct Pair {
  PointId a;
  PointId b;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// d(i,k) > d(i,j) + d(j,k); `slack` is the (negative) amount d(i,j) + d(j,k) - d(i,k).
class TriangleViolation : public MetricError {
 public:
  TriangleViolation(PointId i, PointId j, PointId k, Rational slack);
  PointId i, j, k;
  Rational slack;
};

class NonPositiveDistance : public MetricError {
 public:
  NonPositiveDistance(PointId i, PointId j);
  PointId i, j;
};

class AsymmetricInput : public MetricError {
 public:
  AsymmetricInput(PointId i, PointId j);
  PointId i, j;
};

class PerturbationFailed : public MetricError {
 public:
  using MetricError::MetricError;
};

class MetricSpace {
 public:
  MetricSpace() = default;

  /// Builds from a full square table. Checks shape, zero diagonal, symmetry,
  /// positivity and every triangle inequality.
  static MetricSpace validate(const std::vector<std::vector<Rational>>& table);

  /// Builds from the packed upper triangle (row-major over i<j), fully validated.
  static MetricSpace from_upper(std::size_t n, std::vector<Rational> upper);

  std::size_t size() const { return n_; }

  /// d(i,j); zero on the diagonal.
  const Rational& operator()(PointId i, PointId j) const;

  /// Induced space on `points` (kept in the given order, which must be ascending
  /// if the caller wants colors to be inherited).
  MetricSpace subspace(std::span<const PointId> points) const;

  /// Every distance multiplied by `factor` > 0.
  MetricSpace scaled(const Rational& factor) const;

  const std::vector<Rational>& upper() const { return upper_; }

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  MetricSpace(std::size_t n, std::vector<Rational> upper) : n_(n), upper_(std::move(upper)) {}
  std::size_t index(PointId i, PointId j) const;
  void check() const;

  std::size_t n_ = 0;
  std::vector<Rational> upper_;
};

std::size_t pair_count(std::size_t n);

/// All unordered pairs (a<b) in lexicographic order.
std::vector<Pair> all_pairs(std::size_t n);

struct GenericityReport {
  bool quad_generic = true;
  bool distinct_distances = true;
  /// First quadruple with a tie among its pair sums, if any.
  std::optional<std::array<PointId, 4>> tied_quadruple;
  /// First two pairs sharing a distance, if any.
  std::optional<std::array<Pair, 2>> equal_pairs;

  bool generic() const { return quad_generic && distinct_distances; }
};

GenericityReport genericity(const MetricSpace& ms);

/// Adds an independent draw from [eps, 2*eps] to every distance, redrawing until
/// the result is quad-generic with pairwise distinct distances.
MetricSpace perturb_to_generic(const MetricSpace& ms, const Rational& eps, std::uint64_t seed);

enum class Family { c321, c132, c123, c231, random };

std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

class GenerationFailed : public MetricError {
 public:
  GenerationFailed(Family family, std::size_t n);
};

/// Seeded generator. Colored families are monochromatic of that color and
/// verified over every quadruple before being returned.
MetricSpace generate(Family family, std::size_t n, std::uint64_t seed);

}  // namespace linf
