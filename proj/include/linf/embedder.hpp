#pragma once

// End-to-end embedding with a requested dimension gain c:
//   perturb to a generic metric if needed -> find a monochromatic subset large
//   enough for some color -> build and instantiate that color's cover ->
//   lift to the whole space -> assemble and verify the embedding.
// Every returned embedding has been verified exactly.

#include <optional>
#include <string>
#include <vector>

#include "linf/constructions.hpp"

namespace linf {

enum class Strategy { construction, greedy, frechet };

std::string to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view text);

class IncompleteCover : public std::runtime_error {
 public:
  explicit IncompleteCover(std::vector<Pair> missing);
  std::vector<Pair> missing;
};

/// One coordinate per function. Throws IncompleteCover.
Embedding embedding_from_cover(const MetricSpace& ms, const EdgeCover& cover);

class VerificationFailed : public std::runtime_error {
 public:
  explicit VerificationFailed(EmbeddingReport report);
  EmbeddingReport report;
};

struct EmbedOptions {
  std::size_t gain = 1;
  Strategy strategy = Strategy::construction;
  /// Perturbation size; defaults to 1/1000 of the smallest distance.
  std::optional<Rational> epsilon;
  std::uint64_t seed = 0;
};

struct EmbedReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t requested_gain = 0;
  Strategy strategy = Strategy::construction;
  bool gain_achieved = false;

  bool perturbed = false;
  Rational epsilon;
  /// max |l-inf distance - original distance|, only when perturbed (<= 2 eps).
  std::optional<Rational> deviation_from_original;

  std::optional<QuadColor> color;
  std::vector<PointId> subset;            // monochromatic subset used, ascending
  std::vector<CenteredTree> subset_trees;  // trees on the subset, local indices
  bool fallback = false;                   // greedy cover replaced the construction
  std::vector<std::string> notes;          // counterexamples and degradations

  std::string summary() const;
};

struct EmbedResult {
  MetricSpace metric;  // the metric actually embedded (perturbed if needed)
  EdgeCover cover;
  Embedding embedding;
  EmbedReport report;
};

/// Never returns an unverified embedding: throws VerificationFailed instead.
/// When no gain is achievable within the search limits the result is the
/// Frechet embedding with gain_achieved = false.
EmbedResult embed_with_gain(const MetricSpace& ms, const EmbedOptions& options);

/// Colors with a construction, ordered by required_size for gain c (ties in
/// the order 321, 231, 132, 123).
std::vector<QuadColor> color_search_order(std::size_t c);

}  // namespace linf
