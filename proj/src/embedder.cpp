#include "linf/embedder.hpp"

#include <algorithm>
#include <sstream>

namespace linf {

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::construction: return "construction";
    case Strategy::greedy: return "greedy";
    case Strategy::frechet: return "frechet";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::construction, Strategy::greedy, Strategy::frechet})
    if (text == to_string(s)) return s;
  return std::nullopt;
}

IncompleteCover::IncompleteCover(std::vector<Pair> missing_)
    : std::runtime_error("cover misses " + std::to_string(missing_.size()) + " pair(s)"), missing(std::move(missing_)) {}

Embedding embedding_from_cover(const MetricSpace& ms, const EdgeCover& cover) {
  if (auto missing = cover_check(ms, cover); !missing.empty()) throw IncompleteCover(std::move(missing));
  Embedding e;
  e.n = ms.size();
  e.k = cover.fns.size();
  e.rows.assign(e.n, {});
  for (PointId x = 0; x < e.n; ++x)
    for (const auto& f : cover.fns) e.rows[x].push_back(f.values[x]);
  return e;
}

VerificationFailed::VerificationFailed(EmbeddingReport report_)
    : std::runtime_error(report_.witness ? "embedding is not isometric on pair (" + std::to_string(report_.witness->a) +
                                               "," + std::to_string(report_.witness->b) + "): got " +
                                               format_rational(report_.achieved) + ", expected " +
                                               format_rational(report_.expected)
                                         : std::string("embedding is not isometric")),
      report(std::move(report_)) {}

std::vector<QuadColor> color_search_order(std::size_t c) {
  std::vector<QuadColor> order = {QuadColor::c321, QuadColor::c231, QuadColor::c132, QuadColor::c123};
  std::stable_sort(order.begin(), order.end(),
                   [c](QuadColor x, QuadColor y) { return required_size(x, c) < required_size(y, c); });
  return order;
}

namespace {

Rational smallest_distance(const MetricSpace& ms) {
  Rational best = 1;
  bool first = true;
  for (const Rational& d : ms.upper())
    if (first || d < best) {
      best = d;
      first = false;
    }
  return best;
}

std::vector<PointId> first_points(std::size_t count) {
  std::vector<PointId> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

// Subset of `size` points monochromatic in `color`, if one can be found.
std::optional<std::vector<PointId>> locate_subset(const MetricSpace& ms, QuadColor color, std::size_t size,
                                                  const std::optional<ColorReport>& whole, std::uint64_t seed) {
  if (size > ms.size()) return std::nullopt;
  if (size < 4) return first_points(size);
  if (whole && whole->mono == color) return first_points(size);
  auto found = find_monochromatic(ms, size, color, seed);
  return found.subset;
}

struct SubsetCover {
  EdgeCover cover;
  std::vector<CenteredTree> trees;
  bool fallback = false;
};

std::optional<SubsetCover> cover_subset(const MetricSpace& sub, QuadColor color, std::size_t c, bool allow_construction,
                                        std::vector<std::string>& notes) {
  const std::size_t budget = sub.size() - c;
  if (allow_construction) {
    try {
      auto inst = instantiate_cover(build_cover(color, c), sub);
      return SubsetCover{std::move(inst.cover), std::move(inst.trees), false};
    } catch (const AdmissibilityViolation& e) {
      notes.push_back("construction counterexample (" + to_string(color) + ", c=" + std::to_string(c) +
                      "): " + e.what());
    } catch (const CoverageGap& e) {
      std::ostringstream msg;
      msg << "construction counterexample (" << to_string(color) << ", c=" << c << "): uncovered pairs";
      for (const Pair& p : e.missing) msg << " (" << p.a << "," << p.b << ")";
      notes.push_back(msg.str());
    }
  }
  GreedyCover greedy = greedy_cover(sub);
  if (greedy.cover.fns.size() <= budget) return SubsetCover{std::move(greedy.cover), std::move(greedy.trees), true};
  notes.push_back("greedy cover on the " + to_string(color) + " subset used " + std::to_string(greedy.cover.fns.size()) +
                  " functions, budget " + std::to_string(budget));
  return std::nullopt;
}

void finish(EmbedResult& result, const MetricSpace& original) {
  result.embedding = embedding_from_cover(result.metric, result.cover);
  EmbeddingReport check = verify_embedding(result.metric, result.embedding);
  if (!check.isometric) throw VerificationFailed(std::move(check));
  result.report.k = result.embedding.k;
  result.report.gain_achieved = result.report.k + result.report.requested_gain <= result.report.n;
  if (result.report.perturbed)
    result.report.deviation_from_original = verify_embedding(original, result.embedding).max_deviation;
}

}  // namespace

EmbedResult embed_with_gain(const MetricSpace& ms, const EmbedOptions& options) {
  if (options.gain == 0) throw std::invalid_argument("gain must be at least 1");
  EmbedResult result;
  EmbedReport& report = result.report;
  report.n = ms.size();
  report.requested_gain = options.gain;
  report.strategy = options.strategy;
  report.epsilon = 0;
  result.metric = ms;

  if (options.strategy == Strategy::frechet || ms.size() < 2) {
    result.cover = cover_from_embedding(frechet_embedding(ms));
    finish(result, ms);
    return result;
  }

  if (!genericity(ms).quad_generic) {
    report.perturbed = true;
    report.epsilon = options.epsilon.value_or(smallest_distance(ms) / 1000);
    result.metric = perturb_to_generic(ms, report.epsilon, options.seed);
  }
  const MetricSpace& space = result.metric;

  if (options.strategy == Strategy::greedy) {
    GreedyCover greedy = greedy_cover(space);
    if (greedy.cover.fns.size() < space.size()) {
      result.cover = std::move(greedy.cover);
      report.subset = first_points(space.size());
      report.subset_trees = std::move(greedy.trees);
    } else {
      report.notes.push_back("greedy cover was no smaller than the Frechet embedding");
      result.cover = cover_from_embedding(frechet_embedding(space));
    }
    finish(result, ms);
    return result;
  }

  std::optional<ColorReport> whole;
  try {
    whole = mono_color(space);
  } catch (const TiedSums&) {
  }

  for (QuadColor color : color_search_order(options.gain)) {
    const std::size_t size = required_size(color, options.gain);
    auto subset = locate_subset(space, color, size, whole, options.seed);
    if (!subset) continue;
    const MetricSpace sub = space.subspace(*subset);
    auto covered = cover_subset(sub, color, options.gain, true, report.notes);
    if (!covered) continue;
    report.color = color;
    report.subset = *subset;
    report.subset_trees = std::move(covered->trees);
    report.fallback = covered->fallback;
    result.cover = lift_cover(covered->cover, *subset, space);
    finish(result, ms);
    return result;
  }

  report.notes.push_back("no monochromatic subset found for gain " + std::to_string(options.gain) +
                         "; returning the Frechet embedding");
  result.cover = cover_from_embedding(frechet_embedding(space));
  finish(result, ms);
  return result;
}

std::string EmbedReport::summary() const {
  std::ostringstream out;
  out << "points: " << n << "\n";
  out << "coordinates: " << k << "\n";
  out << "strategy: " << to_string(strategy) << "\n";
  out << "requested gain: " << requested_gain << "\n";
  out << "status: " << (gain_achieved ? "gain achieved" : "gain not achieved") << "\n";
  if (color) out << "color: " << to_string(*color) << "\n";
  if (!subset.empty()) {
    out << "subset:";
    for (PointId p : subset) out << " " << p;
    out << "\n";
  }
  for (const auto& t : subset_trees) out << "tree: " << describe(t) << "\n";
  if (fallback) out << "fallback: greedy cover replaced the construction\n";
  if (perturbed) {
    out << "perturbed: yes, epsilon " << format_rational(epsilon) << "\n";
    out << "isometric for the perturbed metric; distances deviate from the input by at most 2*epsilon = "
        << format_rational(2 * epsilon) << "\n";
    if (deviation_from_original) out << "measured deviation: " << format_rational(*deviation_from_original) << "\n";
  }
  for (const auto& note : notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace linf
