#include "linf/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace linf {

UnsupportedColor::UnsupportedColor(QuadColor color)
    : std::invalid_argument("no cover construction for color " + to_string(color)) {}

CoverageGap::CoverageGap(std::vector<Pair> missing_)
    : std::runtime_error("cover leaves " + std::to_string(missing_.size()) + " pair(s) uncovered, first (" +
                         (missing_.empty() ? std::string("-") : std::to_string(missing_[0].a) + "," +
                                                                    std::to_string(missing_[0].b)) +
                         ")"),
      missing(std::move(missing_)) {}

std::size_t required_size(QuadColor color, std::size_t c) {
  if (c == 0) throw std::invalid_argument("gain must be at least 1");
  switch (color) {
    case QuadColor::c321: return 2 * c;
    case QuadColor::c132: return c * c;
    case QuadColor::c123: return (std::size_t{1} << (c + 2)) - 3;
    case QuadColor::c231: return 4 * c + 1;
    default: throw UnsupportedColor(color);
  }
}

namespace {

CombinatorialTree make_tree(PointId center, std::vector<PointId> mains) {
  std::sort(mains.begin(), mains.end());
  return {center, std::move(mains)};
}

// Labels -k..-1, 1..k in index order 0..2k-1. Tree i has center -i and mains
// -k..-(i+1) together with 1..i.
std::vector<CombinatorialTree> cover_321(std::size_t k) {
  const auto index = [k](long label) -> PointId {
    return label < 0 ? static_cast<PointId>(static_cast<long>(k) + label) : static_cast<PointId>(static_cast<long>(k) + label - 1);
  };
  std::vector<CombinatorialTree> trees;
  for (long i = 1; i <= static_cast<long>(k); ++i) {
    std::vector<PointId> mains;
    for (long l = -static_cast<long>(k); l <= -(i + 1); ++l) mains.push_back(index(l));
    for (long l = 1; l <= i; ++l) mains.push_back(index(l));
    trees.push_back(make_tree(index(-i), std::move(mains)));
  }
  return trees;
}

// Start from c slots; for each original pair (a,b) insert a+ right after a and
// b- right before b, adding T(a; a+, b) and T(b; a+, b-).
CombinatorialCover cover_132(std::size_t c) {
  CombinatorialCover cc{QuadColor::c132, c, 0, {}, {}};
  std::vector<std::size_t> order(c);  // slot ids in point order
  std::iota(order.begin(), order.end(), 0);
  std::size_t next_slot = c;

  struct SlotTree {
    std::size_t center;
    std::array<std::size_t, 2> mains;
  };
  std::vector<SlotTree> slot_trees;
  std::vector<std::pair<Pair, std::size_t>> steps;  // killed pair, slot count after

  const auto position = [&order](std::size_t slot) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), slot) - order.begin());
  };

  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b) {
      const std::size_t a_plus = next_slot++;
      const std::size_t b_minus = next_slot++;
      order.insert(order.begin() + static_cast<long>(position(a) + 1), a_plus);
      order.insert(order.begin() + static_cast<long>(position(b)), b_minus);
      slot_trees.push_back({a, {a_plus, b}});
      slot_trees.push_back({b, {a_plus, b_minus}});
      steps.push_back({Pair{a, b}, next_slot});
    }

  std::vector<PointId> index_of(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) index_of[order[pos]] = pos;

  cc.n_points = order.size();
  for (const auto& t : slot_trees)
    cc.trees.push_back(make_tree(index_of[t.center], {index_of[t.mains[0]], index_of[t.mains[1]]}));
  for (std::size_t s = 0; s < steps.size(); ++s) {
    InsertionStage stage;
    stage.killed = {index_of[steps[s].first.a], index_of[steps[s].first.b]};
    for (std::size_t slot = 0; slot < steps[s].second; ++slot) stage.points.push_back(index_of[slot]);
    std::sort(stage.points.begin(), stage.points.end());
    stage.trees = 2 * (s + 1);
    cc.stages.push_back(std::move(stage));
  }
  return cc;
}

// Returns the point count N and the trees on indices 0..N-1. Labels
// -1..2M+1 (M the previous size) map to indices by adding 1.
std::pair<std::size_t, std::vector<CombinatorialTree>> cover_123(std::size_t c) {
  if (c == 0) return {1, {}};
  auto [prev, prev_trees] = cover_123(c - 1);
  const std::size_t n = 2 * prev + 3;
  const auto index = [](long label) { return static_cast<PointId>(label + 1); };
  std::vector<CombinatorialTree> trees;
  trees.push_back(make_tree(index(0), {index(-1), index(2)}));
  trees.push_back(make_tree(index(1), {index(0), index(2)}));
  for (long i = 1; i <= static_cast<long>(prev); ++i)
    trees.push_back(make_tree(index(i + static_cast<long>(prev) + 1), {index(i), index(i + 1)}));
  // Edges inside the suffix M+2..2M+1 reuse the smaller construction.
  const PointId offset = index(static_cast<long>(prev) + 2);
  for (const auto& t : prev_trees) {
    std::vector<PointId> mains;
    for (PointId m : t.mains) mains.push_back(m + offset);
    trees.push_back(make_tree(t.center + offset, std::move(mains)));
  }
  return {n, std::move(trees)};
}

// Points 0..4n. T(0; i, 4n+1-i) for i = 1..2n leaves the pairs a-b with
// 1 <= a <= 2n < b <= 4n+1-a; T(j; 2n+j..4n+1-j) for j = 1..n peels them.
std::vector<CombinatorialTree> cover_231(std::size_t n) {
  std::vector<CombinatorialTree> trees;
  for (std::size_t i = 1; i <= 2 * n; ++i) trees.push_back(make_tree(0, {i, 4 * n + 1 - i}));
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<PointId> mains;
    for (std::size_t m = 2 * n + j; m <= 4 * n + 1 - j; ++m) mains.push_back(m);
    trees.push_back(make_tree(j, std::move(mains)));
  }
  return trees;
}

}  // namespace

CombinatorialCover build_cover(QuadColor color, std::size_t c) {
  const std::size_t size = required_size(color, c);
  CombinatorialCover cc{color, c, size, {}, {}};
  switch (color) {
    case QuadColor::c321: cc.trees = cover_321(c); break;
    case QuadColor::c132: cc = cover_132(c); break;
    case QuadColor::c123: {
      auto [n, trees] = cover_123(c);
      cc.n_points = n;
      cc.trees = std::move(trees);
      break;
    }
    case QuadColor::c231: cc.trees = cover_231(c); break;
    default: throw UnsupportedColor(color);
  }
  return cc;
}

InstantiatedCover instantiate_cover(const CombinatorialCover& cc, const MetricSpace& ms, bool require_complete) {
  if (ms.size() != cc.n_points)
    throw std::invalid_argument("cover is for " + std::to_string(cc.n_points) + " points, space has " +
                                std::to_string(ms.size()));
  InstantiatedCover out;
  for (const auto& t : cc.trees) {
    CenteredTree tree = instantiate(t, ms);
    out.cover.fns.push_back(tree_function(ms, tree));
    out.trees.push_back(std::move(tree));
  }
  if (require_complete) {
    if (auto missing = cover_check(ms, out.cover); !missing.empty()) throw CoverageGap(std::move(missing));
  }
  return out;
}

namespace {

class PairSet {
 public:
  explicit PairSet(std::size_t n) : n_(n), words_((pair_count(n) + 63) / 64, 0) {}

  std::size_t index(PointId a, PointId b) const {
    if (a > b) std::swap(a, b);
    return a * (2 * n_ - a - 1) / 2 + (b - a - 1);
  }
  void insert(PointId a, PointId b) {
    const std::size_t i = index(a, b);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void insert_all(const PairSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }
  /// |other \ this|
  std::size_t gain(const PairSet& other) const {
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) count += std::popcount(other.words_[w] & ~words_[w]);
    return count;
  }
  std::size_t size() const {
    std::size_t count = 0;
    for (auto w : words_) count += std::popcount(w);
    return count;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

PairSet tight_pairs(const MetricSpace& ms, const LipschitzFn& f) {
  PairSet set(ms.size());
  for (const Arc& arc : tight_graph(ms, f)) set.insert(arc.from, arc.to);
  return set;
}

struct Candidate {
  CenteredTree tree;
  LipschitzFn fn;
  PairSet tight;
};

std::optional<Candidate> admissible_candidate(const MetricSpace& ms, PointId center, std::vector<PointId> mains) {
  CenteredTree tree = instantiate(CombinatorialTree{center, std::move(mains)}, ms);
  LipschitzFn f = tree_values(ms, tree);
  if (lipschitz_violation(ms, f)) return std::nullopt;
  PairSet tight = tight_pairs(ms, f);
  return Candidate{std::move(tree), std::move(f), std::move(tight)};
}

void for_each_main_set(std::size_t n, PointId center, std::size_t max_size,
                       const std::function<void(const std::vector<PointId>&)>& visit) {
  std::vector<PointId> others;
  for (PointId p = 0; p < n; ++p)
    if (p != center) others.push_back(p);
  std::vector<PointId> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!current.empty()) visit(current);
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < others.size(); ++i) {
      current.push_back(others[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

GreedyCover greedy_cover(const MetricSpace& ms) {
  const std::size_t n = ms.size();
  GreedyCover out;
  if (n < 2) return out;

  std::vector<Candidate> candidates;
  for (PointId center = 0; center < n; ++center)
    for_each_main_set(n, center, 3, [&](const std::vector<PointId>& mains) {
      if (auto cand = admissible_candidate(ms, center, mains)) candidates.push_back(std::move(*cand));
    });
  std::vector<PairSet> stars;
  for (PointId z = 0; z < n; ++z) stars.push_back(tight_pairs(ms, distance_function(ms, z)));

  PairSet covered(n);
  const std::size_t total = pair_count(n);
  while (covered.size() < total) {
    std::size_t best_gain = 0;
    std::optional<std::size_t> best_tree;
    std::optional<PointId> best_star;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (std::size_t g = covered.gain(candidates[i].tight); g > best_gain) {
        best_gain = g;
        best_tree = i;
      }
    for (PointId z = 0; z < n; ++z)
      if (std::size_t g = covered.gain(stars[z]); g > best_gain) {
        best_gain = g;
        best_tree.reset();
        best_star = z;
      }
    if (best_star) {
      out.distance_points.push_back(*best_star);
      covered.insert_all(stars[*best_star]);
      continue;
    }
    Candidate chosen = candidates[*best_tree];
    // Grow the main set while coverage improves and the tree stays admissible.
    for (bool grew = true; grew;) {
      grew = false;
      for (PointId extra = 0; extra < n; ++extra) {
        const auto& mains = chosen.tree.mains;
        if (extra == chosen.tree.center || std::binary_search(mains.begin(), mains.end(), extra)) continue;
        std::vector<PointId> bigger = mains;
        bigger.push_back(extra);
        auto cand = admissible_candidate(ms, chosen.tree.center, std::move(bigger));
        if (cand && covered.gain(cand->tight) > covered.gain(chosen.tight)) {
          chosen = std::move(*cand);
          grew = true;
        }
      }
    }
    covered.insert_all(chosen.tight);
    out.trees.push_back(chosen.tree);
    out.cover.fns.push_back(std::move(chosen.fn));
  }
  for (PointId z : out.distance_points) out.cover.fns.push_back(distance_function(ms, z));
  return out;
}

}  // namespace linf
