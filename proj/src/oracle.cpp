#include "linf/oracle.hpp"

#include <cstdint>

#include "linf/constructions.hpp"

namespace linf {

namespace {

// bound[u][v] is the tightest known upper bound on f(v) - f(u).
using Bounds = std::vector<std::vector<Rational>>;

Bounds initial_bounds(const MetricSpace& ms) {
  const std::size_t n = ms.size();
  Bounds w(n, std::vector<Rational>(n));
  for (PointId u = 0; u < n; ++u)
    for (PointId v = 0; v < n; ++v) w[u][v] = ms(u, v);
  return w;
}

// Adds f(to) - f(from) <= weight and closes the bounds; false on a negative cycle.
bool add_constraint(Bounds& w, PointId from, PointId to, const Rational& weight) {
  if (w[to][from] + weight < 0) return false;
  if (weight >= w[from][to]) return true;
  const std::size_t n = w.size();
  for (PointId u = 0; u < n; ++u) {
    const Rational to_from = w[u][from] + weight;
    for (PointId v = 0; v < n; ++v) {
      Rational through = to_from + w[to][v];
      if (through < w[u][v]) w[u][v] = std::move(through);
    }
  }
  return true;
}

// Potentials from a virtual source joined to every vertex by a 0-edge.
LipschitzFn potentials(const Bounds& w) {
  const std::size_t n = w.size();
  LipschitzFn f;
  for (PointId v = 0; v < n; ++v) {
    Rational best = 0;
    for (PointId u = 0; u < n; ++u)
      if (w[u][v] < best) best = w[u][v];
    f.values.push_back(best);
  }
  return f;
}

bool orient(const MetricSpace& ms, const EdgePart& part, std::size_t idx, const Bounds& w, LipschitzFn& out) {
  if (idx == part.size()) {
    out = potentials(w);
    return true;
  }
  const auto [a, b] = part[idx];
  for (int bit = 0; bit < 2; ++bit) {
    // bit 0: f(a) - f(b) = d, i.e. f(b) - f(a) <= -d; bit 1 the reverse.
    const PointId from = bit == 0 ? a : b;
    const PointId to = bit == 0 ? b : a;
    Bounds next = w;
    if (!add_constraint(next, from, to, -ms(a, b))) continue;
    if (orient(ms, part, idx + 1, next, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<LipschitzFn> part_feasible(const MetricSpace& ms, const EdgePart& part) {
  if (part.empty()) return LipschitzFn{std::vector<Rational>(ms.size(), Rational(0))};
  LipschitzFn f;
  if (!orient(ms, part, 0, initial_bounds(ms), f)) return std::nullopt;
  if (lipschitz_violation(ms, f)) throw std::logic_error("difference-constraint solution is not 1-Lipschitz");
  for (const auto& [a, b] : part)
    if (abs(f.values[a] - f.values[b]) != ms(a, b)) throw std::logic_error("difference-constraint solution not tight");
  return f;
}

GuardExceeded::GuardExceeded(std::size_t n)
    : std::runtime_error("exact oracle is limited to " + std::to_string(kOracleMaxPoints) + " points, got " +
                         std::to_string(n)) {}

namespace {

class PartitionSearch {
 public:
  static constexpr std::int8_t kUnknown = -1;

  /// `memo` caches part feasibility by pair mask and may be shared across k.
  PartitionSearch(const MetricSpace& ms, std::size_t k, std::vector<std::int8_t>& memo)
      : ms_(ms), pairs_(all_pairs(ms.size())), k_(k), memo_(memo) {}

  std::optional<std::vector<std::uint32_t>> run() {
    parts_.clear();
    if (assign(0)) return parts_;
    return std::nullopt;
  }

  EdgePart decode(std::uint32_t mask) const {
    EdgePart part;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) part.push_back(pairs_[i]);
    return part;
  }

 private:
  bool feasible(std::uint32_t mask) {
    auto& slot = memo_[mask];
    if (slot == kUnknown) slot = part_feasible(ms_, decode(mask)).has_value() ? 1 : 0;
    return slot == 1;
  }

  // Growing a part only shrinks its feasible set, so an infeasible partial part
  // prunes every completion.
  bool assign(std::size_t edge) {
    if (edge == pairs_.size()) return true;
    const std::uint32_t bit = std::uint32_t{1} << edge;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!feasible(parts_[i] | bit)) continue;
      parts_[i] |= bit;
      if (assign(edge + 1)) return true;
      parts_[i] &= ~bit;
    }
    if (parts_.size() < k_) {
      parts_.push_back(bit);
      if (assign(edge + 1)) return true;
      parts_.pop_back();
    }
    return false;
  }

  const MetricSpace& ms_;
  std::vector<Pair> pairs_;
  std::size_t k_;
  std::vector<std::int8_t>& memo_;
  std::vector<std::uint32_t> parts_;
};

}  // namespace

OracleResult exact_m(const MetricSpace& ms, std::size_t k_max) {
  const std::size_t n = ms.size();
  if (n > kOracleMaxPoints) throw GuardExceeded(n);
  OracleResult result;
  if (n < 2) {
    result.m = 0;
    return result;
  }
  std::vector<std::int8_t> memo(std::size_t{1} << pair_count(n), PartitionSearch::kUnknown);
  for (std::size_t k = 1; k <= k_max; ++k) {
    PartitionSearch search(ms, k, memo);
    if (auto masks = search.run()) {
      result.m = k;
      for (std::uint32_t mask : *masks) {
        EdgePart part = search.decode(mask);
        result.cover.fns.push_back(*part_feasible(ms, part));
        result.partition.push_back(std::move(part));
      }
      return result;
    }
  }
  return result;
}

CrossCheck cross_check_construction(QuadColor color, std::size_t c, std::uint64_t seed) {
  CrossCheck out;
  out.color = color;
  out.c = c;
  const CombinatorialCover cc = build_cover(color, c);
  out.n = cc.n_points;
  if (out.n > kOracleMaxPoints) throw GuardExceeded(out.n);
  Family family = Family::c321;
  switch (color) {
    case QuadColor::c321: family = Family::c321; break;
    case QuadColor::c132: family = Family::c132; break;
    case QuadColor::c123: family = Family::c123; break;
    case QuadColor::c231: family = Family::c231; break;
    default: throw UnsupportedColor(color);
  }
  const MetricSpace ms = generate(family, out.n, seed);
  out.construction_size = instantiate_cover(cc, ms).cover.fns.size();
  out.oracle_m = exact_m(ms, out.construction_size).m;
  out.consistent = out.oracle_m.has_value() && *out.oracle_m <= out.construction_size;
  return out;
}

}  // namespace linf
