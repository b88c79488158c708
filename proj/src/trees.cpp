#include "linf/trees.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace linf {

void CenteredTree::validate() const {
  if (mains.empty()) throw std::invalid_argument("tree needs at least one main vertex");
  if (!std::is_sorted(mains.begin(), mains.end()) || std::adjacent_find(mains.begin(), mains.end()) != mains.end())
    throw std::invalid_argument("main vertices must be strictly ascending");
  if (std::binary_search(mains.begin(), mains.end(), center))
    throw std::invalid_argument("center cannot be a main vertex");
  for (const auto& [p, m] : attach) {
    if (p == center || std::binary_search(mains.begin(), mains.end(), p))
      throw std::invalid_argument("peripheral " + std::to_string(p) + " is also center or main");
    if (!std::binary_search(mains.begin(), mains.end(), m))
      throw std::invalid_argument("peripheral " + std::to_string(p) + " attached to non-main " + std::to_string(m));
  }
}

std::vector<PointId> CenteredTree::points() const {
  std::vector<PointId> out(mains);
  out.push_back(center);
  for (const auto& [p, m] : attach) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pair> CenteredTree::edges() const {
  std::vector<Pair> out;
  for (PointId a : mains) out.push_back({std::min(a, center), std::max(a, center)});
  for (const auto& [p, m] : attach) out.push_back({std::min(p, m), std::max(p, m)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> CenteredTree::arcs() const {
  std::vector<Arc> out;
  for (PointId a : mains) out.push_back({a, center});
  for (const auto& [p, m] : attach) out.push_back({m, p});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::map<PointId, std::vector<PointId>> adjacency(const CenteredTree& t) {
  std::map<PointId, std::vector<PointId>> adj;
  for (const Pair& e : t.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace

std::size_t CenteredTree::diameter() const {
  const auto adj = adjacency(*this);
  std::size_t best = 0;
  for (const auto& [source, unused] : adj) {
    std::map<PointId, std::size_t> depth{{source, 0}};
    std::deque<PointId> queue{source};
    while (!queue.empty()) {
      PointId v = queue.front();
      queue.pop_front();
      best = std::max(best, depth[v]);
      for (PointId w : adj.at(v))
        if (depth.emplace(w, depth[v] + 1).second) queue.push_back(w);
    }
  }
  return best;
}

PointId attachment(const MetricSpace& ms, PointId center, const std::vector<PointId>& mains, PointId p) {
  if (mains.empty()) throw std::invalid_argument("tree needs at least one main vertex");
  PointId best = mains.front();
  Rational best_value = ms(p, best) - ms(best, center);
  for (PointId a : mains) {
    Rational value = ms(p, a) - ms(a, center);
    if (value < best_value || (value == best_value && a < best)) {
      best = a;
      best_value = std::move(value);
    }
  }
  return best;
}

CenteredTree instantiate(const CombinatorialTree& t, const MetricSpace& ms) {
  CenteredTree tree;
  tree.center = t.center;
  tree.mains = t.mains;
  std::sort(tree.mains.begin(), tree.mains.end());
  if (tree.center >= ms.size() || (!tree.mains.empty() && tree.mains.back() >= ms.size()))
    throw std::out_of_range("tree vertex out of range");
  tree.validate();
  for (PointId p = 0; p < ms.size(); ++p) {
    if (p == tree.center || std::binary_search(tree.mains.begin(), tree.mains.end(), p)) continue;
    tree.attach.emplace(p, attachment(ms, tree.center, tree.mains, p));
  }
  return tree;
}

CenteredTree extend_tree(const MetricSpace& ms, CenteredTree t, PointId x0) {
  const auto pts = t.points();
  if (std::binary_search(pts.begin(), pts.end(), x0))
    throw std::invalid_argument("point " + std::to_string(x0) + " is already in the tree");
  t.attach.emplace(x0, attachment(ms, t.center, t.mains, x0));
  return t;
}

std::optional<FourPathViolation> four_path_violation(const MetricSpace& ms, const CenteredTree& t) {
  const auto adj = adjacency(t);
  for (const Pair& middle : t.edges()) {
    const PointId b = middle.a, c = middle.b;
    for (PointId a : adj.at(b)) {
      if (a == c) continue;
      for (PointId d : adj.at(c)) {
        if (d == b) continue;
        Rational cross = ms(a, d) + ms(b, c);
        Rational outer = ms(a, b) + ms(c, d);
        if (cross < outer) return FourPathViolation{{a, b, c, d}, std::move(cross), std::move(outer)};
      }
    }
  }
  return std::nullopt;
}

LipschitzFn tree_values(const MetricSpace& ms, const CenteredTree& t) {
  t.validate();
  std::vector<std::optional<Rational>> values(ms.size());
  values.at(t.center) = Rational(0);
  for (PointId a : t.mains) values.at(a) = ms(a, t.center);
  for (const auto& [p, m] : t.attach) values.at(p) = ms(m, t.center) - ms(m, p);
  LipschitzFn f;
  for (PointId x = 0; x < ms.size(); ++x) {
    if (!values[x]) throw std::invalid_argument("tree does not span point " + std::to_string(x));
    f.values.push_back(std::move(*values[x]));
  }
  return f;
}

AdmissibilityViolation::AdmissibilityViolation(const CenteredTree& tree_, Pair pair_, Rational excess_,
                                               std::optional<FourPathViolation> path_)
    : std::runtime_error("tree " + describe(tree_) + " is not admissible: pair (" + std::to_string(pair_.a) + "," +
                         std::to_string(pair_.b) + ") exceeds its distance by " + format_rational(excess_)),
      tree(tree_), pair(pair_), excess(std::move(excess_)), path(std::move(path_)) {}

LipschitzFn tree_function(const MetricSpace& ms, const CenteredTree& t) {
  LipschitzFn f = tree_values(ms, t);
  if (auto bad = lipschitz_violation(ms, f)) {
    Rational excess = abs(f.values[bad->a] - f.values[bad->b]) - ms(bad->a, bad->b);
    throw AdmissibilityViolation(t, *bad, std::move(excess), four_path_violation(ms, t));
  }
  return f;
}

std::string describe(const CenteredTree& t) {
  std::ostringstream out;
  out << "T(" << t.center << ";";
  for (std::size_t i = 0; i < t.mains.size(); ++i) out << (i ? "," : "") << t.mains[i];
  out << ")";
  if (!t.attach.empty()) {
    out << "[";
    bool first = true;
    for (const auto& [p, m] : t.attach) {
      out << (first ? "" : " ") << p << ":" << m;
      first = false;
    }
    out << "]";
  }
  return out.str();
}

}  // namespace linf
