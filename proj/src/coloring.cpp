#include "linf/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace linf {

namespace {

constexpr std::uint8_t kNoColor = 0xff;

}  // namespace

std::string to_string(QuadColor color) {
  switch (color) {
    case QuadColor::c123: return "123";
    case QuadColor::c132: return "132";
    case QuadColor::c213: return "213";
    case QuadColor::c231: return "231";
    case QuadColor::c312: return "312";
    case QuadColor::c321: return "321";
  }
  return "?";
}

std::optional<QuadColor> parse_color(std::string_view text) {
  for (QuadColor c : kAllColors)
    if (text == to_string(c)) return c;
  return std::nullopt;
}

std::array<int, 3> ranking(QuadColor color) {
  const std::string label = to_string(color);
  return {label[0] - '0', label[1] - '0', label[2] - '0'};
}

QuadSums quad_sums(const MetricSpace& ms, const Quadruple& q) {
  const auto [a, b, c, d] = q;
  return {ms(a, b) + ms(c, d), ms(a, c) + ms(b, d), ms(a, d) + ms(b, c)};
}

std::optional<QuadColor> classify(const QuadSums& s) {
  const int c12 = cmp(s.r1, s.r2), c13 = cmp(s.r1, s.r3), c23 = cmp(s.r2, s.r3);
  if (c12 == 0 || c13 == 0 || c23 == 0) return std::nullopt;
  if (c12 > 0 && c23 > 0) return QuadColor::c123;
  if (c13 > 0 && c23 < 0) return QuadColor::c132;
  if (c12 < 0 && c13 > 0) return QuadColor::c213;
  if (c23 > 0 && c13 < 0) return QuadColor::c231;
  if (c13 < 0 && c12 > 0) return QuadColor::c312;
  return QuadColor::c321;
}

TiedSums::TiedSums(Quadruple q)
    : std::runtime_error("tied pair sums on quadruple (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                         std::to_string(q[2]) + "," + std::to_string(q[3]) + ")"),
      quadruple(q) {}

QuadColor color_quadruple(const MetricSpace& ms, const Quadruple& q) {
  if (!(q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] < ms.size()))
    throw std::invalid_argument("quadruple must be strictly increasing and in range");
  auto color = classify(quad_sums(ms, q));
  if (!color) throw TiedSums(q);
  return *color;
}

QuadColorTable::QuadColorTable(const MetricSpace& ms) : n_(ms.size()), binom_(n_ + 1) {
  for (std::size_t m = 0; m <= n_; ++m) {
    binom_[m][0] = 1;
    for (std::size_t r = 1; r <= 4; ++r) binom_[m][r] = m == 0 ? 0 : binom_[m - 1][r - 1] + binom_[m - 1][r];
  }
  colors_.assign(n_ >= 4 ? binom_[n_][4] : 0, kNoColor);
  for (PointId d = 3; d < n_; ++d)
    for (PointId c = 2; c < d; ++c)
      for (PointId b = 1; b < c; ++b)
        for (PointId a = 0; a < b; ++a) {
          const Quadruple q{a, b, c, d};
          if (auto color = classify(quad_sums(ms, q)))
            colors_[rank(q)] = static_cast<std::uint8_t>(*color);
          else if (!first_tie_ || q < *first_tie_)
            first_tie_ = q;
        }
}

std::size_t QuadColorTable::rank(const Quadruple& q) const {
  return binom_[q[0]][1] + binom_[q[1]][2] + binom_[q[2]][3] + binom_[q[3]][4];
}

std::optional<QuadColor> QuadColorTable::at(const Quadruple& sorted) const {
  const std::uint8_t value = colors_[rank(sorted)];
  if (value == kNoColor) return std::nullopt;
  return static_cast<QuadColor>(value);
}

std::optional<QuadColor> QuadColorTable::at_unsorted(Quadruple q) const {
  std::sort(q.begin(), q.end());
  return at(q);
}

ColorReport mono_color(const MetricSpace& ms) {
  ColorReport report;
  const std::size_t n = ms.size();
  if (n < 4) {
    report.vacuous = true;
    return report;
  }
  QuadColorTable table(ms);
  if (auto tie = table.first_tie()) throw TiedSums(*tie);
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c)
        for (PointId d = c + 1; d < n; ++d) {
          ++report.histogram[static_cast<std::size_t>(*table.at({a, b, c, d}))];
          ++report.quadruples;
        }
  std::size_t nonzero = 0;
  for (QuadColor c : kAllColors)
    if (report.histogram[static_cast<std::size_t>(c)] > 0) {
      ++nonzero;
      report.mono = c;
    }
  if (nonzero != 1) report.mono.reset();
  return report;
}

namespace {

class MonoSearch {
 public:
  MonoSearch(const QuadColorTable& table, std::size_t k, QuadColor color)
      : table_(table), k_(k), color_(color) {}

  std::optional<std::vector<PointId>> run() {
    std::vector<PointId> candidates(table_.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    chosen_.clear();
    if (extend(candidates)) return chosen_;
    return std::nullopt;
  }

 private:
  bool compatible(PointId v, PointId w) const {
    for (std::size_t i = 0; i < chosen_.size(); ++i)
      for (std::size_t j = i + 1; j < chosen_.size(); ++j)
        if (table_.at({chosen_[i], chosen_[j], v, w}) != color_) return false;
    return true;
  }

  bool extend(const std::vector<PointId>& candidates) {
    if (chosen_.size() == k_) return true;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      if (chosen_.size() + (candidates.size() - idx) < k_) return false;
      const PointId v = candidates[idx];
      std::vector<PointId> next;
      next.reserve(candidates.size() - idx);
      // Points after v that stay compatible once v is chosen.
      for (std::size_t j = idx + 1; j < candidates.size(); ++j)
        if (chosen_.size() < 2 || compatible(v, candidates[j])) next.push_back(candidates[j]);
      if (chosen_.size() + 1 + next.size() < k_) continue;
      chosen_.push_back(v);
      if (extend(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const QuadColorTable& table_;
  std::size_t k_;
  QuadColor color_;
  std::vector<PointId> chosen_;
};

bool all_colored(const QuadColorTable& table, const std::vector<PointId>& set, PointId extra, QuadColor color) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      for (std::size_t l = j + 1; l < set.size(); ++l)
        if (table.at_unsorted({set[i], set[j], set[l], extra}) != color) return false;
  return true;
}

// Removes the point lying in most off-color quadruples until none remain.
std::vector<PointId> peel(const QuadColorTable& table, QuadColor color) {
  std::vector<PointId> alive(table.size());
  std::iota(alive.begin(), alive.end(), 0);
  while (alive.size() >= 4) {
    std::vector<std::uint64_t> bad(table.size(), 0);
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < alive.size(); ++a)
      for (std::size_t b = a + 1; b < alive.size(); ++b)
        for (std::size_t c = b + 1; c < alive.size(); ++c)
          for (std::size_t d = c + 1; d < alive.size(); ++d)
            if (table.at({alive[a], alive[b], alive[c], alive[d]}) != color) {
              ++bad[alive[a]], ++bad[alive[b]], ++bad[alive[c]], ++bad[alive[d]];
              ++total;
            }
    if (total == 0) break;
    auto worst = std::max_element(alive.begin(), alive.end(),
                                  [&](PointId x, PointId y) { return bad[x] < bad[y]; });
    alive.erase(worst);
  }
  return alive;
}

std::vector<PointId> greedy_grow(const QuadColorTable& table, QuadColor color, const std::vector<PointId>& order,
                                 std::vector<PointId> set) {
  for (PointId v : order) {
    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
    if (all_colored(table, set, v, color)) set.push_back(v);
  }
  std::sort(set.begin(), set.end());
  return set;
}

constexpr int kGreedyRestarts = 200;

}  // namespace

MonoSearchResult find_monochromatic(const MetricSpace& ms, std::size_t k, std::optional<QuadColor> only,
                                    std::uint64_t seed) {
  const std::size_t n = ms.size();
  if (k < 4 || k > n) throw std::invalid_argument("find_monochromatic needs 4 <= k <= n");
  const QuadColorTable table(ms);
  std::vector<QuadColor> colors;
  if (only)
    colors.push_back(*only);
  else
    colors.assign(kAllColors.begin(), kAllColors.end());

  MonoSearchResult result;
  if (n <= kExactMonoSearchLimit) {
    for (QuadColor color : colors) {
      if (auto subset = MonoSearch(table, k, color).run()) {
        result.subset = std::move(subset);
        result.color = color;
        return result;
      }
    }
    return result;
  }

  result.exhaustive = false;
  Rng rng(seed);
  for (QuadColor color : colors) {
    std::vector<PointId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<PointId> best = greedy_grow(table, color, order, peel(table, color));
    for (int restart = 0; restart < kGreedyRestarts && best.size() < k; ++restart) {
      std::shuffle(order.begin(), order.end(), rng);
      auto grown = greedy_grow(table, color, order, {});
      if (grown.size() > best.size()) best = std::move(grown);
    }
    if (best.size() >= k) {
      best.resize(k);
      result.subset = std::move(best);
      result.color = color;
      return result;
    }
  }
  return result;
}

namespace {

std::array<Term, 2> sum_terms(const std::array<int, 4>& q, int sum_index) {
  const auto [a, b, c, d] = q;
  switch (sum_index) {
    case 1: return {Term{a, b}, Term{c, d}};
    case 2: return {Term{a, c}, Term{b, d}};
    default: return {Term{a, d}, Term{b, c}};
  }
}

bool color_forces(QuadColor color, int larger, int smaller) {
  const auto order = ranking(color);
  const auto pos = [&](int r) { return std::find(order.begin(), order.end(), r) - order.begin(); };
  return pos(larger) < pos(smaller);
}

}  // namespace

ImpossibilityCertificate impossibility_certificate(QuadColor color) {
  if (color != QuadColor::c213 && color != QuadColor::c312)
    throw std::invalid_argument("impossibility certificates exist only for 213 and 312");
  const bool flip = color == QuadColor::c312;

  struct Row {
    std::array<int, 4> q;
    int larger, smaller;
  };
  // Relations forced by 213; the 312 certificate reverses each one.
  const std::array<Row, 3> rows = {Row{{1, 2, 3, 4}, 1, 3}, Row{{2, 3, 4, 5}, 1, 3}, Row{{1, 2, 4, 5}, 2, 1}};

  ImpossibilityCertificate cert{};
  cert.color = color;
  bool forced = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int larger = flip ? rows[i].smaller : rows[i].larger;
    const int smaller = flip ? rows[i].larger : rows[i].smaller;
    forced = forced && color_forces(color, larger, smaller);
    CertificateInequality& ineq = cert.inequalities[i];
    ineq.quadruple = rows[i].q;
    ineq.larger_sum = larger;
    ineq.smaller_sum = smaller;
    ineq.lhs = sum_terms(rows[i].q, larger);
    ineq.rhs = sum_terms(rows[i].q, smaller);
    cert.lhs_terms.insert(cert.lhs_terms.end(), ineq.lhs.begin(), ineq.lhs.end());
    cert.rhs_terms.insert(cert.rhs_terms.end(), ineq.rhs.begin(), ineq.rhs.end());
  }
  std::sort(cert.lhs_terms.begin(), cert.lhs_terms.end());
  std::sort(cert.rhs_terms.begin(), cert.rhs_terms.end());
  cert.identity_holds = forced && cert.lhs_terms == cert.rhs_terms;
  return cert;
}

std::string ImpossibilityCertificate::describe() const {
  std::ostringstream out;
  const auto term = [](const Term& t) { return "d" + std::to_string(t.first) + std::to_string(t.second); };
  out << "color " << to_string(color) << " on points 1..5:\n";
  for (const auto& ineq : inequalities) {
    out << "  (" << ineq.quadruple[0] << "," << ineq.quadruple[1] << "," << ineq.quadruple[2] << ","
        << ineq.quadruple[3] << ") R" << ineq.larger_sum << " > R" << ineq.smaller_sum << ": " << term(ineq.lhs[0])
        << " + " << term(ineq.lhs[1]) << " > " << term(ineq.rhs[0]) << " + " << term(ineq.rhs[1]) << "\n";
  }
  out << "  sum of left sides  {";
  for (std::size_t i = 0; i < lhs_terms.size(); ++i) out << (i ? "," : "") << term(lhs_terms[i]);
  out << "}\n  sum of right sides {";
  for (std::size_t i = 0; i < rhs_terms.size(); ++i) out << (i ? "," : "") << term(rhs_terms[i]);
  out << "}\n  " << (identity_holds ? "identical multisets: the three strict inequalities are contradictory"
                                    : "multisets differ: certificate INVALID")
      << "\n";
  return out.str();
}

FivePointSearch random_five_point_search(std::uint64_t trials, std::uint64_t seed) {
  FivePointSearch out;
  out.trials = trials;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::optional<QuadColor> shared;
    bool mono = true;
    for (bool generic = false; !generic;) {
      std::vector<Rational> upper;
      for (int i = 0; i < 10; ++i) upper.push_back(uniform_rational(rng, 1, 2));
      const MetricSpace ms = MetricSpace::from_upper(5, std::move(upper));
      generic = true;
      mono = true;
      shared.reset();
      for (PointId a = 0; a < 5 && generic; ++a)
        for (PointId b = a + 1; b < 5 && generic; ++b)
          for (PointId c = b + 1; c < 5 && generic; ++c)
            for (PointId d = c + 1; d < 5; ++d) {
              auto color = classify(quad_sums(ms, {a, b, c, d}));
              if (!color) {
                generic = false;
                break;
              }
              if (!shared) shared = color;
              mono = mono && shared == color;
            }
    }
    if (!mono) continue;
    ++out.mono_histogram[static_cast<std::size_t>(*shared)];
    if (*shared == QuadColor::c213) ++out.monochromatic_213;
    if (*shared == QuadColor::c312) ++out.monochromatic_312;
  }
  return out;
}

}  // namespace linf
