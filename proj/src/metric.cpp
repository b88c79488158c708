#include "linf/metric.hpp"

#include <algorithm>
#include <map>

#include "linf/coloring.hpp"

namespace linf {

TriangleViolation::TriangleViolation(PointId i_, PointId j_, PointId k_, Rational slack_)
    : MetricError("triangle inequality violated on (" + std::to_string(i_) + "," + std::to_string(j_) + "," +
                  std::to_string(k_) + "): d(" + std::to_string(i_) + "," + std::to_string(k_) + ") exceeds the path through " +
                  std::to_string(j_) + " by " + format_rational(-slack_)),
      i(i_), j(j_), k(k_), slack(std::move(slack_)) {}

NonPositiveDistance::NonPositiveDistance(PointId i_, PointId j_)
    : MetricError("non-positive distance between " + std::to_string(i_) + " and " + std::to_string(j_)), i(i_), j(j_) {}

AsymmetricInput::AsymmetricInput(PointId i_, PointId j_)
    : MetricError("asymmetric distances between " + std::to_string(i_) + " and " + std::to_string(j_)), i(i_), j(j_) {}

GenerationFailed::GenerationFailed(Family family, std::size_t n)
    : MetricError("could not generate a verified " + to_string(family) + " space on " + std::to_string(n) + " points") {}

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  out.reserve(pair_count(n));
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b) out.push_back({a, b});
  return out;
}

std::size_t MetricSpace::index(PointId i, PointId j) const {
  if (i > j) std::swap(i, j);
  // Row i starts after rows 0..i-1, each holding n-1-r entries.
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

const Rational& MetricSpace::operator()(PointId i, PointId j) const {
  static const Rational zero(0);
  if (i >= n_ || j >= n_) throw std::out_of_range("point index out of range");
  if (i == j) return zero;
  return upper_[index(i, j)];
}

void MetricSpace::check() const {
  for (PointId i = 0; i < n_; ++i)
    for (PointId j = i + 1; j < n_; ++j)
      if ((*this)(i, j) <= 0) throw NonPositiveDistance(i, j);
  for (PointId i = 0; i < n_; ++i)
    for (PointId k = 0; k < n_; ++k) {
      if (k == i) continue;
      const Rational& direct = (*this)(i, k);
      for (PointId j = 0; j < n_; ++j) {
        if (j == i || j == k) continue;
        Rational slack = (*this)(i, j) + (*this)(j, k) - direct;
        if (slack < 0) {
          PointId lo = std::min(i, k), hi = std::max(i, k);
          throw TriangleViolation(lo, j, hi, std::move(slack));
        }
      }
    }
}

MetricSpace MetricSpace::validate(const std::vector<std::vector<Rational>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw MetricError("empty distance table");
  for (const auto& row : table)
    if (row.size() != n) throw MetricError("distance table is not square");
  for (PointId i = 0; i < n; ++i)
    if (table[i][i] != 0) throw MetricError("non-zero diagonal entry at " + std::to_string(i));
  std::vector<Rational> upper;
  upper.reserve(pair_count(n));
  for (PointId i = 0; i < n; ++i)
    for (PointId j = i + 1; j < n; ++j) {
      if (table[i][j] != table[j][i]) throw AsymmetricInput(i, j);
      upper.push_back(table[i][j]);
    }
  MetricSpace ms(n, std::move(upper));
  ms.check();
  return ms;
}

MetricSpace MetricSpace::from_upper(std::size_t n, std::vector<Rational> upper) {
  if (n == 0) throw MetricError("empty metric space");
  if (upper.size() != pair_count(n)) throw MetricError("expected " + std::to_string(pair_count(n)) + " distances");
  MetricSpace ms(n, std::move(upper));
  ms.check();
  return ms;
}

MetricSpace MetricSpace::subspace(std::span<const PointId> points) const {
  std::vector<Rational> upper;
  upper.reserve(pair_count(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw MetricError("duplicate point in subspace");
      upper.push_back((*this)(points[i], points[j]));
    }
  return MetricSpace(points.size(), std::move(upper));
}

MetricSpace MetricSpace::scaled(const Rational& factor) const {
  if (factor <= 0) throw MetricError("scale factor must be positive");
  std::vector<Rational> upper = upper_;
  for (auto& d : upper) d *= factor;
  return MetricSpace(n_, std::move(upper));
}

GenericityReport genericity(const MetricSpace& ms) {
  GenericityReport report;
  const std::size_t n = ms.size();

  std::map<Rational, Pair> seen;
  for (const Pair& p : all_pairs(n)) {
    auto [it, inserted] = seen.emplace(ms(p.a, p.b), p);
    if (!inserted) {
      report.distinct_distances = false;
      report.equal_pairs = std::array<Pair, 2>{it->second, p};
      break;
    }
  }

  for (PointId a = 0; a < n && report.quad_generic; ++a)
    for (PointId b = a + 1; b < n && report.quad_generic; ++b)
      for (PointId c = b + 1; c < n && report.quad_generic; ++c)
        for (PointId d = c + 1; d < n; ++d) {
          if (!classify(quad_sums(ms, {a, b, c, d}))) {
            report.quad_generic = false;
            report.tied_quadruple = Quadruple{a, b, c, d};
            break;
          }
        }
  return report;
}

namespace {

constexpr int kMaxPerturbationAttempts = 1000;
constexpr std::uint64_t kJitterSteps = 1ULL << 30;

}  // namespace

MetricSpace perturb_to_generic(const MetricSpace& ms, const Rational& eps, std::uint64_t seed) {
  if (eps <= 0) throw MetricError("perturbation epsilon must be positive");
  Rng rng(seed);
  const Rational two_eps = 2 * eps;
  for (int attempt = 0; attempt < kMaxPerturbationAttempts; ++attempt) {
    std::vector<Rational> upper = ms.upper();
    for (auto& d : upper) d += uniform_rational(rng, eps, two_eps, kJitterSteps);
    // Increments within [eps, 2eps] keep every triangle inequality; from_upper re-checks.
    MetricSpace candidate = MetricSpace::from_upper(ms.size(), std::move(upper));
    if (genericity(candidate).generic()) return candidate;
  }
  throw PerturbationFailed("no generic perturbation found after " + std::to_string(kMaxPerturbationAttempts) +
                           " attempts");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::c321: return "321";
    case Family::c132: return "132";
    case Family::c123: return "123";
    case Family::c231: return "231";
    case Family::random: return "random";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::c321, Family::c132, Family::c123, Family::c231, Family::random})
    if (text == to_string(f)) return f;
  return std::nullopt;
}

namespace {

constexpr int kMaxJitterRounds = 200;

QuadColor family_color(Family family) {
  switch (family) {
    case Family::c321: return QuadColor::c321;
    case Family::c132: return QuadColor::c132;
    case Family::c123: return QuadColor::c123;
    case Family::c231: return QuadColor::c231;
    case Family::random: break;
  }
  throw std::invalid_argument("random family has no color");
}

// Profile g(t) for the gap t = j - i. Convex profiles rank the sums as 321,
// concave ones as 231; negating or reflecting gives 123 and 132.
Rational profile(Family family, std::size_t n, std::size_t t) {
  const Rational tt(static_cast<long>(t));
  const Rational nn(static_cast<long>(n));
  const Rational n2 = nn * nn;
  switch (family) {
    case Family::c321: return tt * tt;
    case Family::c231: return tt - tt * tt / n2;
    case Family::c123: return (n2 - tt * tt) / n2;
    case Family::c132: return nn - tt + tt * tt / n2;
    case Family::random: break;
  }
  return 0;
}

// Upper bound of the profile over t in [1, n), used to keep all distances in [1, 3/2].
Rational profile_bound(Family family, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  switch (family) {
    case Family::c321: return nn * nn;
    case Family::c231: return nn;
    case Family::c123: return 1;
    case Family::c132: return nn;
    case Family::random: break;
  }
  return 1;
}

// Smallest difference between two sums of one quadruple.
std::optional<Rational> smallest_sum_gap(const MetricSpace& ms) {
  std::optional<Rational> gap;
  const std::size_t n = ms.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c)
        for (PointId d = c + 1; d < n; ++d) {
          QuadSums s = quad_sums(ms, {a, b, c, d});
          const std::array<Rational, 3> diffs = {Rational(s.r1 - s.r2), Rational(s.r1 - s.r3), Rational(s.r2 - s.r3)};
          for (const Rational& diff : diffs) {
            Rational size = abs(diff);
            if (!gap || size < *gap) gap = std::move(size);
          }
        }
  return gap;
}

bool is_verified(const MetricSpace& ms, QuadColor color) {
  if (!genericity(ms).generic()) return false;
  QuadColorTable table(ms);
  const std::size_t n = ms.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c)
        for (PointId d = c + 1; d < n; ++d)
          if (table.at({a, b, c, d}) != color) return false;
  return true;
}

MetricSpace generate_random(std::size_t n, Rng& rng) {
  std::vector<Rational> upper;
  upper.reserve(pair_count(n));
  for (std::size_t i = 0; i < pair_count(n); ++i) upper.push_back(uniform_rational(rng, 1, 2, 1'000'000));
  MetricSpace base = MetricSpace::from_upper(n, std::move(upper));
  return perturb_to_generic(base, Rational(1, 100'000), rng());
}

}  // namespace

MetricSpace generate(Family family, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw MetricError("cannot generate an empty space");
  Rng rng(seed);
  if (family == Family::random) return generate_random(n, rng);

  const QuadColor color = family_color(family);
  const Rational scale = Rational(1, 2) / profile_bound(family, n);
  std::vector<Rational> base;
  base.reserve(pair_count(n));
  for (PointId i = 0; i < n; ++i)
    for (PointId j = i + 1; j < n; ++j) base.push_back(1 + scale * profile(family, n, j - i));
  const MetricSpace base_space = MetricSpace::from_upper(n, base);

  // Jitter below a quarter of the smallest sum gap cannot reorder any sums.
  Rational bound = smallest_sum_gap(base_space).value_or(Rational(1, 100)) / 4;
  if (bound > Rational(1, 100)) bound = Rational(1, 100);

  for (int round = 0; round < kMaxJitterRounds; ++round) {
    std::vector<Rational> upper = base;
    for (auto& d : upper) {
      // Strictly below `bound`.
      d += uniform_rational(rng, 0, bound, kJitterSteps) * Rational(kJitterSteps - 1, kJitterSteps);
    }
    MetricSpace candidate = MetricSpace::from_upper(n, std::move(upper));
    if (is_verified(candidate, color)) return candidate;
    // Verification failed: shrink the jitter and draw again.
    bound /= 2;
  }
  throw GenerationFailed(family, n);
}

}  // namespace linf
