#include "linf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace linf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  if (text.empty()) throw std::invalid_argument("empty number");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + original + "'");
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rational(p, q);
  } else {
    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw std::invalid_argument("malformed number '" + original + "'");
    if ((!whole.empty() && !all_digits(whole)) || (dot != std::string_view::npos && !all_digits(frac)))
      throw std::invalid_argument("malformed number '" + original + "'");
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(digits, scale);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  return rng() % bound;
}

Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, std::uint64_t steps) {
  const std::uint64_t u = uniform_below(rng, steps + 1);
  Rational t(mpz_class(std::to_string(u)), mpz_class(std::to_string(steps)));
  t.canonicalize();
  return lo + (hi - lo) * t;
}

}  // namespace linf
