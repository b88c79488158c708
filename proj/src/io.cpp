#include "linf/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace linf {

ParseError::ParseError(std::size_t line_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}

namespace {

// Reads data lines, skipping blanks and '#' comments.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '#') continue;
      std::istringstream split(text);
      tokens.clear();
      for (std::string tok; split >> tok;) tokens.push_back(tok);
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::size_t parse_count(const std::string& text, std::size_t line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + text + "'");
  }
}

Rational parse_value(const std::string& text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

MetricSpace read_metric(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line(), "missing point count");
  if (tokens.size() != 1) throw ParseError(reader.line(), "first line must hold only the point count");
  const std::size_t n = parse_count(tokens[0], reader.line());
  if (n == 0) throw ParseError(reader.line(), "point count must be positive");

  std::vector<std::vector<std::optional<Rational>>> seen(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t count = 0; count < pair_count(n); ++count) {
    if (!reader.next(tokens)) throw ParseError(reader.line(), "expected " + std::to_string(pair_count(n)) + " distance lines, got " + std::to_string(count));
    if (tokens.size() != 3) throw ParseError(reader.line(), "expected `i j d`");
    const std::size_t i = parse_count(tokens[0], reader.line());
    const std::size_t j = parse_count(tokens[1], reader.line());
    if (!(i < j && j < n)) throw ParseError(reader.line(), "indices must satisfy 0 <= i < j < n");
    if (seen[i][j]) throw ParseError(reader.line(), "duplicate pair " + tokens[0] + " " + tokens[1]);
    seen[i][j] = parse_value(tokens[2], reader.line());
  }
  if (reader.next(tokens)) throw ParseError(reader.line(), "unexpected data after the last distance");

  std::vector<Rational> upper;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(*seen[i][j]);
  return MetricSpace::from_upper(n, std::move(upper));
}

void write_metric(std::ostream& out, const MetricSpace& ms) {
  out << ms.size() << "\n";
  for (const Pair& p : all_pairs(ms.size())) out << p.a << " " << p.b << " " << format_rational(ms(p.a, p.b)) << "\n";
}

Embedding read_embedding(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line(), "missing `n k` header");
  if (tokens.size() != 2) throw ParseError(reader.line(), "header must be `n k`");
  Embedding e;
  e.n = parse_count(tokens[0], reader.line());
  e.k = parse_count(tokens[1], reader.line());
  for (std::size_t row = 0; row < e.n; ++row) {
    if (e.k == 0) {
      e.rows.emplace_back();
      continue;
    }
    if (!reader.next(tokens)) throw ParseError(reader.line(), "expected " + std::to_string(e.n) + " rows");
    if (tokens.size() != e.k) throw ParseError(reader.line(), "expected " + std::to_string(e.k) + " coordinates");
    std::vector<Rational> values;
    for (const auto& tok : tokens) values.push_back(parse_value(tok, reader.line()));
    e.rows.push_back(std::move(values));
  }
  if (reader.next(tokens)) throw ParseError(reader.line(), "unexpected data after the last row");
  return e;
}

void write_embedding(std::ostream& out, const Embedding& e) {
  out << e.n << " " << e.k << "\n";
  if (e.k == 0) return;
  for (const auto& row : e.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << format_rational(row[i]);
    out << "\n";
  }
}

void write_cover(std::ostream& out, const MetricSpace& ms, const EdgeCover& cover) {
  for (const auto& f : cover.fns) {
    for (std::size_t i = 0; i < f.values.size(); ++i) out << (i ? " " : "") << format_rational(f.values[i]);
    out << "\n";
    const auto arcs = tight_graph(ms, f);
    for (std::size_t i = 0; i < arcs.size(); ++i) out << (i ? " " : "") << arcs[i].from << ">" << arcs[i].to;
    out << "\n";
  }
}

MetricSpace load_metric(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  return read_metric(in);
}

Embedding load_embedding(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  return read_embedding(in);
}

}  // namespace linf
