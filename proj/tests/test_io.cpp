#include <gtest/gtest.h>

#include <sstream>

#include "linf/io.hpp"
#include "support.hpp"

namespace linf {
namespace {

using test::R;

MetricSpace parse(const std::string& text) {
  std::istringstream in(text);
  return read_metric(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

TEST(MetricFile, ReadsCommentsDecimalsAndFractions) {
  auto ms = parse("# three points\n3\n\n0 1 1\n0 2 1.5\n# middle comment\n1 2 7/4\n");
  EXPECT_EQ(ms, MetricSpace::from_upper(3, {Rational(1), R("3/2"), R("7/4")}));
}

TEST(MetricFile, AcceptsAnyPairOrder) {
  auto ms = parse("3\n1 2 2\n0 2 3/2\n0 1 1\n");
  EXPECT_EQ(ms(1, 2), 2);
}

TEST(MetricFile, CanonicalWriteRoundTrips) {
  for (Family f : {Family::c321, Family::c132, Family::random}) {
    auto ms = generate(f, 7, 3);
    std::ostringstream out;
    write_metric(out, ms);
    EXPECT_EQ(parse(out.str()), ms);
    std::ostringstream again;
    write_metric(again, parse(out.str()));
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(MetricFile, WriterUsesLowestTerms) {
  std::ostringstream out;
  write_metric(out, MetricSpace::from_upper(2, {R("6/4")}));
  EXPECT_EQ(out.str(), "2\n0 1 3/2\n");
}

TEST(MetricFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 0u);
  EXPECT_EQ(error_line("x\n"), 1u);
  EXPECT_EQ(error_line("2 3\n"), 1u);
  EXPECT_EQ(error_line("0\n"), 1u);
  EXPECT_EQ(error_line("3\n0 1 1\n0 1 1\n"), 3u);    // duplicate
  EXPECT_EQ(error_line("2\n1 0 1\n"), 2u);           // i > j
  EXPECT_EQ(error_line("2\n0 2 1\n"), 2u);           // j out of range
  EXPECT_EQ(error_line("2\n0 1 1/0\n"), 2u);         // bad rational
  EXPECT_EQ(error_line("2\n0 1\n"), 2u);             // missing value
  EXPECT_EQ(error_line("2\n0 1 1\n0 1 1\n"), 3u);    // trailing data
  EXPECT_EQ(error_line("3\n0 1 1\n# end\n"), 3u);    // too few lines
  EXPECT_EQ(error_line("2\n-1 1 1\n"), 2u);
}

TEST(MetricFile, EmptyInputIsAParseError) { EXPECT_THROW(parse(""), ParseError); }

TEST(MetricFile, InvalidMetricIsAMetricError) {
  EXPECT_THROW(parse("3\n0 1 1\n0 2 3\n1 2 1\n"), TriangleViolation);
  EXPECT_THROW(parse("2\n0 1 0\n"), NonPositiveDistance);
  EXPECT_THROW(parse("2\n0 1 -2\n"), NonPositiveDistance);
}

TEST(EmbeddingFile, RoundTrips) {
  auto e = frechet_embedding(generate(Family::random, 5, 2));
  std::ostringstream out;
  write_embedding(out, e);
  std::istringstream in(out.str());
  EXPECT_EQ(read_embedding(in), e);
}

TEST(EmbeddingFile, ZeroColumns) {
  std::istringstream in("1 0\n");
  auto e = read_embedding(in);
  EXPECT_EQ(e.n, 1u);
  EXPECT_EQ(e.k, 0u);
  EXPECT_EQ(e.rows.size(), 1u);
}

TEST(EmbeddingFile, ExactText) {
  Embedding e{2, 2, {{Rational(0), R("1/2")}, {R("-3"), R("4/6")}}};
  std::ostringstream out;
  write_embedding(out, e);
  EXPECT_EQ(out.str(), "2 2\n0 1/2\n-3 2/3\n");
}

TEST(EmbeddingFile, RejectsMalformedRows) {
  for (const char* bad : {"", "2\n", "2 1\n0\n", "2 1\n0\n1 2\n", "1 1\n0\n5\n", "1 1\nz\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_embedding(in), ParseError) << bad;
  }
}

TEST(CoverFile, ListsValuesAndArcs) {
  auto ms = MetricSpace::from_upper(3, {Rational(1), Rational(2), R("5/2")});
  EdgeCover cover{{LipschitzFn{{Rational(0), Rational(-1), R("3/2")}}}};
  std::ostringstream out;
  write_cover(out, ms, cover);
  EXPECT_EQ(out.str(), "0 -1 3/2\n0>1 2>1\n");
}

TEST(Files, MissingFileThrows) {
  EXPECT_THROW(load_metric("/nonexistent/metric.txt"), std::runtime_error);
  EXPECT_THROW(load_embedding("/nonexistent/embedding.txt"), std::runtime_error);
}

}  // namespace
}  // namespace linf
