#pragma once

// Line-based text formats.
//
// Metric file:     optional '#' comment lines, then `n`, then one line
//                  `i j d` per pair 0 <= i < j < n; d is `p`, `p/q` or a decimal.
// Embedding file:  `n k`, then n lines of k rationals.
// Cover file:      per function, a line of n values and a line of tight arcs
//                  written `a>b`.
// Writers emit rationals in lowest terms, so every written file re-reads to
// the same value.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "linf/lipschitz.hpp"

namespace linf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line;
};

/// An input file could not be opened.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MetricSpace read_metric(std::istream& in);
void write_metric(std::ostream& out, const MetricSpace& ms);

Embedding read_embedding(std::istream& in);
void write_embedding(std::ostream& out, const Embedding& e);

void write_cover(std::ostream& out, const MetricSpace& ms, const EdgeCover& cover);

MetricSpace load_metric(const std::filesystem::path& path);
Embedding load_embedding(const std::filesystem::path& path);

}  // namespace linf
