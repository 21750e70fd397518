#pragma once

#include <iosfwd>
#include <string>

#include "bitopo/space.hpp"

namespace bitopo {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}
  int line;
};

/// Line-oriented UTF-8 text format, '#' starts a comment:
///
///   space NAME
///   points: p1 p2 ...
///   tt-opens: {} {p1 p2} ...      (or tt-subbasis: ..., then generated)
///   ff-opens: ...                 (or ff-subbasis: ...)
///
/// Sets are brace-delimited and whitespace-separated; {} is the empty set.
BSpace parse_space(std::istream& in, const std::string& fallback_name);
BSpace parse_space_text(const std::string& text, const std::string& fallback_name);
BSpace load_space_file(const std::string& path);

std::string format_space(const BSpace& s);

}  // namespace bitopo
