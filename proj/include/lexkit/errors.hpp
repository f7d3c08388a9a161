#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllFormedInput : Error {
  using Error::Error;
};

struct FuelExhausted : Error {
  using Error::Error;
};

struct NotAReduct : Error {
  using Error::Error;
};

struct OracleUnknown : Error {
  using Error::Error;
};

struct NotSN : Error {
  using Error::Error;
};

struct NotLiftable : Error {
  using Error::Error;
};

struct TypeError : Error {
  using Error::Error;
};

// Byte offsets into the parsed text, end exclusive.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError : Error {
  ParseError(const std::string& msg, SourceSpan where, std::vector<std::string> want)
      : Error(msg), span(where), expected(std::move(want)) {}
  SourceSpan span;
  std::vector<std::string> expected;
};

}  // namespace lexkit
