#pragma once

#include <stdexcept>
#include <string>

namespace pcn {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A scan found no procedure definitions (distinct from a parse failure).
class EmptyCorpusError : public Error {
 public:
  explicit EmptyCorpusError(const std::string& what) : Error(what) {}
};

/// A file could not be parsed (graph files, edge lists).
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

}  // namespace pcn
