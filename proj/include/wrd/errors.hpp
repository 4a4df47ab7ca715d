#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wrd {

/// Violation of a graph construction or argument precondition.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    loop_edge,
    duplicate_edge,
    non_positive_weight,
    arity_mismatch,
    vertex_out_of_range,
    invalid_parameter,
    empty_graph,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Raised by exhaustive routines when n exceeds the configured guard.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(std::size_t n, std::size_t guard, const std::string& routine)
      : std::runtime_error(routine + ": n = " + std::to_string(n) +
                           " exceeds size guard " + std::to_string(guard)),
        n_(n),
        guard_(guard) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t guard() const noexcept { return guard_; }

 private:
  std::size_t n_;
  std::size_t guard_;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A proven inequality or characterization failed on exact values. This
/// always indicates a bug; `dump` carries a replayable description.
class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(const std::string& theorem, const std::string& dump)
      : std::logic_error("theorem violated: " + theorem),
        theorem_(theorem),
        dump_(dump) {}

  const std::string& theorem() const noexcept { return theorem_; }
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string theorem_;
  std::string dump_;
};

}  // namespace wrd
