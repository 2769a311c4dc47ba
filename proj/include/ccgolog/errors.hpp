#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccgolog {

/// A reference to something the active domain does not declare, or a value
/// of the wrong sort.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Executing an action whose precondition does not hold.
class IllegalActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceLocation where)
      : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.column) +
                           ": " + message),
        where_(where) {}

  SourceLocation where() const { return where_; }

 private:
  SourceLocation where_;
};

class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    kUndeclaredFluent,
    kUndeclaredAction,
    kUndeclaredProcedure,
    kDuplicateDeclaration,
    kDuplicateEffect,
    kRecursiveProcedure,
    kReservedName,
    kArityMismatch,
    kSortMismatch,
  };

  ValidationError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace ccgolog
