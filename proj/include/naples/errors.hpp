#pragma once

#include <stdexcept>
#include <string>

namespace naples {

// A text literal (preference, step word, tree, ...) that does not follow its
// grammar.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed object that violates an operation's precondition, e.g. a path
// that dips below the allowed bound or a tree with the wrong shape.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace naples
