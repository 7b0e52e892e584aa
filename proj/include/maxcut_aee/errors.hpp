#pragma once

#include <stdexcept>
#include <string>

namespace aee {

// Input violates an operation's documented precondition (disconnected graph,
// negative parameter, graph that is not a clique-forest, size cap, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph / weight text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rule application no longer matches the graph it is applied to.
class StaleApplicationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal guarantee failed; always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aee
