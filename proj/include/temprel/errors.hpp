#ifndef TEMPREL_ERRORS_HPP
#define TEMPREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace temprel {

// A derived relation conflicts with an existing one, or duplicate edges
// carry different labels. Message names the offending pair/triple.
class InconsistentGraphError : public std::runtime_error {
public:
  explicit InconsistentGraphError(const std::string& what)
      : std::runtime_error(what) {}
};

// Branch-and-bound search exceeded the configured node limit.
class NodeLimitError : public std::runtime_error {
public:
  NodeLimitError(const std::string& what, long long limit)
      : std::runtime_error(what), node_limit(limit) {}
  long long node_limit;
};

// The solver exhausted the search space without a feasible assignment.
// Vague-inclusive instances always admit a solution, and vague-exclusion
// instances admit the all-before assignment, so seeing this means a bug.
class InfeasibleInstanceError : public std::logic_error {
public:
  explicit InfeasibleInstanceError(const std::string& what)
      : std::logic_error(what) {}
};

// Corpus or model file violates the on-disk schema.
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace temprel

#endif  // TEMPREL_ERRORS_HPP
