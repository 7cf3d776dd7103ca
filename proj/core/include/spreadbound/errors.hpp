#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spreadbound {

/// Vertex pair (u_i, v_j), 0-based.
struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Replayable witness of a failed property: the degree pair and, when the
/// failure came from a concrete graph, its edge list.
struct Counterexample {
  int n = 0;
  int k = 0;
  std::vector<int> alpha;
  std::vector<int> beta;
  std::optional<std::vector<Edge>> edges;
};

/// Precondition or parameter range violation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked invariant failed. Carries the offending
/// instance so it can be serialized and replayed.
class PropertyViolation : public std::logic_error {
 public:
  PropertyViolation(const std::string& what, Counterexample example)
      : std::logic_error(what), example_(std::move(example)) {}

  const Counterexample& counterexample() const noexcept { return example_; }

 private:
  Counterexample example_;
};

class LemmaViolation : public PropertyViolation {
 public:
  using PropertyViolation::PropertyViolation;
};

class BoundViolation : public PropertyViolation {
 public:
  using PropertyViolation::PropertyViolation;
};

/// Label rejection sampling exhausted its attempt cap.
class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, int label, int attempts)
      : std::runtime_error(what), label_(label), attempts_(attempts) {}

  /// 1-based label whose count was out of range on the last attempt.
  int label() const noexcept { return label_; }
  int attempts() const noexcept { return attempts_; }

 private:
  int label_;
  int attempts_;
};

/// A coherent model failed validation; holds every violation found.
class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace spreadbound
