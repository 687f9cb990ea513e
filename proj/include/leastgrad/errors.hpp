#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lg {

// Input outside the domain of an operation (abscissa out of range, point
// outside the region where a map is defined).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A precondition the caller can fix was not met: unvalidated hypotheses,
// grid too coarse, depth over the cap.
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state that the construction guarantees cannot happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A numeric inequality did not hold. Carries the measured quantities.
class VerificationError : public std::runtime_error {
 public:
  using Values = std::vector<std::pair<std::string, double>>;
  VerificationError(const std::string& what, Values values)
      : std::runtime_error(what), values_(std::move(values)) {}
  const Values& values() const { return values_; }

 private:
  Values values_;
};

// The subdivision could not be carried out (intersection failure, children
// overlapping); indicates a breach of the smallness hypotheses.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lg
