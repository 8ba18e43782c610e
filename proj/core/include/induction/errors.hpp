#pragma once

#include <stdexcept>
#include <string>

namespace induction {

// Raised when an argument lies outside the mathematical domain of an
// operation (probabilities outside [0,1], occurrences > trials, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a Monte-Carlo estimator fails to collect any usable sample.
class InsufficientAcceptance : public std::runtime_error {
public:
  explicit InsufficientAcceptance(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace induction
