#pragma once

#include <stdexcept>
#include <string>

namespace bfmle {

// Bad caller input that no valid configuration could satisfy.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class LengthError : public DomainError {
 public:
  explicit LengthError(const std::string& what) : DomainError(what) {}
};

// A sample whose empirical variance is zero.
class DegenerateVariance : public DomainError {
 public:
  explicit DegenerateVariance(const std::string& what) : DomainError(what) {}
};

// Leading coefficient of a cubic is zero.
class NotCubic : public DomainError {
 public:
  explicit NotCubic(const std::string& what) : DomainError(what) {}
};

}  // namespace bfmle
