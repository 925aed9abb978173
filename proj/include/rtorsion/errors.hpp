#pragma once

#include <stdexcept>
#include <string>

namespace rtorsion {

/// A mathematical precondition of an operation does not hold for its input
/// (non-acyclic complex, ∂² ≠ 0, η = 1, ...). Usage errors such as malformed
/// parameters are reported as std::invalid_argument instead.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonAcyclicError : public PreconditionError {
 public:
  explicit NonAcyclicError(const std::string& what)
      : PreconditionError("non-acyclic: " + what) {}
};

/// Chain complex fails validation; `degree` is the first offending degree.
class InvalidComplexError : public PreconditionError {
 public:
  InvalidComplexError(int degree, const std::string& what)
      : PreconditionError("invalid complex at degree " + std::to_string(degree) + ": " + what),
        degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class ModulusMismatchError : public std::invalid_argument {
 public:
  ModulusMismatchError(long long a, long long b)
      : std::invalid_argument("group ring modulus mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

}  // namespace rtorsion
