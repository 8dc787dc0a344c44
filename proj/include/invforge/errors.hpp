#pragma once

#include <stdexcept>
#include <string>

namespace invforge {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class VertexBoundExceeded : public Error {
 public:
  VertexBoundExceeded(unsigned d, unsigned bound)
      : Error("graph has " + std::to_string(d) + " vertices; bound is " +
              std::to_string(bound) + " (set INVFORGE_MAX_D to raise it)") {}
};

class WrongFlavor : public Error {
 public:
  using Error::Error;
};

class WrongGroup : public Error {
 public:
  using Error::Error;
};

class IndexOrder : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class LengthExceedsDegree : public Error {
 public:
  using Error::Error;
};

// Raised when a character inner product that must be an integer is not.
// Indicates a bug, never a user error.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularCayley : public Error {
 public:
  using Error::Error;
};

class MixedComponents : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string group, unsigned d, unsigned k, const std::string& what)
      : Error("verification failed for " + group + ", d=" + std::to_string(d) +
              ", k=" + std::to_string(k) + ": " + what),
        group_(std::move(group)), d_(d), k_(k) {}

  const std::string& group() const { return group_; }
  unsigned degree() const { return d_; }
  unsigned weight() const { return k_; }

 private:
  std::string group_;
  unsigned d_;
  unsigned k_;
};

}  // namespace invforge
