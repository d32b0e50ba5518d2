#pragma once

#include <stdexcept>
#include <string>

namespace tenspect {

// Malformed operands: incompatible shapes, broken invariants, bad arguments.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Spectral preconditions. Norm-zero and norm-one inputs are rejected with
// distinct types so callers can tell the two hypothesis violations apart.
class NormZeroError : public std::invalid_argument {
 public:
  explicit NormZeroError(const std::string& what)
      : std::invalid_argument(what) {}
};

class NormOneError : public std::invalid_argument {
 public:
  explicit NormOneError(const std::string& what)
      : std::invalid_argument(what) {}
};

class EigenSolveError : public std::runtime_error {
 public:
  explicit EigenSolveError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace tenspect
