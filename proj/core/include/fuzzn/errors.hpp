#pragma once

#include <stdexcept>
#include <string>

namespace fuzzn {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by FuzzyNumber::validate and from_side_functions.
class ValidationError : public Error {
 public:
  enum class Code {
    GapInBranch,
    NonMonotonePiece,
    CoreNotReached,
    ValueOutOfRange,
    SideFunctionViolation,
  };

  ValidationError(Code code, const std::string& msg) : Error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class StepTooCoarse : public Error {
 public:
  using Error::Error;
};

class NonPositiveRadius : public Error {
 public:
  using Error::Error;
};

class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

class LevelsOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateSpec : public Error {
 public:
  using Error::Error;
};

class InfinitelyManySingularities : public Error {
 public:
  using Error::Error;
};

class PointOutsideSupport : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzn
