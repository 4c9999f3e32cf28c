#pragma once

#include <stdexcept>
#include <string>

namespace loopmod {

// Malformed input: bad labels, out-of-range indices, wrong flavor.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exponent or degree cap of a truncation was exceeded. Never means zero.
class TruncationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation requires a nonzero level a.
class LevelZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAdmissible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotDiagonal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ProbeInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loopmod
