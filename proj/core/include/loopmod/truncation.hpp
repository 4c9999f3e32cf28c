#pragma once

#include <string>

namespace loopmod {

// Finite window over which bases are enumerated.
struct Truncation {
  int max_delta_degree = 1;  // |n| bound on delta coefficients and Heisenberg indices
  int max_exponent = 1;      // bound on each exponent
  int max_real_height = 0;   // bound on the height of the real-root part
  int max_total_degree = 1;  // bound on the number of factors in a monomial

  // Throws InvalidArgument unless the bounds are in range.
  void validate() const;
  std::string str() const;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

Truncation make_truncation(int max_delta_degree, int max_exponent, int max_real_height, int max_total_degree);

}  // namespace loopmod
