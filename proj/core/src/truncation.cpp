#include "loopmod/truncation.hpp"

#include "loopmod/errors.hpp"

namespace loopmod {

void Truncation::validate() const {
  if (max_delta_degree < 1) throw InvalidArgument("max_delta_degree must be >= 1");
  if (max_exponent < 1) throw InvalidArgument("max_exponent must be >= 1");
  if (max_real_height < 0) throw InvalidArgument("max_real_height must be >= 0");
  if (max_total_degree < 1) throw InvalidArgument("max_total_degree must be >= 1");
}

std::string Truncation::str() const {
  return "{delta<=" + std::to_string(max_delta_degree) + ", exp<=" + std::to_string(max_exponent) +
         ", height<=" + std::to_string(max_real_height) + ", total<=" + std::to_string(max_total_degree) + "}";
}

Truncation make_truncation(int max_delta_degree, int max_exponent, int max_real_height, int max_total_degree) {
  Truncation t{max_delta_degree, max_exponent, max_real_height, max_total_degree};
  t.validate();
  return t;
}

}  // namespace loopmod
