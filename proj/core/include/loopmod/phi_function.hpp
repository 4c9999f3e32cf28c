#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopmod/multi_index.hpp"

namespace loopmod {

enum class Sign { Plus, Minus };

char sign_char(Sign s);
Sign parse_sign(const std::string& s);
Sign flip(Sign s);

// A sign function on positive indices n, or on pairs (k, i).
// Lookup order: exact label exception, then (for a pair) the exception on k,
// then the periodic pattern, then the default.
class PhiFunction {
 public:
  PhiFunction() = default;
  static PhiFunction constant(Sign s);
  static PhiFunction with_exceptions(std::map<Label, Sign> exceptions, Sign default_sign);
  static PhiFunction periodic(std::vector<Sign> pattern, std::map<Label, Sign> exceptions = {});

  Sign operator()(int n) const;
  Sign operator()(IndexPair p) const;
  Sign at(const Label& l) const;

  const std::map<Label, Sign>& exceptions() const { return exceptions_; }
  Sign default_sign() const { return default_; }
  const std::vector<Sign>& pattern() const { return pattern_; }
  bool is_periodic() const { return !pattern_.empty(); }

  friend bool operator==(const PhiFunction&, const PhiFunction&) = default;

 private:
  std::map<Label, Sign> exceptions_;
  Sign default_ = Sign::Plus;
  std::vector<Sign> pattern_;
};

}  // namespace loopmod
