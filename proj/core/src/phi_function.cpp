#include "loopmod/phi_function.hpp"

#include "loopmod/errors.hpp"

namespace loopmod {

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw InvalidArgument("bad sign: " + s);
}

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

PhiFunction PhiFunction::constant(Sign s) {
  PhiFunction f;
  f.default_ = s;
  return f;
}

PhiFunction PhiFunction::with_exceptions(std::map<Label, Sign> exceptions, Sign default_sign) {
  for (const auto& [l, s] : exceptions) {
    (void)s;
    if (label_degree(l) < 1) throw InvalidArgument("phi is defined on positive indices only: " + label_str(l));
  }
  PhiFunction f;
  f.exceptions_ = std::move(exceptions);
  f.default_ = default_sign;
  return f;
}

PhiFunction PhiFunction::periodic(std::vector<Sign> pattern, std::map<Label, Sign> exceptions) {
  if (pattern.empty()) throw InvalidArgument("periodic phi needs a nonempty pattern");
  PhiFunction f = with_exceptions(std::move(exceptions), pattern.front());
  f.pattern_ = std::move(pattern);
  return f;
}

Sign PhiFunction::operator()(int n) const {
  if (n < 1) throw InvalidArgument("phi(n) needs n >= 1, got " + std::to_string(n));
  if (auto it = exceptions_.find(Label{n}); it != exceptions_.end()) return it->second;
  if (!pattern_.empty()) return pattern_[static_cast<std::size_t>(n - 1) % pattern_.size()];
  return default_;
}

Sign PhiFunction::operator()(IndexPair p) const {
  if (p.k < 1 || p.i < 1) throw InvalidArgument("phi(k,i) needs k,i >= 1");
  if (auto it = exceptions_.find(Label{p}); it != exceptions_.end()) return it->second;
  return (*this)(p.k);
}

Sign PhiFunction::at(const Label& l) const {
  if (const int* n = std::get_if<int>(&l)) return (*this)(*n);
  return (*this)(std::get<IndexPair>(l));
}

}  // namespace loopmod
