#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "loopmod/scalar.hpp"

namespace loopmod {

// Finite linear combination over basis type B. Zero coefficients are never stored,
// and iteration follows the ordering of B.
template <typename B>
class LinComb {
 public:
  using Map = std::map<B, Scalar>;

  LinComb() = default;
  explicit LinComb(const B& b, Scalar coeff = Scalar(1)) { add(b, std::move(coeff)); }

  void add(const B& b, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinComb& o, const Scalar& scale = Scalar(1)) {
    if (scale.is_zero()) return;
    for (const auto& [b, c] : o.terms_) add(b, c * scale);
  }

  Scalar coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  // Applies a linear map given on basis elements.
  template <typename C, typename F>
  LinComb<C> map_linear(F&& f) const {
    LinComb<C> out;
    for (const auto& [b, c] : terms_) out.add(f(b), c);
    return out;
  }

  std::string str(const std::function<std::string(const B&)>& fmt) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")*" << fmt(b);
    }
    return os.str();
  }

 private:
  Map terms_;
};

}  // namespace loopmod
