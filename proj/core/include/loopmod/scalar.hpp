#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace loopmod {

// Exact rational number, always in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  // Accepts "p", "-p", "p/q".
  static Scalar parse(std::string_view text);

  std::string str() const;
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(q_); }
  // Only valid when is_integer() and the value fits.
  std::int64_t to_int() const;
  Scalar floor() const;
  Scalar abs() const;
  Scalar inverse() const;

  const mpq_class& raw() const { return q_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Scalar pow(const Scalar& base, std::int64_t exponent);
Scalar factorial(std::int64_t n);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace loopmod
