#include "loopmod/scalar.hpp"

#include <ostream>

#include "loopmod/errors.hpp"

namespace loopmod {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidArgument("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InvalidArgument("malformed rational: " + s);
  if (num[0] == '+') num.erase(num.begin());
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InvalidArgument("zero denominator: " + s);
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const { return q_.get_str(10); }

bool Scalar::is_integer() const { return q_.get_den() == 1; }

std::int64_t Scalar::to_int() const {
  if (!is_integer()) throw InvalidArgument("not an integer: " + str());
  if (!q_.get_num().fits_slong_p()) throw InvalidArgument("integer out of range: " + str());
  return q_.get_num().get_si();
}

Scalar Scalar::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Scalar(mpq_class(f));
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(q_))); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ += o.q_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  q_ -= o.q_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  q_ *= o.q_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-q_)); }

Scalar pow(const Scalar& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar result(1);
  for (std::int64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

Scalar factorial(std::int64_t n) {
  if (n < 0) throw InvalidArgument("factorial of negative number");
  Scalar r(1);
  for (std::int64_t i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace loopmod
