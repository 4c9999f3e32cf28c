#pragma once

// Test-side reference computations. None of these call into the library's
// construction code; they rebuild the expected numbers from first principles.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "loopmod/affine_algebra.hpp"
#include "loopmod/scalar.hpp"

namespace oracle {

using loopmod::Scalar;

// p(0..n) by the standard dynamic program over part sizes.
inline std::vector<std::uint64_t> partition_numbers(int n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p;
}

// p(0..n) by Euler's pentagonal recurrence, a second route.
inline std::vector<std::uint64_t> partition_numbers_pentagonal(int n) {
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return {p.begin(), p.end()};
}

// Counts multisets over weighted items: exponent per item <= exp_cap, at most
// count_cap factors, total height <= height_cap. Returns counts keyed by the sum of
// item keys.
template <typename Key>
std::map<Key, std::uint64_t> monomial_counts(const std::vector<std::pair<Key, int>>& items, int exp_cap,
                                             int count_cap, int height_cap,
                                             const std::function<Key(const Key&, const Key&, int)>& add_times) {
  std::map<Key, std::uint64_t> out;
  std::function<void(std::size_t, int, int, const Key&)> rec = [&](std::size_t pos, int count_left, int height_left,
                                                                   const Key& acc) {
    if (pos == items.size()) {
      ++out[acc];
      return;
    }
    for (int e = 0; e <= exp_cap && e <= count_left && e * items[pos].second <= height_left; ++e)
      rec(pos + 1, count_left - e, height_left - e * items[pos].second, add_times(acc, items[pos].first, e));
  };
  rec(0, count_cap, height_cap, Key{});
  return out;
}

// Affine sl_2 in the loop realization: (matrix, power) terms plus c and d.
struct Sl2Hat {
  using Mat = std::array<std::array<Scalar, 2>, 2>;
  std::map<int, Mat> loop;
  Scalar c;
  Scalar d;

  static Mat zero() { return {{{Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0)}}}; }

  void add(int power, const Mat& m, const Scalar& s) {
    auto [it, inserted] = loop.try_emplace(power, zero());
    (void)inserted;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) it->second[i][j] += s * m[i][j];
  }

  void normalize() {
    for (auto it = loop.begin(); it != loop.end();) {
      bool z = true;
      for (const auto& row : it->second)
        for (const auto& e : row) z = z && e.is_zero();
      it = z ? loop.erase(it) : std::next(it);
    }
  }

  friend bool operator==(Sl2Hat a, Sl2Hat b) {
    a.normalize();
    b.normalize();
    return a.loop == b.loop && a.c == b.c && a.d == b.d;
  }
};

inline Sl2Hat::Mat mat_mul(const Sl2Hat::Mat& x, const Sl2Hat::Mat& y) {
  auto out = Sl2Hat::zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

// The element of affine sl_2 named by a library basis label, using E_ij, the
// Cartan vector u = diag(1, -1) with trace norm 2, and u / 2 for negative powers.
inline Sl2Hat sl2_element(const loopmod::GBasis& g) {
  Sl2Hat out;
  auto m = Sl2Hat::zero();
  using T = loopmod::GBasis::Type;
  switch (g.type) {
    case T::Real:
      m[g.row - 1][g.col - 1] = Scalar(1);
      out.add(g.power, m, Scalar(1));
      break;
    case T::Imag:
    case T::Cartan: {
      const Scalar s = (g.type == T::Imag && g.power < 0) ? Scalar(1) / Scalar(2) : Scalar(1);
      m[0][0] = s;
      m[1][1] = -s;
      out.add(g.type == T::Imag ? g.power : 0, m, Scalar(1));
      break;
    }
    case T::C:
      out.c = Scalar(1);
      break;
    case T::D:
      out.d = Scalar(1);
      break;
  }
  return out;
}

inline Sl2Hat sl2_from(const loopmod::LoopElement& e) {
  Sl2Hat out;
  for (const auto& [g, s] : e) {
    const Sl2Hat t = sl2_element(g);
    for (const auto& [p, m] : t.loop) out.add(p, m, s);
    out.c += s * t.c;
    out.d += s * t.d;
  }
  return out;
}

// [X t^m, Y t^n] = [X, Y] t^{m+n} + m delta_{m+n,0} tr(XY) c and [d, X t^n] = n X t^n.
inline Sl2Hat sl2_bracket(const Sl2Hat& x, const Sl2Hat& y) {
  Sl2Hat out;
  for (const auto& [m, X] : x.loop)
    for (const auto& [n, Y] : y.loop) {
      const auto xy = mat_mul(X, Y);
      const auto yx = mat_mul(Y, X);
      auto comm = Sl2Hat::zero();
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) comm[i][j] = xy[i][j] - yx[i][j];
      out.add(m + n, comm, Scalar(1));
      if (m + n == 0) out.c += Scalar(m) * (xy[0][0] + xy[1][1]);
    }
  for (const auto& [n, Y] : y.loop) out.add(n, Y, x.d * Scalar(n));
  for (const auto& [m, X] : x.loop) out.add(m, X, -y.d * Scalar(m));
  return out;
}

}  // namespace oracle
