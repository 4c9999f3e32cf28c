#include "loopmod/diagonal.hpp"

#include <algorithm>
#include <cstdlib>

#include "loopmod/errors.hpp"

namespace loopmod {

std::pair<Scalar, Scalar> eigenvalue_ladder(const Scalar& a, const Scalar& lambda, int r, int s) {
  if (r < 1 || s < 1) throw InvalidArgument("eigenvalue_ladder needs r, s >= 1");
  return {lambda - Scalar(r) * a, lambda + Scalar(s - 1) * a};
}

DiagonalRealization::DiagonalRealization(HeisenbergKind kind, std::set<int> K, std::map<Label, Scalar> theta, Scalar a,
                                         Truncation trunc, std::map<Label, Sign> y_choice, std::set<int> pairs_filter)
    : kind_(std::move(kind)),
      K_(std::move(K)),
      theta_(std::move(theta)),
      a_(std::move(a)),
      trunc_(trunc),
      y_choice_(std::move(y_choice)),
      filter_(std::move(pairs_filter)) {
  trunc_.validate();
  if (a_.is_zero()) throw LevelZero("V_{K,theta,a} needs a nonzero level");
  for (int k : K_)
    if (k < 1) throw InvalidArgument("K must contain positive indices");
  for (const auto& [l, t] : theta_) {
    (void)t;
    if (!kind_.valid_pair_label(l)) throw InvalidArgument("theta given for invalid pair " + label_str(l));
    if (!in_K(l)) throw InvalidArgument("theta given for pair outside K: " + label_str(l));
  }
  for (const auto& [l, s] : y_choice_) {
    (void)s;
    if (!in_K(l)) throw InvalidArgument("y_choice given for pair outside K: " + label_str(l));
  }
  const auto pairs = window_pairs();
  for (const auto& l : pairs)
    if (in_K(l) && !theta_.count(l)) throw InvalidArgument("missing theta for pair " + label_str(l));

  // Enumerate signed exponents with sum of |p| bounded.
  std::vector<MultiIndex> out{MultiIndex{}};
  for (const auto& l : pairs) {
    std::vector<MultiIndex> next;
    const int lo = in_K(l) ? -trunc_.max_exponent : 0;
    for (const auto& b : out)
      for (int p = lo; p <= trunc_.max_exponent; ++p)
        if (b.abs_total() + std::abs(p) <= trunc_.max_total_degree) next.push_back(b.with(l, p));
    out = std::move(next);
  }
  basis_ = std::move(out);
  std::sort(basis_.begin(), basis_.end());
}

DiagonalRealization build_V_K_theta(const HeisenbergKind& kind, const std::set<int>& K,
                                    const std::map<Label, Scalar>& theta, const Scalar& a, const Truncation& trunc,
                                    const std::map<Label, Sign>& y_choice) {
  return DiagonalRealization(kind, K, theta, a, trunc, y_choice);
}

bool DiagonalRealization::handles_pair(const Label& pair) const {
  if (!kind_.valid_pair_label(pair)) return false;
  return filter_.empty() || filter_.count(label_degree(pair));
}

int DiagonalRealization::orientation(const Label& pair) const {
  auto it = y_choice_.find(pair);
  return (it != y_choice_.end() && it->second == Sign::Minus) ? -1 : 1;
}

Scalar DiagonalRealization::vacuum_eigenvalue(const Label& pair) const {
  if (!in_K(pair)) return Scalar(0);
  auto it = theta_.find(pair);
  if (it == theta_.end()) throw InvalidArgument("missing theta for pair " + label_str(pair));
  return it->second;
}

Scalar DiagonalRealization::eigenvalue(const Label& pair, const MultiIndex& b) const {
  const std::int64_t p = orientation(pair) * b.get(pair);
  return vacuum_eigenvalue(pair) - Scalar(p) * Scalar(pair_scale(pair)) * a_;
}

bool DiagonalRealization::irreducible() const {
  for (const auto& [l, t] : theta_)
    if ((t / (Scalar(pair_scale(l)) * a_)).is_integer()) return false;
  return true;
}

std::int64_t DiagonalRealization::degree(const MultiIndex& b) const { return z_degree(zeta_grade(b)); }

MultiIndex DiagonalRealization::zeta_grade(const MultiIndex& b) const {
  MultiIndex z;
  for (const auto& [l, e] : b.entries()) z = z.with(l, orientation(l) * e);
  return z;
}

std::string DiagonalRealization::describe() const {
  std::string s = "V_{K={";
  bool first = true;
  for (int k : K_) {
    s += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  s += "}, a=" + a_.str() + "} over " + kind_.str();
  return s;
}

Vec DiagonalRealization::act_noncentral(const HGen& g, const MultiIndex& b) const {
  const Label pair = g.pair_label();
  const int o = orientation(pair);
  const std::int64_t p = o * b.get(pair);
  const Scalar ka = Scalar(pair_scale(pair)) * a_;
  const Scalar theta = vacuum_eigenvalue(pair);
  std::int64_t next = 0;
  Scalar coeff(1);
  if (g.k > 0) {
    next = p + 1;
    if (p < 0) coeff = theta + Scalar(-p - 1) * ka;
  } else {
    next = p - 1;
    if (p > 0)
      coeff = theta - Scalar(p) * ka;
    else if (!in_K(pair))
      return {};
  }
  if (std::llabs(next) > std::llabs(p) &&
      (std::llabs(next) > trunc_.max_exponent || b.abs_total() + 1 > trunc_.max_total_degree))
    throw TruncationOverflow(g.str() + " on " + b.str() + " exceeds " + trunc_.str());
  return Vec(b.with(pair, o * next), coeff);
}

std::vector<LadderCoefficient> ladder_coefficients(const DiagonalRealization& m) {
  std::vector<LadderCoefficient> out;
  for (const auto& b : m.basis()) {
    for (const auto& pair : m.window_pairs()) {
      const std::int64_t e = b.get(pair);
      if (e == 0) continue;
      const std::int64_t p = m.zeta_grade(b).get(pair);
      const HGen g = pair_generator(pair, p > 0 ? Sign::Minus : Sign::Plus);
      const Vec img = m.act(g, b);
      out.push_back({pair, b, g, img.is_zero() ? Scalar(0) : img.begin()->second});
    }
  }
  return out;
}

std::optional<LadderCoefficient> singular_witness(const DiagonalRealization& m) {
  for (const auto& c : ladder_coefficients(m))
    if (c.coefficient.is_zero()) return c;
  return std::nullopt;
}

}  // namespace loopmod
