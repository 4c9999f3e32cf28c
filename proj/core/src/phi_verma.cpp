#include "loopmod/phi_verma.hpp"

#include <algorithm>

#include "loopmod/errors.hpp"

namespace loopmod {

namespace {

void enumerate_monomials(const std::vector<Label>& pairs, std::size_t pos, int exp_cap, int total_left,
                         MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == pairs.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= std::min(exp_cap, total_left); ++e) {
    MultiIndex saved = cur;
    cur = cur.with(pairs[pos], e);
    enumerate_monomials(pairs, pos + 1, exp_cap, total_left - e, cur, out);
    cur = saved;
  }
}

}  // namespace

PhiVermaModule::PhiVermaModule(HeisenbergKind kind, PhiFunction phi, Scalar a, Truncation trunc,
                               std::set<int> pairs_filter)
    : kind_(std::move(kind)), phi_(std::move(phi)), a_(std::move(a)), trunc_(trunc), filter_(std::move(pairs_filter)) {
  trunc_.validate();
  const auto pairs = window_pairs();
  MultiIndex cur;
  enumerate_monomials(pairs, 0, trunc_.max_exponent, trunc_.max_total_degree, cur, basis_);
  std::sort(basis_.begin(), basis_.end());
}

PhiVermaModule build_phi_verma(const HeisenbergKind& kind, const PhiFunction& phi, const Scalar& a,
                               const Truncation& trunc) {
  return PhiVermaModule(kind, phi, a, trunc);
}

bool PhiVermaModule::handles_pair(const Label& pair) const {
  if (!kind_.valid_pair_label(pair)) return false;
  return filter_.empty() || filter_.count(label_degree(pair));
}

HGen PhiVermaModule::creator(const Label& pair) const {
  // phi(k) = + puts x_{+k} on the annihilating side, so x_{-k} creates.
  return pair_generator(pair, flip(phi_.at(pair)));
}

HGen PhiVermaModule::annihilator(const Label& pair) const { return pair_generator(pair, phi_.at(pair)); }

Scalar PhiVermaModule::dual_scale(const Label& pair) const {
  const int s = pair_scale(pair);
  return phi_.at(pair) == Sign::Plus ? Scalar(s) : Scalar(-s);
}

std::int64_t PhiVermaModule::degree(const MultiIndex& b) const {
  std::int64_t d = 0;
  for (const auto& [pair, e] : b.entries()) d += e * creator(pair).k;
  return d;
}

MultiIndex PhiVermaModule::zeta_grade(const MultiIndex& b) const {
  MultiIndex z;
  for (const auto& [pair, e] : b.entries()) z = z.with(pair, phi_.at(pair) == Sign::Plus ? -e : e);
  return z;
}

std::string PhiVermaModule::describe() const {
  std::string s = "M_phi(" + a_.str() + ") over " + kind_.str();
  if (!filter_.empty()) {
    s += " on indices {";
    bool first = true;
    for (int k : filter_) {
      s += (first ? "" : ",") + std::to_string(k);
      first = false;
    }
    s += "}";
  }
  return s;
}

Vec PhiVermaModule::act_noncentral(const HGen& g, const MultiIndex& b) const {
  const Label pair = g.pair_label();
  const std::int64_t e = b.get(pair);
  if (g == creator(pair)) {
    if (e + 1 > trunc_.max_exponent || b.total() + 1 > trunc_.max_total_degree)
      throw TruncationOverflow(g.str() + " on " + b.str() + " exceeds " + trunc_.str());
    return Vec(b.with(pair, e + 1));
  }
  if (e == 0) return {};
  return Vec(b.with(pair, e - 1), dual_scale(pair) * Scalar(e) * a_);
}

std::map<std::int64_t, std::size_t> PhiVermaModule::graded_dimensions() const {
  std::map<std::int64_t, std::size_t> dims;
  for (const auto& b : basis_) ++dims[degree(b)];
  return dims;
}

HighestReduction reduce_to_highest(const PhiVermaModule& m, const Vec& w) {
  if (w.is_zero()) throw InvalidArgument("reduce_to_highest: w = 0");
  if (m.level().is_zero()) throw LevelZero("reduce_to_highest needs a nonzero level");
  const MultiIndex* best = nullptr;
  for (const auto& [b, c] : w) {
    (void)c;
    if (!best || multiindex_compare(b, *best) == std::strong_ordering::greater) best = &b;
  }
  HighestReduction r{*best, Scalar(0)};
  Vec cur = w;
  Scalar norm(1);
  for (const auto& [pair, e] : r.m_bar.entries()) {
    for (std::int64_t t = 0; t < e; ++t) cur = m.act(m.annihilator(pair), cur);
    norm *= pow(m.dual_scale(pair), e);
  }
  for (const auto& [b, c] : cur)
    if (!b.empty()) throw std::logic_error("reduce_to_highest: result is not a multiple of v");
  r.coefficient = cur.coefficient(MultiIndex{}) / norm;
  return r;
}

std::vector<MultiIndex> proper_submodule_at_level_zero(const PhiVermaModule& m) {
  if (!m.level().is_zero()) throw InvalidArgument("proper_submodule_at_level_zero needs a = 0");
  std::vector<MultiIndex> out;
  for (const auto& b : m.basis())
    if (!b.empty()) out.push_back(b);
  return out;
}

CheckResult check_closed_subspace(const HeisenbergModule& m, const std::vector<MultiIndex>& labels) {
  CheckResult res{"closed subspace of " + m.describe()};
  const std::set<MultiIndex> span(labels.begin(), labels.end());
  for (const auto& b : labels) {
    for (const auto& g : m.window_gens()) {
      try {
        for (const auto& [t, c] : m.act(g, b)) {
          (void)c;
          // Targets outside the enumerated window are fine as long as they are not v-components
          // of the complement inside the window.
          if (!span.count(t) && m.in_basis(t)) res.fail(g.str() + " maps " + b.str() + " to " + t.str());
        }
        ++res.cases;
      } catch (const TruncationOverflow&) {
        ++res.skipped;
      }
    }
  }
  return res;
}

std::set<HGen> annihilator_of_vacuum(const HeisenbergModule& m) {
  std::set<HGen> out;
  for (const auto& g : m.window_gens(false)) {
    try {
      if (m.act(g, MultiIndex{}).is_zero()) out.insert(g);
    } catch (const TruncationOverflow&) {
    }
  }
  return out;
}

}  // namespace loopmod
