#include "loopmod/heisenberg_module.hpp"

#include <algorithm>
#include <set>

#include "loopmod/errors.hpp"

namespace loopmod {

bool HeisenbergModule::handles(const HGen& g) const {
  if (g.is_central()) return true;
  validate_generator(kind(), g);
  return handles_pair(g.pair_label());
}

Vec HeisenbergModule::act(const HGen& g, const MultiIndex& b) const {
  if (g.is_central()) return Vec(b, level());
  if (!handles(g)) throw InvalidArgument(describe() + " does not handle generator " + g.str());
  return act_noncentral(g, b);
}

Vec HeisenbergModule::act(const HGen& g, const Vec& w) const {
  Vec out;
  for (const auto& [b, c] : w) out.add(act(g, b), c);
  return out;
}

bool HeisenbergModule::in_basis(const MultiIndex& b) const {
  const auto& bs = basis();
  return std::binary_search(bs.begin(), bs.end(), b);
}

std::vector<Label> HeisenbergModule::window_pairs() const {
  std::vector<Label> out;
  for (const auto& l : kind().pair_labels(window_bound()))
    if (handles_pair(l)) out.push_back(l);
  return out;
}

std::vector<HGen> HeisenbergModule::window_gens(bool include_central) const {
  std::vector<HGen> out;
  for (const auto& l : window_pairs()) {
    out.push_back(pair_generator(l, Sign::Minus));
    out.push_back(pair_generator(l, Sign::Plus));
  }
  if (include_central) out.push_back(HGen::c());
  return out;
}

TrivialModule::TrivialModule(HeisenbergKind kind, Scalar level, int bound)
    : kind_(std::move(kind)), level_(std::move(level)), bound_(bound) {}

TensorModule::TensorModule(ModulePtr left, ModulePtr right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_->kind() == right_->kind())) throw InvalidArgument("tensor factors over different algebras");
  if (left_->level() != right_->level()) throw InvalidArgument("tensor factors at different levels");
  const int bound = std::max(left_->window_bound(), right_->window_bound());
  for (const auto& l : left_->kind().pair_labels(bound))
    if (left_->handles_pair(l) && right_->handles_pair(l))
      throw InvalidArgument("tensor factors share pair " + label_str(l));
  for (const auto& a : left_->basis())
    for (const auto& b : right_->basis()) basis_.push_back(a + b);
  std::sort(basis_.begin(), basis_.end());
}

int TensorModule::window_bound() const { return std::max(left_->window_bound(), right_->window_bound()); }

bool TensorModule::handles_pair(const Label& pair) const {
  return left_->handles_pair(pair) || right_->handles_pair(pair);
}

std::pair<MultiIndex, MultiIndex> TensorModule::split(const MultiIndex& b) const {
  MultiIndex l;
  MultiIndex r;
  for (const auto& [lab, v] : b.entries()) {
    if (left_->handles_pair(lab))
      l = l.with(lab, v);
    else
      r = r.with(lab, v);
  }
  return {l, r};
}

std::int64_t TensorModule::degree(const MultiIndex& b) const {
  auto [l, r] = split(b);
  return left_->degree(l) + right_->degree(r);
}

MultiIndex TensorModule::zeta_grade(const MultiIndex& b) const {
  auto [l, r] = split(b);
  return left_->zeta_grade(l) + right_->zeta_grade(r);
}

std::string TensorModule::describe() const { return left_->describe() + " (x) " + right_->describe(); }

Vec TensorModule::act_noncentral(const HGen& g, const MultiIndex& b) const {
  auto [l, r] = split(b);
  Vec out;
  if (left_->handles(g)) {
    for (const auto& [nl, c] : left_->act(g, l)) out.add(nl + r, c);
  } else {
    for (const auto& [nr, c] : right_->act(g, r)) out.add(l + nr, c);
  }
  return out;
}

CheckResult check_representation(const HeisenbergModule& m) {
  CheckResult res{"representation property on " + m.describe()};
  const auto gens = m.window_gens();
  for (const auto& b : m.basis()) {
    for (const auto& g : gens) {
      for (const auto& h : gens) {
        try {
          const Vec lhs = m.act(g, m.act(h, b)) - m.act(h, m.act(g, b));
          Vec rhs;
          for (const auto& [z, c] : bracket(m.kind(), g, h)) rhs.add(m.act(z, b), c);
          ++res.cases;
          if (!(lhs == rhs))
            res.fail("[" + g.str() + "," + h.str() + "] on " + b.str() + ": " +
                     lhs.str([](const MultiIndex& x) { return x.str(); }));
        } catch (const TruncationOverflow&) {
          ++res.skipped;
        }
      }
    }
  }
  return res;
}

CheckResult check_grading_shift(const HeisenbergModule& m) {
  CheckResult res{"grading shift on " + m.describe()};
  for (const auto& b : m.basis()) {
    for (const auto& g : m.window_gens(false)) {
      try {
        const Vec img = m.act(g, b);
        ++res.cases;
        const Label pair = g.pair_label();
        const MultiIndex expect = m.zeta_grade(b).plus(pair, g.k > 0 ? 1 : -1);
        for (const auto& [t, c] : img) {
          (void)c;
          if (m.degree(t) != m.degree(b) + g.k)
            res.fail(g.str() + " on " + b.str() + " lands in degree " + std::to_string(m.degree(t)));
          if (!(m.zeta_grade(t) == expect)) res.fail(g.str() + " on " + b.str() + " breaks the zeta shift");
        }
      } catch (const TruncationOverflow&) {
        ++res.skipped;
      }
    }
  }
  return res;
}

}  // namespace loopmod
