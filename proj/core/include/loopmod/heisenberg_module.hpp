#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loopmod/check.hpp"
#include "loopmod/heisenberg.hpp"
#include "loopmod/lin_comb.hpp"
#include "loopmod/multi_index.hpp"

namespace loopmod {

using Vec = LinComb<MultiIndex>;

// A module over a Heisenberg algebra presented on a truncated monomial basis.
// Labels are multi-indices over pair labels. The action is exact; only exponent
// and total-degree caps raise TruncationOverflow, so results may leave the
// enumerated basis when an index exceeds the window.
class HeisenbergModule {
 public:
  virtual ~HeisenbergModule() = default;

  virtual const HeisenbergKind& kind() const = 0;
  virtual const Scalar& level() const = 0;
  // Sorted ascending in MultiIndex storage order.
  virtual const std::vector<MultiIndex>& basis() const = 0;
  // Largest index present in the basis window.
  virtual int window_bound() const = 0;
  virtual bool handles_pair(const Label& pair) const = 0;
  virtual std::int64_t degree(const MultiIndex& b) const = 0;
  // Signed exponent of each pair: x_{+k} raises it by one, x_{-k} lowers it.
  virtual MultiIndex zeta_grade(const MultiIndex& b) const = 0;
  virtual std::string describe() const = 0;

  bool handles(const HGen& g) const;
  Vec act(const HGen& g, const MultiIndex& b) const;
  Vec act(const HGen& g, const Vec& w) const;
  bool in_basis(const MultiIndex& b) const;
  std::vector<Label> window_pairs() const;
  std::vector<HGen> window_gens(bool include_central = true) const;

 protected:
  // g is noncentral and handled.
  virtual Vec act_noncentral(const HGen& g, const MultiIndex& b) const = 0;
};

using ModulePtr = std::shared_ptr<const HeisenbergModule>;

// One-dimensional module: c acts by the level, every handled generator by zero.
class TrivialModule : public HeisenbergModule {
 public:
  TrivialModule(HeisenbergKind kind, Scalar level, int bound);

  const HeisenbergKind& kind() const override { return kind_; }
  const Scalar& level() const override { return level_; }
  const std::vector<MultiIndex>& basis() const override { return basis_; }
  int window_bound() const override { return bound_; }
  bool handles_pair(const Label&) const override { return false; }
  std::int64_t degree(const MultiIndex&) const override { return 0; }
  MultiIndex zeta_grade(const MultiIndex&) const override { return {}; }
  std::string describe() const override { return "trivial"; }

 protected:
  Vec act_noncentral(const HGen&, const MultiIndex&) const override { return {}; }

 private:
  HeisenbergKind kind_;
  Scalar level_;
  int bound_;
  std::vector<MultiIndex> basis_{MultiIndex{}};
};

// Tensor product of two modules over disjoint sets of pairs, same level.
class TensorModule : public HeisenbergModule {
 public:
  TensorModule(ModulePtr left, ModulePtr right);

  const HeisenbergKind& kind() const override { return left_->kind(); }
  const Scalar& level() const override { return left_->level(); }
  const std::vector<MultiIndex>& basis() const override { return basis_; }
  int window_bound() const override;
  bool handles_pair(const Label& pair) const override;
  std::int64_t degree(const MultiIndex& b) const override;
  MultiIndex zeta_grade(const MultiIndex& b) const override;
  std::string describe() const override;

 protected:
  Vec act_noncentral(const HGen& g, const MultiIndex& b) const override;

 private:
  std::pair<MultiIndex, MultiIndex> split(const MultiIndex& b) const;
  ModulePtr left_;
  ModulePtr right_;
  std::vector<MultiIndex> basis_;
};

// [g, h] = bracket on every basis vector, for all window generators; overflowing cases are skipped.
CheckResult check_representation(const HeisenbergModule& m);
// e_{+-k} shifts degree by +-k and zeta_grade by +-1 at its pair.
CheckResult check_grading_shift(const HeisenbergModule& m);

}  // namespace loopmod
