#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "loopmod/heisenberg_module.hpp"
#include "loopmod/phi_function.hpp"
#include "loopmod/truncation.hpp"

namespace loopmod {

// M_phi(a) = U(L) (x)_{U(L_phi^+ + Cc)} C v. Basis y(k) v where y_p is the creating
// generator of pair p and k ranges over multi-indices within the truncation.
class PhiVermaModule : public HeisenbergModule {
 public:
  // `pairs_filter` restricts the module to a subset of pair indices |k| (used for
  // tensor factors); empty means all.
  PhiVermaModule(HeisenbergKind kind, PhiFunction phi, Scalar a, Truncation trunc,
                 std::set<int> pairs_filter = {});

  const HeisenbergKind& kind() const override { return kind_; }
  const Scalar& level() const override { return a_; }
  const std::vector<MultiIndex>& basis() const override { return basis_; }
  int window_bound() const override { return trunc_.max_delta_degree; }
  bool handles_pair(const Label& pair) const override;
  std::int64_t degree(const MultiIndex& b) const override;
  MultiIndex zeta_grade(const MultiIndex& b) const override;
  std::string describe() const override;

  const PhiFunction& phi() const { return phi_; }
  const Truncation& truncation() const { return trunc_; }

  // Creating generator y_p and annihilating partner x_p of a pair.
  HGen creator(const Label& pair) const;
  HGen annihilator(const Label& pair) const;
  // [x_p, y_p] = dual_scale(p) * c; x_p / dual_scale(p) is the dual basis element.
  Scalar dual_scale(const Label& pair) const;

  std::map<std::int64_t, std::size_t> graded_dimensions() const;

 protected:
  Vec act_noncentral(const HGen& g, const MultiIndex& b) const override;

 private:
  HeisenbergKind kind_;
  PhiFunction phi_;
  Scalar a_;
  Truncation trunc_;
  std::set<int> filter_;
  std::vector<MultiIndex> basis_;
};

PhiVermaModule build_phi_verma(const HeisenbergKind& kind, const PhiFunction& phi, const Scalar& a,
                               const Truncation& trunc);

struct HighestReduction {
  MultiIndex m_bar;  // largest tuple in the support under multiindex_compare
  Scalar coefficient;  // x(m_bar) w = coefficient * v, x taken in the dual normalization
};

// Throws InvalidArgument for w = 0 and LevelZero for a = 0.
HighestReduction reduce_to_highest(const PhiVermaModule& m, const Vec& w);

// For a = 0: the span of all y(k) v with k != 0, returned as basis labels.
// Throws InvalidArgument unless a = 0.
std::vector<MultiIndex> proper_submodule_at_level_zero(const PhiVermaModule& m);

// Every window generator keeps `labels` inside their span (overflow cases skipped).
CheckResult check_closed_subspace(const HeisenbergModule& m, const std::vector<MultiIndex>& labels);

// Window generators that kill v.
std::set<HGen> annihilator_of_vacuum(const HeisenbergModule& m);

}  // namespace loopmod
