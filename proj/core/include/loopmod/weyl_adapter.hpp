#pragma once

#include "loopmod/heisenberg_module.hpp"
#include "loopmod/weyl.hpp"

namespace loopmod {

// S(O, p) viewed as a Heisenberg module through e_i -> d_i, e_{-i} -> x_i.
// For an L-kind with one-dimensional imaginary spaces, x_{k,1} -> d_k and
// x_{-k,1} -> k x_k, so [x_{k,1}, x_{-k,1}] = k c holds with c = a.
// Labels are the offsets gamma of a point from p.
class WeylHeisenbergModule : public HeisenbergModule {
 public:
  WeylHeisenbergModule(SOPModule sop, HeisenbergKind kind);
  // H_n for finite points, H for infinite ones.
  explicit WeylHeisenbergModule(SOPModule sop);

  const HeisenbergKind& kind() const override { return kind_; }
  const Scalar& level() const override { return sop_.level(); }
  const std::vector<MultiIndex>& basis() const override { return basis_; }
  int window_bound() const override;
  bool handles_pair(const Label& pair) const override;
  std::int64_t degree(const MultiIndex& b) const override;
  MultiIndex zeta_grade(const MultiIndex& b) const override { return b.negated(); }
  std::string describe() const override { return sop_.describe(); }

  const SOPModule& sop() const { return sop_; }
  MultiIndex label_of(const WeightPoint& q) const;
  WeightPoint point_of(const MultiIndex& b) const;

 protected:
  Vec act_noncentral(const HGen& g, const MultiIndex& b) const override;

 private:
  Label label_for_coord(int i) const;
  SOPModule sop_;
  HeisenbergKind kind_;
  std::vector<MultiIndex> basis_;
};

}  // namespace loopmod
