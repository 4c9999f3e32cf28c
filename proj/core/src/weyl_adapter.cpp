#include "loopmod/weyl_adapter.hpp"

#include <algorithm>

#include "loopmod/errors.hpp"

namespace loopmod {

namespace {

HeisenbergKind default_kind(const SOPModule& sop) {
  return sop.p().is_finite() ? HeisenbergKind::H_n(*sop.p().n()) : HeisenbergKind::H_infinity();
}

}  // namespace

WeylHeisenbergModule::WeylHeisenbergModule(SOPModule sop) : WeylHeisenbergModule(sop, default_kind(sop)) {}

WeylHeisenbergModule::WeylHeisenbergModule(SOPModule sop, HeisenbergKind kind)
    : sop_(std::move(sop)), kind_(std::move(kind)) {
  for (int i : sop_.active()) {
    if (kind_.multiplicity(i) != 1)
      throw InvalidArgument("Weyl realization needs one-dimensional pairs, index " + std::to_string(i));
  }
  for (const auto& q : sop_.basis()) basis_.push_back(label_of(q));
  std::sort(basis_.begin(), basis_.end());
}

int WeylHeisenbergModule::window_bound() const { return sop_.active().empty() ? 0 : sop_.active().back(); }

Label WeylHeisenbergModule::label_for_coord(int i) const {
  if (kind_.is_L()) return IndexPair{i, 1};
  return i;
}

bool WeylHeisenbergModule::handles_pair(const Label& pair) const {
  if (!kind_.valid_pair_label(pair)) return false;
  const int i = label_degree(pair);
  return std::find(sop_.active().begin(), sop_.active().end(), i) != sop_.active().end();
}

std::int64_t WeylHeisenbergModule::degree(const MultiIndex& b) const { return -z_degree(b); }

MultiIndex WeylHeisenbergModule::label_of(const WeightPoint& q) const {
  MultiIndex m;
  for (const auto& [i, g] : sop_.offsets(q)) m = m.with(label_for_coord(i), g);
  return m;
}

WeightPoint WeylHeisenbergModule::point_of(const MultiIndex& b) const {
  std::map<int, std::int64_t> gamma;
  for (const auto& [l, g] : b.entries()) gamma[label_degree(l)] = g;
  return sop_.point_at(gamma);
}

Vec WeylHeisenbergModule::act_noncentral(const HGen& g, const MultiIndex& b) const {
  const int i = std::abs(g.k);
  const bool raising = g.k > 0;
  const WeylGen wg{raising ? WeylGen::Type::D : WeylGen::Type::X, i};
  const Scalar scale = (!raising && kind_.is_L()) ? Scalar(i) : Scalar(1);
  Vec out;
  for (const auto& [q, c] : act_weyl(sop_, wg, point_of(b))) out.add(label_of(q), c * scale);
  return out;
}

}  // namespace loopmod
