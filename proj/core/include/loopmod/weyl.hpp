#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loopmod/check.hpp"
#include "loopmod/lin_comb.hpp"
#include "loopmod/scalar.hpp"

namespace loopmod {

// A maximal ideal of C[t_1, t_2, ...] given by the values c_i of t_i, together
// with the level a of [d_i, x_i] = a. Infinite points carry a default value for
// every coordinate not listed.
class WeightPoint {
 public:
  WeightPoint() = default;
  static WeightPoint finite(Scalar a, const std::vector<Scalar>& coords);
  static WeightPoint infinite(Scalar a, const std::map<int, Scalar>& coords, Scalar default_value);

  bool is_finite() const { return n_.has_value(); }
  std::optional<int> n() const { return n_; }
  const Scalar& level() const { return a_; }
  const Scalar& default_value() const { return default_; }
  // Entries that differ from the default.
  const std::map<int, Scalar>& listed() const { return coords_; }
  Scalar coord(int i) const;
  WeightPoint with_coord(int i, const Scalar& v) const;
  WeightPoint with_default(const Scalar& v) const;
  std::string str() const;

  friend auto operator<=>(const WeightPoint&, const WeightPoint&) = default;
  friend bool operator==(const WeightPoint&, const WeightPoint&) = default;

 private:
  void check_index(int i) const;
  std::optional<int> n_;
  Scalar a_{1};
  std::map<int, Scalar> coords_;
  Scalar default_{0};
};

// Coordinates 1..coords are active for infinite points (all coordinates for
// finite ones); offsets along each active coordinate are bounded by radius.
struct CoordWindow {
  int coords = 3;
  int radius = 3;
};

// c_i -> c_i + exp * a. This is the direction x_i moves weights: t_i x_i = x_i (t_i + a).
WeightPoint sigma_shift(const WeightPoint& p, int i, std::int64_t exp);

std::vector<int> active_coords(const WeightPoint& p, const CoordWindow& w);

// {i active : c_i = 0}.
std::set<int> breaks(const WeightPoint& p, const CoordWindow& w);

struct OrbitDescriptor {
  WeightPoint representative;
  CoordWindow window;
  std::set<int> degenerate;       // active i with c_i / a integral
  bool default_degenerate = false;  // all unlisted coordinates are degenerate too
  std::optional<WeightPoint> maximal_break;  // canonical point of the orbit

  bool is_degenerate() const { return !degenerate.empty() || default_degenerate; }
};

// Degenerate coordinates go to 0; the others are reduced so that c_i / a lies in [0, 1).
OrbitDescriptor analyze_orbit(const WeightPoint& p, const CoordWindow& w);

// sigma^delta(m) for delta in {0,1}^I; throws NotAdmissible without a maximal break.
std::vector<WeightPoint> enumerate_B_O(const OrbitDescriptor& d);

// The weight module S(O, p) restricted to a window; S(O) when O is nondegenerate.
class SOPModule {
 public:
  SOPModule(OrbitDescriptor orbit, WeightPoint p);

  const OrbitDescriptor& orbit() const { return orbit_; }
  const WeightPoint& p() const { return p_; }
  const Scalar& level() const { return p_.level(); }
  const std::vector<int>& active() const { return active_; }
  // delta_j in {0, 1} for each degenerate active coordinate.
  const std::map<int, int>& delta() const { return delta_; }
  // Points of O_p in the window, sorted.
  const std::vector<WeightPoint>& basis() const { return basis_; }

  bool in_support(const WeightPoint& q) const;
  bool in_window(const WeightPoint& q) const;
  // gamma with q = sigma^gamma(p); only defined for points of the orbit.
  std::map<int, std::int64_t> offsets(const WeightPoint& q) const;
  WeightPoint point_at(const std::map<int, std::int64_t>& gamma) const;
  std::string describe() const;

 private:
  OrbitDescriptor orbit_;
  WeightPoint p_;
  std::vector<int> active_;
  std::map<int, int> delta_;
  std::vector<WeightPoint> basis_;
};

// support_O_p as a list of window points; throws InvalidArgument when p is not in B_O.
std::vector<WeightPoint> support_O_p(const OrbitDescriptor& d, const WeightPoint& p);

struct WeylGen {
  enum class Type { X, D };
  Type type = Type::X;
  int i = 1;
  std::string str() const;
  friend auto operator<=>(const WeylGen&, const WeylGen&) = default;
};

// x_i(1 + n) = 1 + sigma_i(n); d_i(1 + n) = (c_i(n) - a)(1 + sigma_i^{-1}(n)).
// Targets outside O_p give 0, targets outside the window overflow.
LinComb<WeightPoint> act_weyl(const SOPModule& m, const WeylGen& g, const WeightPoint& q);
LinComb<WeightPoint> act_weyl(const SOPModule& m, const WeylGen& g, const LinComb<WeightPoint>& w);

// One module for a nondegenerate orbit, 2^s for s degenerate active coordinates.
std::vector<SOPModule> classify(const OrbitDescriptor& d);

CheckResult check_weyl_relations(const SOPModule& m);
// x_i moves t-weights by +a at i, d_i by -a, and t_i = d_i x_i acts by c_i.
CheckResult check_weight_propagation(const SOPModule& m);
// Every window point reaches every other through nonzero generator moves.
CheckResult check_window_irreducible(const SOPModule& m);
CheckResult check_disjoint_supports(const std::vector<SOPModule>& classes);

}  // namespace loopmod
