#include "loopmod/weyl.hpp"

#include <algorithm>
#include <deque>

#include "loopmod/errors.hpp"

namespace loopmod {

namespace {

bool is_integral_ratio(const Scalar& c, const Scalar& a) { return (c / a).is_integer(); }

Scalar reduce_mod_a(const Scalar& c, const Scalar& a) {
  const Scalar q = c / a;
  if (q.is_integer()) return Scalar(0);
  return (q - q.floor()) * a;
}

}  // namespace

WeightPoint WeightPoint::finite(Scalar a, const std::vector<Scalar>& coords) {
  if (a.is_zero()) throw LevelZero("weight point needs a nonzero level");
  if (coords.empty()) throw InvalidArgument("finite weight point needs n >= 1");
  WeightPoint p;
  p.n_ = static_cast<int>(coords.size());
  p.a_ = std::move(a);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) p.coords_[static_cast<int>(i) + 1] = coords[i];
  return p;
}

WeightPoint WeightPoint::infinite(Scalar a, const std::map<int, Scalar>& coords, Scalar default_value) {
  if (a.is_zero()) throw LevelZero("weight point needs a nonzero level");
  WeightPoint p;
  p.a_ = std::move(a);
  p.default_ = std::move(default_value);
  for (const auto& [i, v] : coords) p = p.with_coord(i, v);
  return p;
}

void WeightPoint::check_index(int i) const {
  if (i < 1 || (n_ && i > *n_)) throw InvalidArgument("coordinate out of range: " + std::to_string(i));
}

Scalar WeightPoint::coord(int i) const {
  check_index(i);
  auto it = coords_.find(i);
  return it == coords_.end() ? default_ : it->second;
}

WeightPoint WeightPoint::with_coord(int i, const Scalar& v) const {
  check_index(i);
  WeightPoint p = *this;
  if (v == default_)
    p.coords_.erase(i);
  else
    p.coords_[i] = v;
  return p;
}

WeightPoint WeightPoint::with_default(const Scalar& v) const {
  WeightPoint p = *this;
  p.default_ = v;
  p.coords_.clear();
  for (const auto& [i, c] : coords_)
    if (c != v) p.coords_[i] = c;
  return p;
}

std::string WeightPoint::str() const {
  std::string s = "(";
  if (n_) {
    for (int i = 1; i <= *n_; ++i) s += (i > 1 ? "," : "") + coord(i).str();
  } else {
    bool first = true;
    for (const auto& [i, c] : coords_) {
      s += (first ? "" : ",") + std::to_string(i) + ":" + c.str();
      first = false;
    }
    s += std::string(first ? "" : ",") + "*:" + default_.str();
  }
  return s + ")";
}

WeightPoint sigma_shift(const WeightPoint& p, int i, std::int64_t exp) {
  return p.with_coord(i, p.coord(i) + Scalar(exp) * p.level());
}

std::vector<int> active_coords(const WeightPoint& p, const CoordWindow& w) {
  const int count = p.is_finite() ? *p.n() : w.coords;
  std::vector<int> out;
  for (int i = 1; i <= count; ++i) out.push_back(i);
  return out;
}

std::set<int> breaks(const WeightPoint& p, const CoordWindow& w) {
  std::set<int> out;
  for (int i : active_coords(p, w))
    if (p.coord(i).is_zero()) out.insert(i);
  return out;
}

OrbitDescriptor analyze_orbit(const WeightPoint& p, const CoordWindow& w) {
  if (w.coords < 1 || w.radius < 0) throw InvalidArgument("bad coordinate window");
  OrbitDescriptor d;
  d.representative = p;
  d.window = w;
  const Scalar& a = p.level();
  for (int i : active_coords(p, w))
    if (is_integral_ratio(p.coord(i), a)) d.degenerate.insert(i);
  WeightPoint m = p;
  if (!p.is_finite()) {
    d.default_degenerate = is_integral_ratio(p.default_value(), a);
    m = m.with_default(reduce_mod_a(p.default_value(), a));
  }
  for (const auto& [i, c] : p.listed()) m = m.with_coord(i, reduce_mod_a(c, a));
  d.maximal_break = m;
  return d;
}

std::vector<WeightPoint> enumerate_B_O(const OrbitDescriptor& d) {
  if (!d.maximal_break) throw NotAdmissible("orbit has no maximal break");
  std::vector<WeightPoint> out{*d.maximal_break};
  for (int j : d.degenerate) {
    const std::size_t n = out.size();
    for (std::size_t t = 0; t < n; ++t) out.push_back(sigma_shift(out[t], j, 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SOPModule::SOPModule(OrbitDescriptor orbit, WeightPoint p) : orbit_(std::move(orbit)), p_(std::move(p)) {
  if (!orbit_.maximal_break) throw NotAdmissible("orbit has no maximal break");
  const WeightPoint& m = *orbit_.maximal_break;
  active_ = active_coords(m, orbit_.window);
  const Scalar& a = m.level();
  if (p_.level() != a || p_.n() != m.n()) throw InvalidArgument("point " + p_.str() + " is not in B_O");
  for (int j : active_) {
    const Scalar diff = (p_.coord(j) - m.coord(j)) / a;
    if (orbit_.degenerate.count(j)) {
      if (diff != Scalar(0) && diff != Scalar(1)) throw InvalidArgument("point " + p_.str() + " is not in B_O");
      delta_[j] = static_cast<int>(diff.to_int());
    } else if (!diff.is_zero()) {
      throw InvalidArgument("point " + p_.str() + " is not in B_O");
    }
  }
  if (!p_.is_finite()) {
    // Coordinates beyond the window are fixed and must agree with the maximal break.
    if (p_.default_value() != m.default_value()) throw InvalidArgument("point " + p_.str() + " is not in B_O");
    for (const auto* src : {&p_.listed(), &m.listed()})
      for (const auto& [i, c] : *src) {
        (void)c;
        if (i > orbit_.window.coords && p_.coord(i) != m.coord(i))
          throw InvalidArgument("point " + p_.str() + " is not in B_O");
      }
  }
  // Enumerate gamma over the product of per-coordinate ranges.
  const int r = orbit_.window.radius;
  std::vector<std::vector<std::int64_t>> ranges;
  for (int j : active_) {
    std::vector<std::int64_t> vals;
    if (auto it = delta_.find(j); it != delta_.end()) {
      const int sgn = it->second == 1 ? 1 : -1;
      for (int k = 0; k <= r; ++k) vals.push_back(sgn * k);
    } else {
      for (int k = -r; k <= r; ++k) vals.push_back(k);
    }
    ranges.push_back(std::move(vals));
  }
  std::vector<std::size_t> idx(ranges.size(), 0);
  while (true) {
    std::map<int, std::int64_t> gamma;
    for (std::size_t t = 0; t < ranges.size(); ++t) gamma[active_[t]] = ranges[t][idx[t]];
    basis_.push_back(point_at(gamma));
    std::size_t t = 0;
    while (t < idx.size() && ++idx[t] == ranges[t].size()) idx[t++] = 0;
    if (t == idx.size()) break;
  }
  std::sort(basis_.begin(), basis_.end());
}

std::map<int, std::int64_t> SOPModule::offsets(const WeightPoint& q) const {
  std::map<int, std::int64_t> gamma;
  for (int j : active_) {
    const Scalar g = (q.coord(j) - p_.coord(j)) / p_.level();
    if (!g.is_integer()) throw InvalidArgument(q.str() + " is not in the orbit of " + p_.str());
    gamma[j] = g.to_int();
  }
  return gamma;
}

WeightPoint SOPModule::point_at(const std::map<int, std::int64_t>& gamma) const {
  WeightPoint q = p_;
  for (const auto& [j, g] : gamma) q = sigma_shift(q, j, g);
  return q;
}

bool SOPModule::in_support(const WeightPoint& q) const {
  if (q.level() != p_.level() || q.n() != p_.n()) return false;
  if (!q.is_finite()) {
    if (q.default_value() != p_.default_value()) return false;
    for (const auto* src : {&q.listed(), &p_.listed()})
      for (const auto& [i, c] : *src) {
        (void)c;
        if (i > orbit_.window.coords && q.coord(i) != p_.coord(i)) return false;
      }
  }
  for (int j : active_) {
    const Scalar g = (q.coord(j) - p_.coord(j)) / p_.level();
    if (!g.is_integer()) return false;
    if (auto it = delta_.find(j); it != delta_.end()) {
      if (it->second == 1 ? g.sign() < 0 : g.sign() > 0) return false;
    }
  }
  return true;
}

bool SOPModule::in_window(const WeightPoint& q) const {
  for (const auto& [j, g] : offsets(q))
    if (g > orbit_.window.radius || g < -orbit_.window.radius) return false;
  return true;
}

std::string SOPModule::describe() const { return "S(O, " + p_.str() + ")"; }

std::vector<WeightPoint> support_O_p(const OrbitDescriptor& d, const WeightPoint& p) {
  return SOPModule(d, p).basis();
}

std::string WeylGen::str() const { return (type == Type::X ? "x" : "d") + std::to_string(i); }

LinComb<WeightPoint> act_weyl(const SOPModule& m, const WeylGen& g, const WeightPoint& q) {
  if (std::find(m.active().begin(), m.active().end(), g.i) == m.active().end())
    throw InvalidArgument("generator " + g.str() + " outside the active coordinates");
  if (!m.in_support(q)) throw InvalidArgument(q.str() + " is not a basis point of " + m.describe());
  const Scalar& a = m.level();
  WeightPoint target;
  Scalar coeff(1);
  if (g.type == WeylGen::Type::X) {
    target = sigma_shift(q, g.i, 1);
  } else {
    target = sigma_shift(q, g.i, -1);
    coeff = q.coord(g.i) - a;
  }
  if (coeff.is_zero() || !m.in_support(target)) return {};
  if (!m.in_window(target)) throw TruncationOverflow(g.str() + " on " + q.str() + " leaves the window");
  return LinComb<WeightPoint>(target, coeff);
}

LinComb<WeightPoint> act_weyl(const SOPModule& m, const WeylGen& g, const LinComb<WeightPoint>& w) {
  LinComb<WeightPoint> out;
  for (const auto& [q, c] : w) out.add(act_weyl(m, g, q), c);
  return out;
}

std::vector<SOPModule> classify(const OrbitDescriptor& d) {
  if (!d.maximal_break) throw NotAdmissible("orbit has no maximal break");
  std::vector<SOPModule> out;
  for (const auto& p : enumerate_B_O(d)) out.emplace_back(d, p);
  return out;
}

namespace {

std::vector<WeylGen> all_gens(const SOPModule& m) {
  std::vector<WeylGen> g;
  for (int i : m.active()) {
    g.push_back({WeylGen::Type::X, i});
    g.push_back({WeylGen::Type::D, i});
  }
  return g;
}

}  // namespace

CheckResult check_weyl_relations(const SOPModule& m) {
  CheckResult res{"Weyl relations on " + m.describe()};
  const auto gens = all_gens(m);
  for (const auto& q : m.basis()) {
    for (const auto& g : gens) {
      for (const auto& h : gens) {
        try {
          const LinComb<WeightPoint> v(q);
          const auto lhs = act_weyl(m, g, act_weyl(m, h, v)) - act_weyl(m, h, act_weyl(m, g, v));
          LinComb<WeightPoint> rhs;
          // [d_i, x_i] = a; every other pair commutes.
          if (g.i == h.i && g.type != h.type) rhs.add(q, g.type == WeylGen::Type::D ? m.level() : -m.level());
          ++res.cases;
          if (!(lhs == rhs)) res.fail("[" + g.str() + "," + h.str() + "] on " + q.str());
        } catch (const TruncationOverflow&) {
          ++res.skipped;
        }
      }
    }
  }
  return res;
}

CheckResult check_weight_propagation(const SOPModule& m) {
  CheckResult res{"weight propagation on " + m.describe()};
  const Scalar& a = m.level();
  for (const auto& q : m.basis()) {
    for (const auto& g : all_gens(m)) {
      try {
        const auto img = act_weyl(m, g, q);
        ++res.cases;
        for (const auto& [t, c] : img) {
          (void)c;
          const Scalar want = q.coord(g.i) + (g.type == WeylGen::Type::X ? a : -a);
          if (t.coord(g.i) != want) res.fail(g.str() + " on " + q.str() + " lands at " + t.str());
        }
        if (g.type == WeylGen::Type::X) {
          // t_i = d_i x_i acts by c_i; at the edge of a cone x_i q may vanish while c_i = 0.
          const auto t = act_weyl(m, {WeylGen::Type::D, g.i}, img);
          const auto expect = LinComb<WeightPoint>(q, q.coord(g.i));
          if (!img.is_zero() && !(t == expect)) res.fail("t" + std::to_string(g.i) + " on " + q.str());
          if (img.is_zero() && !q.coord(g.i).is_zero())
            res.fail("x" + std::to_string(g.i) + " kills " + q.str() + " but c_i != 0");
        }
      } catch (const TruncationOverflow&) {
        ++res.skipped;
      }
    }
  }
  return res;
}

CheckResult check_window_irreducible(const SOPModule& m) {
  CheckResult res{"window irreducibility of " + m.describe()};
  const auto& pts = m.basis();
  if (pts.empty()) return res;
  // Moves are reversible inside the window, so one BFS covers strong connectivity
  // once every edge is confirmed to have a nonzero reverse.
  std::set<WeightPoint> seen{pts.front()};
  std::deque<WeightPoint> queue{pts.front()};
  while (!queue.empty()) {
    const WeightPoint q = queue.front();
    queue.pop_front();
    for (const auto& g : all_gens(m)) {
      try {
        for (const auto& [t, c] : act_weyl(m, g, q)) {
          (void)c;
          ++res.cases;
          const WeylGen back{g.type == WeylGen::Type::X ? WeylGen::Type::D : WeylGen::Type::X, g.i};
          if (act_weyl(m, back, t).is_zero()) res.fail(g.str() + " from " + q.str() + " cannot be reversed");
          if (seen.insert(t).second) queue.push_back(t);
        }
      } catch (const TruncationOverflow&) {
        ++res.skipped;
      }
    }
  }
  if (seen.size() != pts.size())
    res.fail("reached " + std::to_string(seen.size()) + " of " + std::to_string(pts.size()) + " points");
  return res;
}

CheckResult check_disjoint_supports(const std::vector<SOPModule>& classes) {
  CheckResult res{"disjoint supports"};
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      ++res.cases;
      for (const auto& q : classes[i].basis())
        if (classes[j].in_support(q)) {
          res.fail(q.str() + " lies in both " + classes[i].describe() + " and " + classes[j].describe());
          break;
        }
    }
  return res;
}

}  // namespace loopmod
