// Acceptance runner: one PASS/FAIL line per criterion. Exit status is nonzero when
// any criterion fails. Pass criterion numbers as arguments to run a subset.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loopmod/loopmod.hpp"
#include "oracles.hpp"

using namespace loopmod;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  void absorb(const CheckResult& r) {
    cases += r.cases;
    skipped += r.skipped;
    if (!r.passed && failures.size() < 5) failures.push_back(r.name + ": " + r.witness);
  }
  bool ok() const { return failures.empty(); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const AffineType kA1 = parse_affine_type("A_1^(1)");
const AffineType kA2 = parse_affine_type("A_2^(1)");

PhiFunction mixed_phi() { return PhiFunction::periodic({Sign::Plus, Sign::Minus}); }

// ---------------------------------------------------------------------------
// 1. Bracket laws

// Defining relations, computed independently of the library bracket table.
LinComb<HGen> expected_heisenberg(const HGen& x, const HGen& y) {
  LinComb<HGen> out;
  if (x.is_central() || y.is_central()) return out;
  if (x.type == HGen::Type::E && x.k == -y.k) out.add(HGen::c(), Scalar(x.k > 0 ? 1 : -1));
  if (x.type == HGen::Type::X && x.k == -y.k && x.i == y.i) out.add(HGen::c(), Scalar(x.k));
  return out;
}

Tally criterion_1() {
  Tally t;
  const auto t0 = Clock::now();
  const std::vector<HeisenbergKind> kinds = {HeisenbergKind::H_infinity(), HeisenbergKind::H_n(5),
                                             HeisenbergKind::L(kA1), HeisenbergKind::L(kA2),
                                             HeisenbergKind::L(parse_affine_type("A_2^(2)"))};
  for (const auto& kind : kinds) {
    const auto gens = window_generators(kind, 5);
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const auto xy = bracket(kind, x, y);
        t.expect(xy == expected_heisenberg(x, y), kind.str() + " [" + x.str() + "," + y.str() + "]");
        t.expect((xy + bracket(kind, y, x)).is_zero(), "antisymmetry " + x.str() + "," + y.str());
        for (const auto& z : gens) {
          const LinComb<HGen> X(x), Y(y), Z(z);
          const auto j = bracket(kind, X, bracket(kind, Y, Z)) + bracket(kind, Y, bracket(kind, Z, X)) +
                         bracket(kind, Z, bracket(kind, X, Y));
          t.expect(j.is_zero(), "Jacobi " + x.str() + "," + y.str() + "," + z.str());
        }
      }
  }
  const LoopAlgebra g(kA1);
  const auto basis = g.window_basis(3);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const auto lib = oracle::sl2_from(g.bracket(x, y));
      const auto ref = oracle::sl2_bracket(oracle::sl2_element(x), oracle::sl2_element(y));
      t.expect(lib == ref, "sl2-hat [" + x.str() + "," + y.str() + "] differs from the matrix model");
    }
  t.absorb(check_affine_antisymmetry(g, 3));
  t.absorb(check_affine_jacobi(g, 3));
  const double s = seconds_since(t0);
  t.expect(s < 10.0, "runtime " + std::to_string(s) + " s exceeds 10 s");
  return t;
}

// ---------------------------------------------------------------------------
// 2. phi-Verma straightening

std::vector<std::int64_t> dense(const MultiIndex& m, const std::vector<Label>& pairs) {
  std::vector<std::int64_t> out;
  for (const auto& p : pairs) out.push_back(m.get(p));
  return out;
}

Scalar factorial_product(const MultiIndex& m) {
  Scalar out(1);
  for (const auto& [l, e] : m.entries()) {
    (void)l;
    for (std::int64_t i = 2; i <= e; ++i) out *= Scalar(i);
  }
  return out;
}

Scalar random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::bernoulli_distribution neg(0.5);
  const Scalar s = Scalar(num(rng)) / Scalar(den(rng));
  return neg(rng) ? -s : s;
}

Tally criterion_2() {
  Tally t;
  std::mt19937_64 rng(2);
  struct Case {
    HeisenbergKind kind;
    PhiFunction phi;
    Scalar a;
    Truncation trunc;
  };
  const std::vector<Case> cases = {
      {HeisenbergKind::H_infinity(), mixed_phi(), Scalar(3) / Scalar(2), make_truncation(3, 6, 0, 6)},
      {HeisenbergKind::H_n(2), PhiFunction::constant(Sign::Minus), Scalar(-2), make_truncation(2, 6, 0, 6)},
      {HeisenbergKind::L(kA2), mixed_phi(), Scalar(5) / Scalar(7), make_truncation(2, 6, 0, 6)},
  };
  for (const auto& c : cases) {
    const auto m = build_phi_verma(c.kind, c.phi, c.a, c.trunc);
    const auto pairs = c.kind.pair_labels(c.trunc.max_delta_degree);  // ascending labels
    auto oracle_coeff = [&](const MultiIndex& mbar, const Scalar& xi) {
      return xi * factorial_product(mbar) * pow(c.a, mbar.total());
    };
    for (const auto& b : m.basis()) {
      const Scalar xi = random_nonzero(rng);
      const auto r = reduce_to_highest(m, Vec(b, xi));
      t.expect(r.m_bar == b && r.coefficient == oracle_coeff(b, xi), "monomial " + b.str() + " in " + m.describe());
    }
    std::uniform_int_distribution<std::size_t> pick(0, m.basis().size() - 1);
    std::uniform_int_distribution<int> terms(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      Vec w;
      const int n = terms(rng);
      for (int i = 0; i < n; ++i) w.add(m.basis()[pick(rng)], random_nonzero(rng));
      if (w.is_zero()) continue;
      // The highest label in tuple order, by comparing dense exponent vectors.
      MultiIndex top = w.begin()->first;
      for (const auto& [l, coeff] : w) {
        (void)coeff;
        if (dense(l, pairs) > dense(top, pairs)) top = l;
      }
      const auto r = reduce_to_highest(m, w);
      t.expect(r.m_bar == top && r.coefficient == oracle_coeff(top, w.coefficient(top)),
               "random combination #" + std::to_string(trial) + " in " + m.describe());
    }
  }
  // a = 0: the span of the non-vacuum monomials is a proper submodule.
  const auto m0 = build_phi_verma(HeisenbergKind::H_infinity(), mixed_phi(), Scalar(0), make_truncation(3, 3, 0, 3));
  const auto N = proper_submodule_at_level_zero(m0);
  const std::set<MultiIndex> Nset(N.begin(), N.end());
  t.expect(!Nset.empty() && !Nset.count(MultiIndex{}), "N must be nonzero and miss v");
  t.expect(Nset.size() + 1 == m0.basis().size(), "N must be spanned by all y(k) v with k != 0");
  for (const auto& b : N)
    for (const auto& g : m0.window_gens()) {
      try {
        for (const auto& [l, coeff] : m0.act(g, b)) {
          (void)coeff;
          t.expect(Nset.count(l) > 0, g.str() + " moves " + b.str() + " out of N");
        }
      } catch (const TruncationOverflow&) {
        ++t.skipped;
      }
    }
  t.absorb(check_closed_subspace(m0, N));
  return t;
}

// ---------------------------------------------------------------------------
// 3. Graded dimensions

Tally criterion_3() {
  Tally t;
  const auto p = oracle::partition_numbers(10);
  const auto p2 = oracle::partition_numbers_pentagonal(10);
  t.expect(p == p2, "partition oracles disagree");
  for (const auto& kind : {HeisenbergKind::H_infinity(), HeisenbergKind::L(kA1)})
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto m = build_phi_verma(kind, PhiFunction::constant(s), Scalar(1), make_truncation(10, 10, 0, 10));
      const auto dims = m.graded_dimensions();
      for (int n = 0; n <= 10; ++n) {
        const std::int64_t deg = s == Sign::Plus ? -n : n;
        const auto it = dims.find(deg);
        const std::size_t got = it == dims.end() ? 0 : it->second;
        t.expect(got == p[n], kind.str() + " degree " + std::to_string(deg) + ": " + std::to_string(got) +
                                  " != p(" + std::to_string(n) + ") = " + std::to_string(p[n]));
      }
    }
  // Mixed phi: every window degree of the smaller truncation grows strictly.
  for (const auto& kind : {HeisenbergKind::H_infinity(), HeisenbergKind::L(kA1)}) {
    const Truncation small = make_truncation(3, 2, 0, 3);
    const Truncation large = make_truncation(4, 3, 0, 4);
    const auto d1 = build_phi_verma(kind, mixed_phi(), Scalar(1), small).graded_dimensions();
    const auto d2 = build_phi_verma(kind, mixed_phi(), Scalar(1), large).graded_dimensions();
    for (int n = -small.max_delta_degree; n <= small.max_delta_degree; ++n) {
      const std::size_t a = d1.count(n) ? d1.at(n) : 0;
      const std::size_t b = d2.count(n) ? d2.at(n) : 0;
      t.expect(a > 0 && b > a, kind.str() + " mixed degree " + std::to_string(n) + ": " + std::to_string(a) +
                                   " -> " + std::to_string(b));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// 4 and 8 share the list of diagonal modules.

struct DiagonalCase {
  std::string name;
  ModulePtr module;
  int max_exponent;
};

std::vector<DiagonalCase> diagonal_modules() {
  std::vector<DiagonalCase> out;
  auto add = [&](ModulePtr m, int e) { out.push_back({m->describe(), std::move(m), e}); };
  const Truncation tr = make_truncation(3, 3, 0, 4);
  add(std::make_shared<DiagonalRealization>(HeisenbergKind::H_n(3), std::set<int>{1, 3},
                                            std::map<Label, Scalar>{{1, Scalar(1) / Scalar(3)}, {3, Scalar(-5) / Scalar(2)}},
                                            Scalar(2), tr),
      3);
  add(std::make_shared<DiagonalRealization>(HeisenbergKind::H_infinity(), std::set<int>{2},
                                            std::map<Label, Scalar>{{2, Scalar(4)}}, Scalar(2), tr,
                                            std::map<Label, Sign>{{2, Sign::Minus}}),
      3);
  add(std::make_shared<DiagonalRealization>(
          HeisenbergKind::L(kA1), std::set<int>{1, 2},
          std::map<Label, Scalar>{{IndexPair{1, 1}, Scalar(7) / Scalar(5)}, {IndexPair{2, 1}, Scalar(3)}}, Scalar(1),
          make_truncation(2, 3, 0, 4)),
      3);
  add(std::make_shared<DiagonalRealization>(
          HeisenbergKind::L(kA2), std::set<int>{1},
          std::map<Label, Scalar>{{IndexPair{1, 1}, Scalar(1) / Scalar(2)}, {IndexPair{1, 2}, Scalar(-2)}},
          Scalar(-1) / Scalar(3), make_truncation(2, 2, 0, 3),
          std::map<Label, Sign>{{IndexPair{1, 2}, Sign::Minus}}),
      2);
  add(std::make_shared<PhiVermaModule>(HeisenbergKind::H_infinity(), mixed_phi(), Scalar(3), tr), 3);
  add(std::make_shared<PhiVermaModule>(HeisenbergKind::L(kA1), mixed_phi(), Scalar(-1) / Scalar(2), tr), 3);
  for (const auto& coords : std::vector<std::vector<Scalar>>{{Scalar(1) / Scalar(2), Scalar(1) / Scalar(3)},
                                                             {Scalar(0), Scalar(1) / Scalar(2)},
                                                             {Scalar(0), Scalar(1)}}) {
    const auto orbit = analyze_orbit(WeightPoint::finite(Scalar(1), coords), CoordWindow{2, 3});
    for (auto& sop : classify(orbit)) add(std::make_shared<WeylHeisenbergModule>(std::move(sop)), 2);
  }
  return out;
}

HGen raising(const Label& pair) { return pair_generator(pair, Sign::Plus); }
HGen lowering(const Label& pair) { return pair_generator(pair, Sign::Minus); }

std::optional<Scalar> multiple_of(const Vec& v, const MultiIndex& b) {
  if (v.is_zero()) return Scalar(0);
  if (v.size() != 1 || !(v.begin()->first == b)) return std::nullopt;
  return v.begin()->second;
}

Tally criterion_4() {
  Tally t;
  for (const auto& c : diagonal_modules()) {
    const auto& m = *c.module;
    for (const auto& b : m.basis())
      for (const auto& pair : m.window_pairs()) {
        const HGen P = raising(pair);
        const HGen M = lowering(pair);
        const Scalar ka = Scalar(m.kind().is_L() ? P.degree() : 1) * m.level();
        Scalar lambda;
        try {
          const auto l = multiple_of(m.act(P, m.act(M, b)), b);
          t.expect(l.has_value(), c.name + ": " + b.str() + " is not an eigenvector of " + P.str() + M.str());
          if (!l) continue;
          lambda = *l;
        } catch (const TruncationOverflow&) {
          ++t.skipped;
          continue;
        }
        Vec prev(b);
        for (int r = 1; r <= c.max_exponent; ++r) {
          try {
            const Vec cur = m.act(P, prev);
            t.expect(m.act(M, cur) == (lambda - Scalar(r) * ka) * prev,
                     c.name + ": lowering ladder r=" + std::to_string(r) + " at " + b.str());
            if (cur.is_zero()) break;
            prev = cur;
          } catch (const TruncationOverflow&) {
            ++t.skipped;
            break;
          }
        }
        prev = Vec(b);
        for (int s = 1; s <= c.max_exponent; ++s) {
          try {
            const Vec cur = m.act(M, prev);
            t.expect(m.act(P, cur) == (lambda + Scalar(s - 1) * ka) * prev,
                     c.name + ": raising ladder s=" + std::to_string(s) + " at " + b.str());
            if (cur.is_zero()) break;
            prev = cur;
          } catch (const TruncationOverflow&) {
            ++t.skipped;
            break;
          }
        }
      }
    t.absorb(check_eigen_ladders(m, c.max_exponent));
  }
  return t;
}

// ---------------------------------------------------------------------------
// 5. Weyl module laws

struct WeylCase {
  WeightPoint point;
  CoordWindow window;
};

std::vector<WeylCase> weyl_cases() {
  const Scalar h = Scalar(1) / Scalar(2);
  const Scalar third = Scalar(1) / Scalar(3);
  return {
      {WeightPoint::finite(Scalar(1), {h, third}), {2, 3}},
      {WeightPoint::finite(Scalar(2), {third, Scalar(2) / Scalar(5), Scalar(1) / Scalar(7)}), {3, 2}},
      {WeightPoint::finite(Scalar(1), {Scalar(0), h}), {2, 3}},
      {WeightPoint::finite(Scalar(1), {Scalar(0), Scalar(0), third}), {3, 2}},
      {WeightPoint::finite(Scalar(2), {Scalar(0), Scalar(2), Scalar(4)}), {3, 2}},
      {WeightPoint::finite(Scalar(-1), {Scalar(3), h}), {2, 3}},
      {WeightPoint::infinite(Scalar(1), {{1, Scalar(0)}}, h), {3, 2}},
  };
}

bool degenerate_coord(const Scalar& c, const Scalar& a) { return (c / a).is_integer(); }

// Side of the cut at a degenerate coordinate: values in a Z_{>=1} versus a Z_{<=0}.
bool upper_side(const Scalar& c, const Scalar& a) { return (c / a) >= Scalar(1); }

Tally criterion_5() {
  Tally t;
  for (const auto& wc : weyl_cases()) {
    const auto orbit = analyze_orbit(wc.point, wc.window);
    for (const auto& m : classify(orbit)) {
      const Scalar a = m.level();
      const auto& p = m.p();
      auto in_oracle_support = [&](const WeightPoint& q) {
        for (int i : m.active())
          if (degenerate_coord(p.coord(i), a) && upper_side(q.coord(i), a) != upper_side(p.coord(i), a)) return false;
        return true;
      };
      for (const auto& q : m.basis()) {
        t.expect(in_oracle_support(q), m.describe() + ": basis point " + q.str() + " outside the cone");
        for (int i : m.active()) {
          const bool deg = degenerate_coord(p.coord(i), a);
          // x_i: weight c -> c + a, killed exactly when it would cross the cut.
          try {
            const auto img = act_weyl(m, {WeylGen::Type::X, i}, q);
            const WeightPoint target = q.with_coord(i, q.coord(i) + a);
            const bool boundary = deg && q.coord(i).is_zero();
            t.expect(boundary ? img.is_zero() : img == LinComb<WeightPoint>(target),
                     m.describe() + ": x" + std::to_string(i) + " on " + q.str());
          } catch (const TruncationOverflow&) {
            ++t.skipped;
          }
          // d_i: weight c -> c - a with coefficient c - a, killed exactly at c = a.
          try {
            const auto img = act_weyl(m, {WeylGen::Type::D, i}, q);
            const WeightPoint target = q.with_coord(i, q.coord(i) - a);
            const bool boundary = deg && q.coord(i) == a;
            t.expect(boundary ? img.is_zero() : img == LinComb<WeightPoint>(target, q.coord(i) - a),
                     m.describe() + ": d" + std::to_string(i) + " on " + q.str());
          } catch (const TruncationOverflow&) {
            ++t.skipped;
          }
          for (int j : m.active()) {
            try {
              const LinComb<WeightPoint> v(q);
              const auto lhs = act_weyl(m, {WeylGen::Type::D, i}, act_weyl(m, {WeylGen::Type::X, j}, v)) -
                               act_weyl(m, {WeylGen::Type::X, j}, act_weyl(m, {WeylGen::Type::D, i}, v));
              t.expect(lhs == (i == j ? a * v : LinComb<WeightPoint>()),
                       m.describe() + ": [d" + std::to_string(i) + ", x" + std::to_string(j) + "] on " + q.str());
            } catch (const TruncationOverflow&) {
              ++t.skipped;
            }
          }
        }
      }
      t.absorb(check_weyl_relations(m));
      t.absorb(check_weight_propagation(m));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// 6. Classification counts

Tally criterion_6() {
  Tally t;
  const Scalar h = Scalar(1) / Scalar(2);
  const Scalar third = Scalar(1) / Scalar(3);
  const Scalar fifth = Scalar(1) / Scalar(5);
  const std::vector<WeightPoint> points = {
      WeightPoint::finite(Scalar(1), {h, third, fifth}),            // s = 0
      WeightPoint::finite(Scalar(1), {Scalar(0), h, third}),        // s = 1
      WeightPoint::finite(Scalar(1), {Scalar(0), Scalar(1), h}),    // s = 2
      WeightPoint::finite(Scalar(1), {Scalar(0), Scalar(1), Scalar(-2)}),
      WeightPoint::finite(Scalar(2), {Scalar(4), Scalar(1), Scalar(3)}),
      WeightPoint::finite(Scalar(3), {Scalar(3), Scalar(-6), Scalar(1)}),
      WeightPoint::finite(Scalar(1), {Scalar(5) / Scalar(2), Scalar(-7) / Scalar(3), Scalar(2)}),
  };
  std::set<int> seen_s;
  for (const auto& pt : points) {
    int s = 0;
    for (int i = 1; i <= 3; ++i) s += degenerate_coord(pt.coord(i), pt.level()) ? 1 : 0;
    seen_s.insert(s);
    const auto classes = classify(analyze_orbit(pt, CoordWindow{3, 2}));
    t.expect(classes.size() == (std::size_t{1} << s),
             pt.str() + ": " + std::to_string(classes.size()) + " classes, expected " + std::to_string(1 << s));
    for (std::size_t x = 0; x < classes.size(); ++x)
      for (std::size_t y = x + 1; y < classes.size(); ++y) {
        const std::set<WeightPoint> A(classes[x].basis().begin(), classes[x].basis().end());
        bool disjoint = true;
        for (const auto& q : classes[y].basis()) disjoint = disjoint && !A.count(q);
        t.expect(disjoint, pt.str() + ": supports of classes " + std::to_string(x) + " and " + std::to_string(y) +
                               " meet");
      }
    t.absorb(check_disjoint_supports(classes));
  }
  t.expect(seen_s == std::set<int>{0, 1, 2, 3}, "s = 0..3 must all be exercised");
  return t;
}

// ---------------------------------------------------------------------------
// 7. Realization criterion

Tally criterion_7() {
  Tally t;
  std::mt19937_64 rng(7);
  const std::vector<HeisenbergKind> kinds = {HeisenbergKind::H_n(2), HeisenbergKind::H_infinity(),
                                             HeisenbergKind::L(kA1), HeisenbergKind::L(kA2)};
  const Truncation tr = make_truncation(2, 3, 0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& kind = kinds[trial % kinds.size()];
    const Scalar a = random_nonzero(rng);
    std::set<int> K;
    std::bernoulli_distribution coin(0.5);
    for (int k = 1; k <= tr.max_delta_degree; ++k)
      if (coin(rng)) K.insert(k);
    if (K.empty()) K.insert(1);
    std::map<Label, Scalar> theta;
    std::map<Label, Sign> y_choice;
    for (const auto& l : kind.pair_labels(tr.max_delta_degree)) {
      if (!K.count(label_degree(l))) continue;
      const Scalar kappa(kind.is_L() ? label_degree(l) : 1);
      Scalar th;
      do th = random_nonzero(rng) + Scalar(std::uniform_int_distribution<int>(-3, 3)(rng));
      while ((th / (kappa * a)).is_integer());
      theta[l] = th;
      y_choice[l] = coin(rng) ? Sign::Plus : Sign::Minus;
    }
    const DiagonalRealization m(kind, K, theta, a, tr, y_choice);
    t.expect(m.irreducible(), "generic theta flagged reducible in trial " + std::to_string(trial));
    t.expect(!singular_witness(m).has_value(), "singular witness for generic theta in trial " + std::to_string(trial));
    for (const auto& c : ladder_coefficients(m))
      t.expect(!c.coefficient.is_zero(), "vanishing coefficient " + c.gen.str() + " on " + c.from.str());
    // Oracle: the generator moving one step toward v has coefficient theta - p k a on
    // x_k^p v and theta + (s - 1) k a on x_{-k}^s v (theta = 0 outside K).
    for (const auto& b : m.basis())
      for (const auto& pair : m.window_pairs()) {
        const std::int64_t e = std::llabs(b.get(pair));
        if (e == 0) continue;
        const HGen P = raising(pair);
        const HGen M = lowering(pair);
        const Scalar ka = Scalar(kind.is_L() ? P.degree() : 1) * a;
        const Scalar th = theta.count(pair) ? theta.at(pair) : Scalar(0);
        auto act_or_empty = [&](const HGen& gen) {
          try {
            return m.act(gen, b);
          } catch (const TruncationOverflow&) {
            return Vec();  // the outward step; never the one toward v
          }
        };
        const Vec viaM = act_or_empty(M);
        const Vec viaP = act_or_empty(P);
        auto smaller = [&](const Vec& v) {
          return v.size() == 1 && std::llabs(v.begin()->first.get(pair)) == e - 1;
        };
        if (smaller(viaM))
          t.expect(viaM.begin()->second == th - Scalar(e) * ka, "x_{-k} coefficient on " + b.str());
        else if (smaller(viaP))
          t.expect(viaP.begin()->second == th + Scalar(e - 1) * ka, "x_k coefficient on " + b.str());
        else
          t.expect(false, "no step toward v from " + b.str() + " at " + label_str(pair));
      }
  }
  // theta = r k a: a singular vector must appear.
  const Truncation wide = make_truncation(2, 4, 0, 4);
  for (const auto& kind : {HeisenbergKind::H_n(2), HeisenbergKind::L(kA1)})
    for (int k : {1, 2})
      for (Sign y : {Sign::Plus, Sign::Minus})
        for (int r = -3; r <= 3; ++r) {
          const Scalar a = Scalar(3) / Scalar(2);
          const Label pair = kind.is_L() ? Label(IndexPair{k, 1}) : Label(k);
          const Scalar kappa(kind.is_L() ? k : 1);
          const DiagonalRealization m(kind, {k}, {{pair, Scalar(r) * kappa * a}}, a, wide, {{pair, y}});
          const auto w = singular_witness(m);
          const std::string tag = kind.str() + " k=" + std::to_string(k) + " r=" + std::to_string(r);
          t.expect(w.has_value() && !m.irreducible(), tag + ": no singular witness");
          if (!w) continue;
          t.expect(m.act(w->gen, w->from).is_zero() && m.in_basis(w->from), tag + ": witness is not singular");
          const std::int64_t expect_e = r >= 1 ? r : 1 - r;
          t.expect(w->pair == pair && std::llabs(w->from.get(pair)) == expect_e,
                   tag + ": witness at " + w->from.str());
        }
  return t;
}

// ---------------------------------------------------------------------------
// 8. Z^infty grading

Tally criterion_8() {
  Tally t;
  for (const auto& c : diagonal_modules()) {
    const auto& m = *c.module;
    const auto z = z_infty_grade(m, MultiIndex{});
    t.expect(z.components_at_most_one && z.shift_law, c.name + ": library flags");
    std::set<MultiIndex> grades;
    for (const auto& [b, g] : z.grade) grades.insert(g);
    t.expect(grades.size() == m.basis().size() && z.grade.size() == m.basis().size(),
             c.name + ": some Z^infty component has dimension > 1");
    for (const auto& b : m.basis())
      for (const auto& g : m.window_gens(false)) {
        try {
          for (const auto& [u, coeff] : m.act(g, b)) {
            (void)coeff;
            const MultiIndex expected = z.grade.at(b).plus(g.pair_label(), g.degree() > 0 ? 1 : -1);
            t.expect(z.grade.at(u) == expected, c.name + ": " + g.str() + " on " + b.str() + " breaks the shift law");
          }
        } catch (const TruncationOverflow&) {
          ++t.skipped;
        }
      }
  }
  // F2 compression against the degree of phi-Verma labels, computed from phi directly.
  for (const auto& kind : {HeisenbergKind::H_infinity(), HeisenbergKind::L(kA1), HeisenbergKind::L(kA2)})
    for (const auto& phi : {mixed_phi(), PhiFunction::constant(Sign::Plus), PhiFunction::constant(Sign::Minus)}) {
      const PhiVermaModule m(kind, phi, Scalar(2), make_truncation(3, 2, 0, 3));
      const auto z = z_infty_grade(m, MultiIndex{});
      for (const auto& b : m.basis()) {
        std::int64_t deg = 0;
        for (const auto& [pair, e] : b.entries()) {
          const int k = label_degree(pair);
          deg += e * (phi.at(pair) == Sign::Plus ? -k : k);
        }
        t.expect(compress_grading_F2(z.grade.at(b)) == deg && m.degree(b) == deg,
                 m.describe() + ": F2 compression of " + b.str());
      }
    }
  return t;
}

// ---------------------------------------------------------------------------
// 9. Freeness and supports

struct WeightCountKey {
  int height = 0;
  std::int64_t n = 0;
  friend auto operator<=>(const WeightCountKey&, const WeightCountKey&) = default;
};

// PBW monomials over f (x) t^n, |n| <= D, counted by (height, n).
std::map<WeightCountKey, std::uint64_t> sl2_real_monomials(const Truncation& tr) {
  std::vector<std::pair<WeightCountKey, int>> items;
  for (int n = -tr.max_delta_degree; n <= tr.max_delta_degree; ++n) items.push_back({{1, n}, 1});
  return oracle::monomial_counts<WeightCountKey>(
      items, tr.max_exponent, tr.max_total_degree, tr.max_real_height,
      [](const WeightCountKey& acc, const WeightCountKey& k, int e) {
        return WeightCountKey{acc.height + e * k.height, acc.n + e * k.n};
      });
}

std::map<std::int64_t, std::uint64_t> verma_degree_counts(const PhiFunction& phi, const std::set<int>& ks,
                                                          const Truncation& tr) {
  std::vector<std::pair<std::int64_t, int>> items;
  for (int k : ks) items.push_back({phi(k) == Sign::Plus ? -k : k, 0});
  return oracle::monomial_counts<std::int64_t>(items, tr.max_exponent, tr.max_total_degree, 0,
                                               [](std::int64_t acc, std::int64_t k, int e) { return acc + e * k; });
}

std::set<int> range_set(int lo, int hi) {
  std::set<int> s;
  for (int k = lo; k <= hi; ++k) s.insert(k);
  return s;
}

Tally criterion_9() {
  Tally t;
  const auto g = std::make_shared<const LoopAlgebra>(kA1);
  const CartanWeight lambda{{Scalar(3) / Scalar(2)}, Scalar(2), Scalar(0)};
  // Bijection PBW x V at a sweep of truncations.
  for (int H = 1; H <= 3; ++H)
    for (int D = 1; D <= 2; ++D)
      for (int E = 1; E <= 2; ++E) {
        const Truncation tr = make_truncation(D, E, H, H);
        const Truncation itr = make_truncation(D, 2, 0, 2);
        std::uint64_t pbw = 0;
        for (const auto& [k, c] : sl2_real_monomials(tr)) pbw += c;
        std::uint64_t inner = 0;
        for (const auto& [k, c] : verma_degree_counts(mixed_phi(), range_set(1, D), itr)) inner += c;
        for (const auto& m : {build_M_phi_lambda(g, mixed_phi(), lambda, tr, itr),
                              build_M_phi_lambda_via_loop(g, mixed_phi(), lambda, tr, itr)}) {
          t.expect(m->basis().size() == pbw * inner,
                   m->name() + " at " + tr.str() + ": " + std::to_string(m->basis().size()) + " != " +
                       std::to_string(pbw) + " x " + std::to_string(inner));
          const std::set<LoopLabel> distinct(m->basis().begin(), m->basis().end());
          t.expect(distinct.size() == m->basis().size(), m->name() + ": repeated labels");
          t.absorb(check_freeness(*m));
        }
        auto V = std::make_shared<DiagonalRealization>(HeisenbergKind::L(kA1), std::set<int>{1},
                                                       std::map<Label, Scalar>{{IndexPair{1, 1}, Scalar(1) / Scalar(3)}},
                                                       Scalar(2), itr);
        const auto mv = build_generalized_loop(g, lambda, V, tr);
        t.expect(mv->basis().size() == pbw * V->basis().size(), mv->name() + ": basis is not PBW x V");
        t.absorb(check_freeness(*mv));
      }
  // Supports over the window max_real_height <= 3, |n| <= 4.
  const Truncation tr = make_truncation(4, 3, 3, 3);
  const Truncation itr = make_truncation(4, 2, 0, 2);
  auto support = [](const InducedModule& m) {
    std::set<std::pair<int, std::int64_t>> out;
    for (const auto& b : m.basis()) {
      const auto w = m.weight(b);
      if (std::llabs(w.n) <= 4) out.insert({w.beta[0], w.n});
    }
    return out;
  };
  auto formula = [](const std::set<std::int64_t>& strip) {
    std::set<std::pair<int, std::int64_t>> out;
    for (int b = 0; b <= 3; ++b)
      for (std::int64_t n = -4; n <= 4; ++n)
        if (b > 0 || strip.count(n)) out.insert({b, n});
    return out;
  };
  std::set<std::int64_t> all_n;
  for (std::int64_t n = -4; n <= 4; ++n) all_n.insert(n);
  const auto mixed = build_M_phi_lambda(g, mixed_phi(), lambda, tr, itr);
  t.expect(support(*mixed) == formula(all_n), "M_phi(lambda), mixed phi: support differs from the formula");
  t.absorb(check_support_formula(*mixed, 3, 4, std::nullopt));
  // V_K with K = {1..4} has every degree in its window, so the formula applies verbatim.
  std::map<Label, Scalar> theta;
  for (int k = 1; k <= 4; ++k) theta[IndexPair{k, 1}] = Scalar(1) / Scalar(k + 2);
  auto VK = std::make_shared<DiagonalRealization>(HeisenbergKind::L(kA1), range_set(1, 4), theta, Scalar(2), itr);
  const auto loopK = build_generalized_loop(g, lambda, VK, tr);
  t.expect(support(*loopK) == formula(all_n), "M(lambda, V_K), K = {1..4}: support differs from the formula");
  t.absorb(check_support_formula(*loopK, 3, 4, std::nullopt));
  // K = {1}: x_{-k} kills v for k > 1, so the strip stops at the degrees of V.
  auto V1 = std::make_shared<DiagonalRealization>(HeisenbergKind::L(kA1), std::set<int>{1},
                                                  std::map<Label, Scalar>{{IndexPair{1, 1}, Scalar(1) / Scalar(3)}},
                                                  Scalar(2), itr);
  std::set<std::int64_t> v1_degrees;
  for (const auto& b : V1->basis())
    if (std::llabs(V1->degree(b)) <= 4) v1_degrees.insert(V1->degree(b));
  const auto loop1 = build_generalized_loop(g, lambda, V1, tr);
  t.expect(support(*loop1) == formula(v1_degrees), "M(lambda, V_K), K = {1}: support differs from the formula");
  t.absorb(check_support_formula(*loop1, 3, 4, v1_degrees));
  // phi = +: the strip only carries n <= 0, every other height carries all n.
  const auto plus = build_M_phi_lambda(g, PhiFunction::constant(Sign::Plus), lambda, tr, itr);
  std::set<std::int64_t> strip;
  for (const auto& [n, c] : verma_degree_counts(PhiFunction::constant(Sign::Plus), range_set(1, 4), itr)) {
    (void)c;
    if (std::llabs(n) <= 4) strip.insert(n);
  }
  t.expect(support(*plus) == formula(strip), "M_phi(lambda), phi = +: support differs from the corrected formula");
  t.absorb(check_support_formula(*plus, 3, 4, std::set<std::int64_t>(strip.begin(), strip.end())));
  return t;
}

// ---------------------------------------------------------------------------
// 10. Irreducibility probe

Tally criterion_10() {
  Tally t;
  const auto t0 = Clock::now();
  const auto g = std::make_shared<const LoopAlgebra>(kA1);
  const CartanWeight lambda{{Scalar(1) / Scalar(2)}, Scalar(2), Scalar(0)};
  const Truncation tr = make_truncation(3, 3, 3, 3);
  const Truncation itr = make_truncation(3, 2, 0, 2);
  const auto phi_tilde =
      PhiFunction::with_exceptions({{IndexPair{1, 1}, Sign::Minus}, {IndexPair{3, 1}, Sign::Minus}}, Sign::Plus);
  auto VK = std::make_shared<DiagonalRealization>(HeisenbergKind::L(kA1), std::set<int>{1},
                                                  std::map<Label, Scalar>{{IndexPair{1, 1}, Scalar(1) / Scalar(3)}},
                                                  Scalar(2), itr);
  const std::vector<InducedPtr> modules = {build_M_phi_lambda(g, mixed_phi(), lambda, tr, itr),
                                           build_M_phi_lambda(g, phi_tilde, lambda, tr, itr),
                                           build_generalized_loop(g, lambda, VK, tr)};
  std::mt19937_64 rng(10);
  for (const auto& m : modules)
    for (int i = 0; i < 100; ++i) {
      const LoopVec w = random_homogeneous_vector(*m, rng);
      const std::string tag = m->name() + " sample " + std::to_string(i);
      try {
        const auto r = irreducibility_probe(*m, w, 20);
        // Replay step by step, tracking the weight independently.
        WeightKey expected = m->weight(w.begin()->first);
        LoopVec cur = w;
        for (const auto& s : r.transcript) {
          t.expect(std::abs(s.m) <= 20, tag + ": |m| beyond the search bound");
          cur = m->act(s.x, cur);
          t.expect(!cur.is_zero(), tag + ": replay hits zero");
          for (std::size_t j = 0; j < expected.beta.size(); ++j) expected.beta[j] -= s.beta[j];
          expected.n -= s.m;
        }
        t.expect(cur == r.result && !cur.is_zero(), tag + ": replay does not reach the reported element");
        for (const auto& [l, c] : cur) {
          (void)c;
          t.expect(!l.has_real_factor(), tag + ": end point off the strip");
          t.expect(m->weight(l) == expected, tag + ": end point has weight " + m->weight(l).str());
        }
        t.absorb(check_probe_replay(*m, r));
      } catch (const ProbeInconclusive& e) {
        t.expect(false, tag + ": " + e.what());
      }
    }
  const double s = seconds_since(t0);
  t.expect(s < 60.0, "runtime " + std::to_string(s) + " s exceeds 60 s");
  return t;
}

// ---------------------------------------------------------------------------
// 11. Cross-construction agreement

Tally criterion_11() {
  Tally t;
  const auto g = std::make_shared<const LoopAlgebra>(kA1);
  const CartanWeight lambda{{Scalar(2)}, Scalar(3), Scalar(1)};
  const Truncation tr = make_truncation(2, 2, 2, 2);
  const Truncation itr = make_truncation(3, 2, 0, 3);
  for (const auto& phi : {mixed_phi(), PhiFunction::constant(Sign::Plus), PhiFunction::constant(Sign::Minus)}) {
    const auto direct = build_M_phi_lambda(g, phi, lambda, tr, itr);
    const auto via = build_M_phi_lambda_via_loop(g, phi, lambda, tr, itr);
    t.absorb(compare_constructions(*direct, *via, 2));
    t.expect(direct->weight_dimensions() == via->weight_dimensions(), "weight dimensions differ");
  }
  {
    const auto g2 = std::make_shared<const LoopAlgebra>(kA2);
    const CartanWeight l2{{Scalar(1), Scalar(-1)}, Scalar(2), Scalar(0)};
    const Truncation t2 = make_truncation(1, 1, 2, 2);
    const Truncation i2 = make_truncation(1, 1, 0, 2);
    const auto direct = build_M_phi_lambda(g2, mixed_phi(), l2, t2, i2);
    const auto via = build_M_phi_lambda_via_loop(g2, mixed_phi(), l2, t2, i2);
    t.absorb(compare_constructions(*direct, *via, 1));
  }
  // Partial loop modules against the convolution oracle.
  const auto kind = HeisenbergKind::L(kA1);
  const std::map<Label, Scalar> theta{{IndexPair{1, 1}, Scalar(1) / Scalar(3)}, {IndexPair{2, 1}, Scalar(5) / Scalar(7)}};
  for (const auto& I : std::vector<std::set<int>>{{}, {1}, {1, 2}, {2}}) {
    ModulePtr N;
    if (I.empty())
      N = std::make_shared<TrivialModule>(kind, lambda.c, itr.max_delta_degree);
    else
      N = std::make_shared<DiagonalRealization>(kind, std::set<int>{*I.begin()},
                                                std::map<Label, Scalar>{{IndexPair{*I.begin(), 1}, theta.at(IndexPair{*I.begin(), 1})}},
                                                lambda.c, itr, std::map<Label, Sign>{}, I);
    const auto pl = build_partial_loop(g, I, mixed_phi(), N, lambda, tr, itr);
    t.absorb(compare_weight_dimensions(*pl.direct, *pl.via_V));
    std::set<int> rest;
    for (int k = 1; k <= itr.max_delta_degree; ++k)
      if (!I.count(k)) rest.insert(k);
    std::map<std::int64_t, std::uint64_t> ndims;
    for (const auto& b : N->basis()) ++ndims[N->degree(b)];
    const auto vdims = verma_degree_counts(mixed_phi(), rest, itr);
    std::map<WeightKey, std::size_t> expected;
    for (const auto& [rk, rc] : sl2_real_monomials(tr))
      for (const auto& [nd, nc] : ndims)
        for (const auto& [vd, vc] : vdims) expected[WeightKey{{rk.height}, rk.n + nd + vd}] += rc * nc * vc;
    std::string tag = "I = {";
    for (int k : I) tag += std::to_string(k) + " ";
    tag += "}";
    t.expect(pl.direct->weight_dimensions() == expected, tag + ": direct construction differs from the convolution");
    t.expect(pl.via_V->weight_dimensions() == expected, tag + ": M(lambda, V) differs from the convolution");
    if (I.empty()) {
      const auto mphi = build_M_phi_lambda(g, mixed_phi(), lambda, tr, itr);
      t.expect(mphi->weight_dimensions() == expected, "I empty does not reduce to M_phi(lambda)");
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// 12. CLI determinism

int run_cli(const std::filesystem::path& config, const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + LOOPMOD_CLI_PATH + "\" --config \"" + config.string() + "\" --out \"" +
                          out.string() + "\" --format csv --quiet";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tally criterion_12() {
  Tally t;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("loopmod_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const json probe_cfg = json::parse(R"json({
    "algebra": {"kind": "A_1^(1)"},
    "level_a": "2",
    "phi": {"period": 2, "pattern": ["+", "-"]},
    "lambda": {"H_1": "1/2"},
    "truncation": {"max_delta_degree": 2, "max_exponent": 2, "max_real_height": 2, "max_total_degree": 2},
    "task": "probe",
    "task_params": {"construction": "direct", "samples": 6, "m_bound": 20},
    "seed": 12
  })json");
  const json verify_cfg = json::parse(R"json({
    "algebra": {"kind": "H_n", "n": 2},
    "level_a": "1",
    "phi": {"exceptions": {"2": "-"}, "default": "+"},
    "truncation": {"max_delta_degree": 2, "max_exponent": 2, "max_total_degree": 3},
    "task": "verify",
    "seed": 5
  })json");
  const json loop_cfg = json::parse(R"json({
    "algebra": {"kind": "A_1^(1)"},
    "level_a": "3/2",
    "phi": {"period": 2, "pattern": ["+", "-"]},
    "truncation": {"max_delta_degree": 2, "max_exponent": 2, "max_real_height": 2, "max_total_degree": 2},
    "task": "loop-module",
    "task_params": {"construction": "phi-verma", "check_representation": false},
    "seed": 3
  })json");
  int idx = 0;
  for (const auto& cfg : {probe_cfg, verify_cfg, loop_cfg}) {
    const fs::path cfg_path = dir / ("config" + std::to_string(idx) + ".json");
    std::ofstream(cfg_path) << cfg.dump(2);
    std::vector<std::string> reports;
    std::vector<std::string> tables;
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / ("run" + std::to_string(idx) + "_" + std::to_string(run));
      const int code = run_cli(cfg_path, out);
      t.expect(code == 0, cfg.at("task").get<std::string>() + ": exit code " + std::to_string(code));
      json report = json::parse(read_file(out / "report.json"));
      t.expect(report.contains("generated_at"), "report lacks generated_at");
      report.erase("generated_at");
      reports.push_back(report.dump());
      if (fs::exists(out / "weight_dimensions.csv")) tables.push_back(read_file(out / "weight_dimensions.csv"));
    }
    t.expect(reports[0] == reports[1], cfg.at("task").get<std::string>() + ": reports differ between runs");
    if (!tables.empty()) t.expect(tables.size() == 2 && tables[0] == tables[1], "CSV tables differ between runs");
    if (idx == 0) {
      // The transcript in the report replays to the reported strip element.
      const json report = json::parse(reports[0]);
      const auto g = std::make_shared<const LoopAlgebra>(kA1);
      const CartanWeight lambda{{Scalar(1) / Scalar(2)}, Scalar(2), Scalar(0)};
      const Truncation tr = make_truncation(2, 2, 2, 2);
      const auto m = build_M_phi_lambda(g, mixed_phi(), lambda, tr, tr);
      std::mt19937_64 rng(12);
      for (const auto& entry : report.at("result").at("probes")) {
        const LoopVec w = random_homogeneous_vector(*m, rng);
        t.expect(to_json(w) == entry.at("start"), "seeded start vector differs from the report");
        std::vector<ProbeStep> steps;
        for (const auto& s : entry.at("transcript")) steps.push_back(probe_step_from_json(s));
        t.expect(to_json(replay_probe(*m, w, steps)) == entry.at("strip_element"),
                 "report transcript does not replay to its strip element");
      }
    }
    ++idx;
  }
  fs::remove_all(dir);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"bracket laws", criterion_1},
      {"phi-Verma straightening vs oracle", criterion_2},
      {"graded dimensions", criterion_3},
      {"eigenvalue recursions", criterion_4},
      {"Weyl module laws", criterion_5},
      {"classification counts", criterion_6},
      {"realization criterion", criterion_7},
      {"Z^infty grading", criterion_8},
      {"loop-module freeness and supports", criterion_9},
      {"irreducibility probe", criterion_10},
      {"cross-construction agreement", criterion_11},
      {"CLI determinism", criterion_12},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = Clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    all_ok = all_ok && t.ok();
    std::cout << (t.ok() ? "PASS" : "FAIL") << "  criterion " << id << ": " << criteria[i].first << "  (" << t.cases
              << " cases, " << t.skipped << " skipped, " << std::fixed << std::setprecision(2) << s << " s)\n";
    for (const auto& f : t.failures) std::cout << "      " << f << '\n';
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
