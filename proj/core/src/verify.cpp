#include "loopmod/verify.hpp"

#include <algorithm>

#include "loopmod/diagonal.hpp"
#include "loopmod/errors.hpp"
#include "loopmod/phi_verma.hpp"
#include "loopmod/weyl.hpp"
#include "loopmod/weyl_adapter.hpp"

namespace loopmod {

CheckResult check_heisenberg_brackets(const HeisenbergKind& kind, int bound) {
  CheckResult res("bracket laws for " + kind.str() + ", |index| <= " + std::to_string(bound));
  const auto gens = window_generators(kind, bound);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      ++res.cases;
      const auto xy = bracket(kind, x, y);
      if (!(xy + bracket(kind, y, x)).is_zero()) res.fail("antisymmetry fails for " + x.str() + ", " + y.str());
      LinComb<HGen> expected;
      if (!x.is_central() && !y.is_central() && x.pair_label() == y.pair_label() && x.degree() == -y.degree()) {
        const int scale = pair_scale(x.pair_label());
        expected.add(HGen::c(), Scalar(x.degree() > 0 ? scale : -scale));
      }
      if (!(xy == expected)) res.fail("[" + x.str() + ", " + y.str() + "] has the wrong value");
      for (const auto& z : gens) {
        const LinComb<HGen> X(x), Y(y), Z(z);
        const auto j = bracket(kind, X, bracket(kind, Y, Z)) + bracket(kind, Y, bracket(kind, Z, X)) +
                       bracket(kind, Z, bracket(kind, X, Y));
        if (!j.is_zero()) res.fail("Jacobi fails for " + x.str() + ", " + y.str() + ", " + z.str());
      }
    }
  return res;
}

Scalar random_generic_theta(std::mt19937_64& rng, const Scalar& a, int k) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  for (;;) {
    const Scalar t = Scalar(num(rng)) / Scalar(den(rng));
    if (!(t / (Scalar(k) * a)).is_integer()) return t;
  }
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

SuiteReport heisenberg_suite(const VerifyOptions& o) {
  SuiteReport s{"heisenberg", {}};
  s.checks.push_back(check_heisenberg_brackets(o.kind, o.trunc.max_delta_degree));
  return s;
}

SuiteReport phi_verma_suite(const VerifyOptions& o) {
  SuiteReport s{"phi_verma", {}};
  const auto m = build_phi_verma(o.kind, o.phi, o.a, o.trunc);
  s.checks.push_back(check_representation(m));
  s.checks.push_back(check_grading_shift(m));
  CheckResult red("reduce_to_highest is nonzero on basis vectors");
  if (o.a.is_zero()) {
    s.checks.push_back(check_closed_subspace(m, proper_submodule_at_level_zero(m)));
  } else {
    for (const auto& b : m.basis()) {
      ++red.cases;
      if (reduce_to_highest(m, Vec(b)).coefficient.is_zero()) red.fail("zero coefficient on " + b.str());
    }
    s.checks.push_back(red);
  }
  return s;
}

SuiteReport diagonal_suite(const VerifyOptions& o) {
  SuiteReport s{"diagonal_realization", {}};
  if (o.a.is_zero()) return s;
  std::mt19937_64 rng(o.seed);
  std::set<int> K;
  std::map<Label, Scalar> theta;
  for (int k = 1; k <= o.trunc.max_delta_degree; ++k) {
    if (k % 2 == 1) K.insert(k);
    for (const auto& l : o.kind.pair_labels(o.trunc.max_delta_degree))
      if (label_degree(l) == k && K.count(k)) theta[l] = random_generic_theta(rng, o.a, k);
  }
  const auto m = build_V_K_theta(o.kind, K, theta, o.a, o.trunc);
  s.checks.push_back(check_representation(m));
  s.checks.push_back(check_eigen_ladders(m, o.trunc.max_exponent));
  s.checks.push_back(check_commuting_family(m));
  CheckResult crit("no vanishing ladder coefficient for generic theta");
  for (const auto& c : ladder_coefficients(m)) {
    ++crit.cases;
    if (c.coefficient.is_zero()) crit.fail(c.gen.str() + " on " + c.from.str());
  }
  if (singular_witness(m)) crit.fail("singular witness for generic theta");
  s.checks.push_back(crit);
  CheckResult grading("Z^infty components and shifts");
  const auto z = z_infty_grade(m, MultiIndex{});
  grading.cases = z.grade.size();
  if (!z.components_at_most_one) grading.fail("a component has dimension > 1");
  if (!z.shift_law) grading.fail("generator shifts break the Z^infty law");
  s.checks.push_back(grading);
  return s;
}

SuiteReport weyl_suite(const VerifyOptions& o) {
  SuiteReport s{"weyl_weight", {}};
  if (o.a.is_zero() || o.kind.flavor != HeisenbergKind::Flavor::Hn) return s;
  const int n = std::min(o.kind.n, 3);
  std::vector<Scalar> coords;
  for (int i = 1; i <= n; ++i) coords.push_back(i % 2 ? Scalar(0) : Scalar(1) / Scalar(2));
  const auto orbit = analyze_orbit(WeightPoint::finite(o.a, coords), CoordWindow{n, 2});
  const auto classes = classify(orbit);
  for (const auto& c : classes) {
    s.checks.push_back(check_weyl_relations(c));
    s.checks.push_back(check_weight_propagation(c));
    s.checks.push_back(check_window_irreducible(c));
  }
  s.checks.push_back(check_disjoint_supports(classes));
  return s;
}

SuiteReport roots_suite(const VerifyOptions& o) {
  SuiteReport s{"affine_root_data", {}};
  const auto& t = *o.affine;
  CheckResult part("S_phi is a closed partition");
  const auto S = build_S_phi(t, o.phi, o.trunc);
  part.cases = S.plus.size();
  if (!is_partition(t, S, o.trunc)) part.fail("S_phi and -S_phi do not partition the window");
  const auto closure = is_closed_partition(t, S, o.trunc);
  if (!closure.closed) part.fail("not closed at " + closure.witness->first.str() + " + " + closure.witness->second.str());
  s.checks.push_back(part);
  CheckResult std_part("standard partition is closed");
  const auto P = standard_partition(t, o.trunc);
  std_part.cases = P.plus.size();
  if (!is_partition(t, P, o.trunc) || !is_closed_partition(t, P, o.trunc, ClosureRule::Literal).closed)
    std_part.fail("standard partition is not a closed partition");
  s.checks.push_back(std_part);
  return s;
}

SuiteReport affine_suite(const VerifyOptions& o) {
  SuiteReport s{"affine_algebra", {}};
  const auto g = std::make_shared<const LoopAlgebra>(*o.affine);
  const int bound = std::min(o.trunc.max_delta_degree, 2);
  s.checks.push_back(check_affine_antisymmetry(*g, bound));
  s.checks.push_back(check_affine_jacobi(*g, 1));
  s.checks.push_back(check_heisenberg_match(*g, bound));
  return s;
}

SuiteReport loop_suite(const VerifyOptions& o) {
  SuiteReport s{"loop_modules", {}};
  if (o.a.is_zero()) return s;
  const auto g = std::make_shared<const LoopAlgebra>(*o.affine);
  CartanWeight lambda{o.lambda_h, o.a, Scalar(0)};
  lambda.h.resize(g->rank(), Scalar(0));
  const auto direct = build_M_phi_lambda(g, o.phi, lambda, o.trunc, o.trunc);
  const auto via = build_M_phi_lambda_via_loop(g, o.phi, lambda, o.trunc, o.trunc);
  s.checks.push_back(check_loop_representation(*direct, 1));
  s.checks.push_back(check_freeness(*direct));
  s.checks.push_back(check_freeness(*via));
  s.checks.push_back(check_weight_convolution(*via));
  s.checks.push_back(check_strip(*via));
  s.checks.push_back(compare_constructions(*direct, *via, 1));
  return s;
}

}  // namespace

std::vector<SuiteReport> run_verify(const VerifyOptions& o) {
  std::vector<SuiteReport> out;
  out.push_back(heisenberg_suite(o));
  out.push_back(phi_verma_suite(o));
  out.push_back(diagonal_suite(o));
  if (o.kind.flavor == HeisenbergKind::Flavor::Hn) out.push_back(weyl_suite(o));
  if (o.affine) {
    out.push_back(roots_suite(o));
    if (o.affine->r == 1 && o.affine->base.letter == 'A') {
      out.push_back(affine_suite(o));
      out.push_back(loop_suite(o));
    }
  }
  return out;
}

}  // namespace loopmod
