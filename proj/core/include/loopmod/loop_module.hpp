#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/affine_algebra.hpp"
#include "loopmod/check.hpp"
#include "loopmod/heisenberg_module.hpp"

namespace loopmod {

// lambda on the Chevalley Cartan elements H_i = E_ii - E_{i+1,i+1}, on c and on d.
struct CartanWeight {
  std::vector<Scalar> h;
  Scalar c;
  Scalar d;
};

// A PBW monomial over negative generators times an inner basis label. The word is
// sorted ascending in PBW order; its last factor is the leftmost one.
struct LoopLabel {
  std::vector<std::pair<GBasis, int>> word;
  MultiIndex inner;

  bool has_real_factor() const;
  std::string str() const;
  friend auto operator<=>(const LoopLabel&, const LoopLabel&) = default;
};

using LoopVec = LinComb<LoopLabel>;
std::string loop_vec_str(const LoopVec& v);

// Weight lambda - beta + n delta, recorded as (beta in simple coordinates, n).
struct WeightKey {
  std::vector<int> beta;
  std::int64_t n = 0;
  int height() const;
  std::string str() const;
  friend auto operator<=>(const WeightKey&, const WeightKey&) = default;
};

// PBW order on negative generators: imaginary ones first (|k|, then i), then real
// ones by height of beta, then beta lexicographically, then n increasing.
bool pbw_less(const LoopAlgebra& g, const GBasis& a, const GBasis& b);

// U(g) (x)_{U(P)} V for a subalgebra P complementary to the span of the negative
// generators; P acts on V through its Heisenberg part, by lambda on the Cartan
// and by zero on everything else. The action is computed by straightening and is exact.
class InducedModule {
 public:
  struct Spec {
    std::shared_ptr<const LoopAlgebra> algebra;
    CartanWeight lambda;
    ModulePtr inner;
    std::function<bool(const GBasis&)> negative;
    Truncation real_trunc;               // PBW factors from negative real root vectors
    std::vector<GBasis> imag_negatives;  // imaginary negative generators enumerated into the basis
    Truncation imag_trunc;
    std::string name;
  };

  explicit InducedModule(Spec spec);

  const LoopAlgebra& algebra() const { return *spec_.algebra; }
  const CartanWeight& lambda() const { return spec_.lambda; }
  const HeisenbergModule& inner() const { return *spec_.inner; }
  const Spec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  bool is_negative(const GBasis& g) const { return spec_.negative(g); }
  const Scalar& level() const { return spec_.lambda.c; }

  const std::vector<LoopLabel>& basis() const { return basis_; }
  const std::vector<std::vector<std::pair<GBasis, int>>>& pbw_monomials() const { return pbw_; }
  bool in_basis(const LoopLabel& l) const;

  LoopVec act(const GBasis& x, const LoopLabel& l) const;
  LoopVec act(const GBasis& x, const LoopVec& v) const;
  LoopVec act(const LoopElement& x, const LoopVec& v) const;

  WeightKey weight(const LoopLabel& l) const;
  // lambda(u_i) for the orthogonal Cartan basis.
  Scalar lambda_on_cartan(int i) const;

  std::map<WeightKey, std::size_t> weight_dimensions() const;
  // Basis labels with no real factor.
  std::vector<LoopLabel> strip() const;

  std::size_t memo_size() const;

 private:
  LoopVec act_uncached(const GBasis& x, const LoopLabel& l) const;
  Spec spec_;
  std::vector<std::vector<std::pair<GBasis, int>>> pbw_;
  std::vector<LoopLabel> basis_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<GBasis, LoopLabel>, LoopVec> memo_;
};

using InducedPtr = std::shared_ptr<const InducedModule>;

// M(lambda, V) = U(g) (x)_{U(P)} V with P = (H + L) + g_R; V an L-module at level lambda(c).
InducedPtr build_generalized_loop(std::shared_ptr<const LoopAlgebra> g, const CartanWeight& lambda, ModulePtr V,
                                  const Truncation& trunc);

// M_phi(lambda) = U(g) (x)_{U(b_phi)} C v, built directly by straightening over g_{-S_phi}.
InducedPtr build_M_phi_lambda(std::shared_ptr<const LoopAlgebra> g, const PhiFunction& phi,
                              const CartanWeight& lambda, const Truncation& trunc, const Truncation& imag_trunc);

// M_phi(lambda) realized as M(lambda, M_phi(a)).
InducedPtr build_M_phi_lambda_via_loop(std::shared_ptr<const LoopAlgebra> g, const PhiFunction& phi,
                                       const CartanWeight& lambda, const Truncation& trunc,
                                       const Truncation& imag_trunc);

struct PartialLoop {
  ModulePtr V;          // N (x) Verma over K_phi
  InducedPtr via_V;     // M(lambda, V)
  InducedPtr direct;    // U(g) (x)_{U(K + g_R)} N, K = K_I + K_phi^+
};

// N must be a module over the pairs with index in I.
PartialLoop build_partial_loop(std::shared_ptr<const LoopAlgebra> g, const std::set<int>& I, const PhiFunction& phi,
                               ModulePtr N, const CartanWeight& lambda, const Truncation& trunc,
                               const Truncation& imag_trunc);

CheckResult check_loop_representation(const InducedModule& m, int gen_bound);
// Each basis label equals its PBW word applied to the inner vector, and labels are distinct.
CheckResult check_freeness(const InducedModule& m);
// Windowed support equals {lambda - beta + n delta : beta in Q+, ht(beta) <= height, |n| <= n_bound}
// where n is unrestricted for beta != 0 and ranges over `strip_degrees` for beta = 0
// (nullopt: all integers).
CheckResult check_support_formula(const InducedModule& m, int height, int n_bound,
                                  const std::optional<std::set<std::int64_t>>& strip_degrees);
// dim at (beta, n) equals sum over PBW monomials of weight (beta, m) of dim V_{n - m}.
CheckResult check_weight_convolution(const InducedModule& m);
// The imaginary subalgebra preserves the strip and acts there as on V.
CheckResult check_strip(const InducedModule& m);
// The direct M_phi(lambda) and M(lambda, M_phi(a)) agree basis-for-basis, including the action.
CheckResult compare_constructions(const InducedModule& direct, const InducedModule& via_loop, int gen_bound);
CheckResult compare_weight_dimensions(const InducedModule& a, const InducedModule& b);

}  // namespace loopmod
