#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "loopmod/check.hpp"
#include "loopmod/heisenberg.hpp"
#include "loopmod/lin_comb.hpp"
#include "loopmod/roots.hpp"

namespace loopmod {

// Basis element of the loop realization of an untwisted affine sl_{l+1}:
//   Real(i, j, n)  E_ij (x) t^n, i != j
//   Imag(k, i)     x_{k,i}: u_i (x) t^k for k > 0, u_i / (u_i, u_i) (x) t^k for k < 0
//   Cartan(i)      u_i (x) 1
//   C, D           central element and degree derivation
// u_1..u_l is an orthogonal basis of the diagonal Cartan for the trace form, so
// [x_{k,i}, x_{-k,j}] = delta_ij k c.
struct GBasis {
  enum class Type { Real, Imag, Cartan, C, D };
  Type type = Type::C;
  int row = 0;
  int col = 0;
  int power = 0;
  int index = 0;

  static GBasis real(int i, int j, int n) { return {Type::Real, i, j, n, 0}; }
  static GBasis imag(int k, int i) { return {Type::Imag, 0, 0, k, i}; }
  static GBasis cartan(int i) { return {Type::Cartan, 0, 0, 0, i}; }
  static GBasis central() { return {Type::C, 0, 0, 0, 0}; }
  static GBasis degree() { return {Type::D, 0, 0, 0, 0}; }

  bool is_real() const { return type == Type::Real; }
  bool is_imag() const { return type == Type::Imag; }
  // Real root vector with negative finite part (row > col).
  bool is_negative_real() const { return type == Type::Real && row > col; }
  bool is_positive_real() const { return type == Type::Real && row < col; }
  std::string str() const;

  friend auto operator<=>(const GBasis&, const GBasis&) = default;
};

using LoopElement = LinComb<GBasis>;

class LoopAlgebra {
 public:
  // Only untwisted type A; throws InvalidArgument otherwise.
  explicit LoopAlgebra(const AffineType& t);

  const AffineType& type() const { return type_; }
  int rank() const { return l_; }
  HeisenbergKind heisenberg_kind() const { return HeisenbergKind::L(type_); }
  // (u_i, u_i) and the diagonal entries of u_i.
  const Scalar& cartan_norm(int i) const { return norms_.at(i - 1); }
  const std::vector<Scalar>& cartan_diag(int i) const { return u_.at(i - 1); }

  LoopElement bracket(const GBasis& a, const GBasis& b) const;
  LoopElement bracket(const LoopElement& a, const LoopElement& b) const;

  std::optional<Root> root_of(const GBasis& g) const;
  // Simple-root coordinates of eps_i - eps_j.
  std::vector<int> finite_root(int i, int j) const;
  // Basis of the root space g_root; empty for a non-root. TruncationOverflow if
  // |delta coefficient| exceeds the window.
  std::vector<GBasis> root_space_basis(const Root& root, const Truncation& trunc) const;
  // Every basis element with |power| <= bound.
  std::vector<GBasis> window_basis(int bound) const;

  HGen to_hgen(const GBasis& imag) const;
  GBasis from_hgen(const HGen& g) const;
  // h (x) t^k for a diagonal traceless h, expanded in the basis.
  LoopElement diagonal_element(const std::vector<Scalar>& diag, int power) const;

 private:
  using Matrix = std::vector<std::vector<Scalar>>;
  Matrix matrix_of(const GBasis& g) const;
  LoopElement decompose(const Matrix& m, int power) const;

  AffineType type_;
  int l_ = 1;
  std::vector<std::vector<Scalar>> u_;
  std::vector<Scalar> norms_;
};

struct BorelParabolic {
  std::vector<GBasis> b_phi;        // Cartan, c, d and root vectors of S_phi
  std::vector<GBasis> minus_S_phi;  // root vectors of -S_phi
  std::vector<GBasis> parabolic;    // Cartan, c, d, all x_{k,i}, positive real root vectors
  std::vector<GBasis> minus_R;      // negative real root vectors
};

BorelParabolic build_borel_and_parabolic(const LoopAlgebra& g, const PhiFunction& phi, const Truncation& trunc);

// Brackets of listed elements stay in their span (results past the window are skipped).
CheckResult check_subalgebra(const LoopAlgebra& g, const std::vector<GBasis>& elems, int bound,
                             const std::string& name);
CheckResult check_affine_jacobi(const LoopAlgebra& g, int bound);
CheckResult check_affine_antisymmetry(const LoopAlgebra& g, int bound);
// The x_{k,i} satisfy exactly the relations of the Heisenberg algebra L.
CheckResult check_heisenberg_match(const LoopAlgebra& g, int bound);

}  // namespace loopmod
