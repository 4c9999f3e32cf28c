#include "loopmod/affine_algebra.hpp"

#include <cstdlib>
#include <set>

#include "loopmod/errors.hpp"

namespace loopmod {

std::string GBasis::str() const {
  switch (type) {
    case Type::Real:
      return "E" + std::to_string(row) + std::to_string(col) + "t^" + std::to_string(power);
    case Type::Imag:
      return "x(" + std::to_string(power) + "," + std::to_string(index) + ")";
    case Type::Cartan:
      return "h" + std::to_string(index);
    case Type::C:
      return "c";
    case Type::D:
      return "d";
  }
  return "?";
}

LoopAlgebra::LoopAlgebra(const AffineType& t) : type_(t) {
  if (t.r != 1 || t.base.letter != 'A')
    throw InvalidArgument("loop realization implemented for untwisted type A only, got " + t.str());
  l_ = t.base.rank;
  const int n = l_ + 1;
  // Gram-Schmidt on H_i = E_ii - E_{i+1,i+1} for the trace form.
  for (int i = 0; i < l_; ++i) {
    std::vector<Scalar> h(n, Scalar(0));
    h[i] = 1;
    h[i + 1] = -1;
    for (int j = 0; j < i; ++j) {
      Scalar ip(0);
      for (int p = 0; p < n; ++p) ip += h[p] * u_[j][p];
      const Scalar f = ip / norms_[j];
      for (int p = 0; p < n; ++p) h[p] -= f * u_[j][p];
    }
    Scalar nn(0);
    for (int p = 0; p < n; ++p) nn += h[p] * h[p];
    u_.push_back(h);
    norms_.push_back(nn);
  }
}

LoopAlgebra::Matrix LoopAlgebra::matrix_of(const GBasis& g) const {
  const int n = l_ + 1;
  Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
  switch (g.type) {
    case GBasis::Type::Real:
      m[g.row - 1][g.col - 1] = 1;
      break;
    case GBasis::Type::Imag:
    case GBasis::Type::Cartan: {
      const Scalar s = (g.type == GBasis::Type::Imag && g.power < 0) ? norms_[g.index - 1].inverse() : Scalar(1);
      for (int p = 0; p < n; ++p) m[p][p] = u_[g.index - 1][p] * s;
      break;
    }
    default:
      throw std::logic_error("no matrix for " + g.str());
  }
  return m;
}

LoopElement LoopAlgebra::decompose(const Matrix& m, int power) const {
  const int n = l_ + 1;
  LoopElement out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.add(GBasis::real(i + 1, j + 1, power), m[i][j]);
  std::vector<Scalar> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = m[i][i];
  out.add(diagonal_element(diag, power));
  return out;
}

LoopElement LoopAlgebra::diagonal_element(const std::vector<Scalar>& diag, int power) const {
  LoopElement out;
  for (int i = 1; i <= l_; ++i) {
    Scalar ip(0);
    for (int p = 0; p <= l_; ++p) ip += diag[p] * u_[i - 1][p];
    if (power == 0)
      out.add(GBasis::cartan(i), ip / norms_[i - 1]);
    else if (power > 0)
      out.add(GBasis::imag(power, i), ip / norms_[i - 1]);
    else
      out.add(GBasis::imag(power, i), ip);
  }
  return out;
}

LoopElement LoopAlgebra::bracket(const GBasis& a, const GBasis& b) const {
  LoopElement out;
  if (a.type == GBasis::Type::C || b.type == GBasis::Type::C) return out;
  if (a.type == GBasis::Type::D && b.type == GBasis::Type::D) return out;
  if (a.type == GBasis::Type::D) {
    out.add(b, Scalar(b.power));
    return out;
  }
  if (b.type == GBasis::Type::D) {
    out.add(a, Scalar(-a.power));
    return out;
  }
  const Matrix x = matrix_of(a);
  const Matrix y = matrix_of(b);
  const int n = l_ + 1;
  Matrix comm(n, std::vector<Scalar>(n, Scalar(0)));
  Scalar trace(0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        if (!x[i][k].is_zero() && !y[k][j].is_zero()) comm[i][j] += x[i][k] * y[k][j];
        if (!y[i][k].is_zero() && !x[k][j].is_zero()) comm[i][j] -= y[i][k] * x[k][j];
      }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!x[i][k].is_zero() && !y[k][i].is_zero()) trace += x[i][k] * y[k][i];
  out = decompose(comm, a.power + b.power);
  if (a.power + b.power == 0 && a.power != 0) out.add(GBasis::central(), Scalar(a.power) * trace);
  return out;
}

LoopElement LoopAlgebra::bracket(const LoopElement& a, const LoopElement& b) const {
  LoopElement out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) out.add(bracket(ga, gb), ca * cb);
  return out;
}

std::vector<int> LoopAlgebra::finite_root(int i, int j) const {
  std::vector<int> v(l_, 0);
  if (i < j)
    for (int p = i; p < j; ++p) v[p - 1] = 1;
  else
    for (int p = j; p < i; ++p) v[p - 1] = -1;
  return v;
}

std::optional<Root> LoopAlgebra::root_of(const GBasis& g) const {
  if (g.type == GBasis::Type::Imag) return imaginary_root(l_, g.power);
  if (g.type != GBasis::Type::Real) return std::nullopt;
  Root r;
  for (int c : finite_root(g.row, g.col)) r.finite_part.push_back(Scalar(c));
  r.delta = g.power;
  return r;
}

std::vector<GBasis> LoopAlgebra::root_space_basis(const Root& root, const Truncation& trunc) const {
  if (static_cast<int>(root.finite_part.size()) != l_) throw InvalidArgument("root rank mismatch");
  if (root.delta.abs() > Scalar(trunc.max_delta_degree))
    throw TruncationOverflow("root " + root.str() + " outside the window");
  std::vector<GBasis> out;
  if (!root.delta.is_integer()) return out;
  const int n = static_cast<int>(root.delta.to_int());
  if (root.is_zero()) return out;
  if (root.is_imaginary()) {
    for (int i = 1; i <= l_; ++i) out.push_back(GBasis::imag(n, i));
    return out;
  }
  for (int i = 1; i <= l_ + 1; ++i)
    for (int j = 1; j <= l_ + 1; ++j) {
      if (i == j) continue;
      const auto v = finite_root(i, j);
      bool match = true;
      for (int p = 0; p < l_; ++p) match = match && root.finite_part[p] == Scalar(v[p]);
      if (match) out.push_back(GBasis::real(i, j, n));
    }
  return out;
}

std::vector<GBasis> LoopAlgebra::window_basis(int bound) const {
  std::vector<GBasis> out;
  for (int n = -bound; n <= bound; ++n) {
    for (int i = 1; i <= l_ + 1; ++i)
      for (int j = 1; j <= l_ + 1; ++j)
        if (i != j) out.push_back(GBasis::real(i, j, n));
    for (int i = 1; i <= l_; ++i) out.push_back(n == 0 ? GBasis::cartan(i) : GBasis::imag(n, i));
  }
  out.push_back(GBasis::central());
  out.push_back(GBasis::degree());
  return out;
}

HGen LoopAlgebra::to_hgen(const GBasis& g) const {
  if (g.type == GBasis::Type::C) return HGen::c();
  if (g.type != GBasis::Type::Imag) throw InvalidArgument(g.str() + " is not in the Heisenberg subalgebra");
  return HGen::x(g.power, g.index);
}

GBasis LoopAlgebra::from_hgen(const HGen& g) const {
  if (g.is_central()) return GBasis::central();
  validate_generator(heisenberg_kind(), g);
  return GBasis::imag(g.k, g.i);
}

BorelParabolic build_borel_and_parabolic(const LoopAlgebra& g, const PhiFunction& phi, const Truncation& trunc) {
  BorelParabolic bp;
  const auto S = build_S_phi(g.type(), phi, trunc);
  std::vector<GBasis> h;
  for (int i = 1; i <= g.rank(); ++i) h.push_back(GBasis::cartan(i));
  h.push_back(GBasis::central());
  h.push_back(GBasis::degree());
  bp.b_phi = h;
  bp.parabolic = h;
  for (const auto& r : S.plus)
    for (const auto& x : g.root_space_basis(r, trunc)) bp.b_phi.push_back(x);
  for (const auto& r : S.minus)
    for (const auto& x : g.root_space_basis(r, trunc)) bp.minus_S_phi.push_back(x);
  for (const auto& x : g.window_basis(trunc.max_delta_degree)) {
    if (x.is_imag() || x.is_positive_real()) bp.parabolic.push_back(x);
    if (x.is_negative_real()) bp.minus_R.push_back(x);
  }
  return bp;
}

CheckResult check_subalgebra(const LoopAlgebra& g, const std::vector<GBasis>& elems, int bound,
                             const std::string& name) {
  CheckResult res{"subalgebra " + name};
  const std::set<GBasis> span(elems.begin(), elems.end());
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (std::abs(a.power + b.power) > bound) {
        ++res.skipped;
        continue;
      }
      ++res.cases;
      for (const auto& [t, c] : g.bracket(a, b)) {
        (void)c;
        if (!span.count(t)) res.fail("[" + a.str() + "," + b.str() + "] has component " + t.str());
      }
    }
  return res;
}

CheckResult check_affine_jacobi(const LoopAlgebra& g, int bound) {
  CheckResult res{"Jacobi identity, power <= " + std::to_string(bound)};
  const auto basis = g.window_basis(bound);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        const LoopElement X(x), Y(y), Z(z);
        const LoopElement sum = g.bracket(X, g.bracket(Y, Z)) + g.bracket(Y, g.bracket(Z, X)) +
                                g.bracket(Z, g.bracket(X, Y));
        ++res.cases;
        if (!sum.is_zero()) res.fail(x.str() + ", " + y.str() + ", " + z.str());
      }
  return res;
}

CheckResult check_affine_antisymmetry(const LoopAlgebra& g, int bound) {
  CheckResult res{"antisymmetry, power <= " + std::to_string(bound)};
  const auto basis = g.window_basis(bound);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      ++res.cases;
      if (!(g.bracket(x, y) + g.bracket(y, x)).is_zero()) res.fail(x.str() + ", " + y.str());
    }
  return res;
}

CheckResult check_heisenberg_match(const LoopAlgebra& g, int bound) {
  CheckResult res{"imaginary subalgebra matches L"};
  const auto kind = g.heisenberg_kind();
  const auto gens = window_generators(kind, bound);
  for (const auto& a : gens)
    for (const auto& b : gens) {
      ++res.cases;
      const LoopElement affine = g.bracket(g.from_hgen(a), g.from_hgen(b));
      LoopElement mapped;
      for (const auto& [z, c] : bracket(kind, a, b)) mapped.add(g.from_hgen(z), c);
      if (!(affine == mapped)) res.fail("[" + a.str() + "," + b.str() + "]");
    }
  return res;
}

}  // namespace loopmod
