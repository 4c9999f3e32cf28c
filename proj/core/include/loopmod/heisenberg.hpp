#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "loopmod/lin_comb.hpp"
#include "loopmod/multi_index.hpp"
#include "loopmod/phi_function.hpp"
#include "loopmod/roots.hpp"

namespace loopmod {

// Which Heisenberg algebra: H_n (e_{+-1..+-n}, c), H (all e_i), or the imaginary
// subalgebra L of an affine algebra (x_{k,i}, 1 <= i <= multiplicity(k)).
struct HeisenbergKind {
  enum class Flavor { Hn, Hinf, L };
  Flavor flavor = Flavor::Hinf;
  int n = 0;                         // only for Hn
  std::optional<AffineType> type;    // only for L

  static HeisenbergKind H_n(int n);
  static HeisenbergKind H_infinity();
  static HeisenbergKind L(const AffineType& t);

  bool is_L() const { return flavor == Flavor::L; }
  int multiplicity(int k) const;  // number of i for index k (k != 0)
  std::string str() const;

  // Positive pair labels with 1 <= k <= bound: int j for H, (k, i) for L.
  std::vector<Label> pair_labels(int bound) const;
  bool valid_pair_label(const Label& l) const;

  friend bool operator==(const HeisenbergKind&, const HeisenbergKind&) = default;
};

// Generator of a Heisenberg algebra: c, e(i) or x(k, i).
struct HGen {
  enum class Type { C, E, X };
  Type type = Type::C;
  int k = 0;
  int i = 0;

  static HGen c() { return {Type::C, 0, 0}; }
  static HGen e(int idx) { return {Type::E, idx, 0}; }
  static HGen x(int k, int i) { return {Type::X, k, i}; }

  bool is_central() const { return type == Type::C; }
  int degree() const { return type == Type::C ? 0 : k; }
  // Pair label with positive index: e(-3) -> 3, x(-2,1) -> (2,1).
  Label pair_label() const;
  std::string str() const;

  friend auto operator<=>(const HGen&, const HGen&) = default;
};

HGen parse_hgen(const std::string& text);

// The generator of index +k (sign Plus) or -k (sign Minus) for a pair label.
HGen pair_generator(const Label& pair, Sign side);
// [X, Y] = pair_scale * c for X = pair_generator(l, Plus), Y = pair_generator(l, Minus):
// 1 for H, k for L.
int pair_scale(const Label& pair);

// Throws InvalidArgument if g does not belong to the given algebra.
void validate_generator(const HeisenbergKind& kind, const HGen& g);

LinComb<HGen> bracket(const HeisenbergKind& kind, const HGen& a, const HGen& b);
LinComb<HGen> bracket(const HeisenbergKind& kind, const LinComb<HGen>& a, const LinComb<HGen>& b);

// Generators with 1 <= |index| <= bound, ordered, plus c.
std::vector<HGen> window_generators(const HeisenbergKind& kind, int bound, bool include_central = true);

struct TriangularSplit {
  std::vector<HGen> plus;   // annihilate the highest weight vector
  std::vector<HGen> minus;  // create
};

TriangularSplit phi_triangular_split(const HeisenbergKind& kind, const PhiFunction& phi, int bound);

// The side (Plus = annihilating, Minus = creating) of a noncentral generator under phi.
Sign phi_side(const PhiFunction& phi, const HGen& g);

}  // namespace loopmod
