#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopmod/phi_function.hpp"
#include "loopmod/scalar.hpp"
#include "loopmod/truncation.hpp"

namespace loopmod {

struct FiniteType {
  char letter = 'A';
  int rank = 1;
  std::string str() const;
  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

// Positive roots of a finite root system in simple-root coordinates.
struct FiniteRootSystem {
  FiniteType type;
  std::vector<std::vector<int>> gram;    // (alpha_i, alpha_j), integer normalized
  std::vector<std::vector<int>> cartan;  // <alpha_i^vee, alpha_j>
  std::vector<std::vector<int>> positive_roots;  // sorted by height, then lex
  std::vector<bool> is_long;                     // parallel to positive_roots

  int norm(const std::vector<int>& root) const;
  std::size_t num_positive() const { return positive_roots.size(); }
};

// Builds the root data from a hard-coded Gram matrix (Bourbaki labeling, rank <= 8).
FiniteRootSystem finite_root_system(FiniteType t);

// Affine type X_N^(r). `base` is the finite type whose roots parametrize the real
// roots; `kac_rank` is N.
struct AffineType {
  FiniteType base;
  int r = 1;
  bool is_A2l2 = false;
  char kac_letter = 'A';
  int kac_rank = 1;

  int rank() const { return base.rank; }
  std::string str() const;
  friend bool operator==(const AffineType&, const AffineType&) = default;
};

AffineType parse_affine_type(const std::string& name);
AffineType untwisted(char letter, int rank);

// alpha + n*delta with alpha given in simple-root coordinates.
struct Root {
  std::vector<Scalar> finite_part;
  Scalar delta;

  bool is_imaginary() const;
  bool is_zero() const;
  Root operator+(const Root& o) const;
  Root operator-() const;
  std::string str() const;

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
};

Root imaginary_root(int rank, const Scalar& k);

// Positive real roots with |delta coefficient| <= trunc.max_delta_degree.
std::set<Root> positive_real_roots(const AffineType& t, const Truncation& trunc);
// All roots (real and imaginary) within the same window.
std::set<Root> roots_in_window(const AffineType& t, const Truncation& trunc);

int imaginary_multiplicity(const AffineType& t, int k);

struct RootPartition {
  std::set<Root> plus;
  std::set<Root> minus;
};

enum class ClosureRule {
  // alpha, beta in S and alpha+beta a root imply alpha+beta in S.
  Literal,
  // Same, but pairs of imaginary roots are skipped: their root vectors bracket into
  // the center, never into a root space.
  BracketEffective,
};

struct ClosureReport {
  bool closed = true;
  std::optional<std::pair<Root, Root>> witness;
};

// Checks plus = -minus and plus u minus = all window roots.
bool is_partition(const AffineType& t, const RootPartition& p, const Truncation& trunc);

ClosureReport is_closed_partition(const AffineType& t, const RootPartition& p, const Truncation& trunc,
                                  ClosureRule rule = ClosureRule::BracketEffective);

RootPartition standard_partition(const AffineType& t, const Truncation& trunc);
RootPartition build_S_phi(const AffineType& t, const PhiFunction& phi, const Truncation& trunc);

}  // namespace loopmod
