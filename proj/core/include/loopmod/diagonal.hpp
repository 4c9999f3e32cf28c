#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "loopmod/heisenberg_module.hpp"
#include "loopmod/phi_function.hpp"
#include "loopmod/truncation.hpp"

namespace loopmod {

// (lambda - r a, lambda + (s - 1) a): the coefficients in
// e_{-j} e_j^r w = (lambda - r a) e_j^{r-1} w and e_j e_{-j}^s w = (lambda + (s-1) a) e_{-j}^{s-1} w
// for w with e_j e_{-j} w = lambda w. Requires r, s >= 1.
std::pair<Scalar, Scalar> eigenvalue_ladder(const Scalar& a, const Scalar& lambda, int r, int s);

// V_{K,theta,a} = U(L) / B with B generated by c - a, x_{-k,j} (k not in K) and
// x_{k,j} x_{-k,j} - theta_{k,j} (k in K).
// Labels: a signed exponent per pair. For k in K the entry p >= 0 stands for y^p
// and p < 0 for the opposite generator to the power -p, where y is x_{k,j}
// (y_choice Plus) or x_{-k,j} (Minus). For k not in K the entry is the power of x_{k,j}.
class DiagonalRealization : public HeisenbergModule {
 public:
  DiagonalRealization(HeisenbergKind kind, std::set<int> K, std::map<Label, Scalar> theta, Scalar a, Truncation trunc,
                      std::map<Label, Sign> y_choice = {}, std::set<int> pairs_filter = {});

  const HeisenbergKind& kind() const override { return kind_; }
  const Scalar& level() const override { return a_; }
  const std::vector<MultiIndex>& basis() const override { return basis_; }
  int window_bound() const override { return trunc_.max_delta_degree; }
  bool handles_pair(const Label& pair) const override;
  std::int64_t degree(const MultiIndex& b) const override;
  MultiIndex zeta_grade(const MultiIndex& b) const override;
  std::string describe() const override;

  const std::set<int>& K() const { return K_; }
  const std::map<Label, Scalar>& theta() const { return theta_; }
  const std::map<Label, Sign>& y_choice() const { return y_choice_; }
  const Truncation& truncation() const { return trunc_; }
  bool in_K(const Label& pair) const { return K_.count(label_degree(pair)) > 0; }
  // Eigenvalue of x_{k,j} x_{-k,j} on v: theta for k in K, 0 otherwise.
  Scalar vacuum_eigenvalue(const Label& pair) const;
  // Eigenvalue of x_{k,j} x_{-k,j} on a basis vector.
  Scalar eigenvalue(const Label& pair, const MultiIndex& b) const;
  // True iff no theta_{k,j} lies in k a Z (a Z for H-kinds).
  bool irreducible() const;

 protected:
  Vec act_noncentral(const HGen& g, const MultiIndex& b) const override;

 private:
  int orientation(const Label& pair) const;
  HeisenbergKind kind_;
  std::set<int> K_;
  std::map<Label, Scalar> theta_;
  Scalar a_;
  Truncation trunc_;
  std::map<Label, Sign> y_choice_;
  std::set<int> filter_;
  std::vector<MultiIndex> basis_;
};

// Validating constructor; a = 0 raises LevelZero.
DiagonalRealization build_V_K_theta(const HeisenbergKind& kind, const std::set<int>& K,
                                    const std::map<Label, Scalar>& theta, const Scalar& a, const Truncation& trunc,
                                    const std::map<Label, Sign>& y_choice = {});

// One straightening coefficient along a ladder: gen applied to the basis vector `from`.
struct LadderCoefficient {
  Label pair;
  MultiIndex from;
  HGen gen;
  Scalar coefficient;
};

// Every coefficient produced by moving one step toward v along a pair ladder.
std::vector<LadderCoefficient> ladder_coefficients(const DiagonalRealization& m);

// A nonzero vector killed by a generator that never kills anything in the
// irreducible case; present iff some theta_{k,j} lies in k a Z within the window.
std::optional<LadderCoefficient> singular_witness(const DiagonalRealization& m);

// Direct check of the two ladder laws on every basis vector and pair, r, s <= max_steps.
CheckResult check_eigen_ladders(const HeisenbergModule& m, int max_steps);
// The operators x_{k,j} x_{-k,j} commute on the window.
CheckResult check_commuting_family(const HeisenbergModule& m);

struct ZInftyGrading {
  MultiIndex designated;
  std::map<MultiIndex, MultiIndex> grade;  // basis label -> Z^infty degree
  bool components_at_most_one = true;
  bool shift_law = true;
};

// Grades every basis vector by its Z^infty degree relative to `designated`
// (a common eigenvector; NotDiagonal otherwise) and verifies the shift law
// x_{+-k,j} V_g in V_{g +- zeta_{k,j}} and that components are at most one-dimensional.
ZInftyGrading z_infty_grade(const HeisenbergModule& m, const MultiIndex& designated);

// Sum of k * g_{k,j}.
std::int64_t compress_grading_F2(const MultiIndex& g);

// Z^infty grading from a Z-graded module with designated generator of degree n_w:
// n_w zeta_1 plus the relative Z^infty degree.
std::map<MultiIndex, MultiIndex> grade_F1(const HeisenbergModule& m, const MultiIndex& designated);

struct AdmissibilityReport {
  std::vector<std::set<HGen>> omega;        // distinct annihilator sets s(v) in the window
  std::vector<std::size_t> maximal;         // indices of maximal elements of omega
  bool admissible = true;                   // every chain has an upper bound in omega
};

AdmissibilityReport admissibility_check(const HeisenbergModule& m);

// Window proxies: a basis vector that is an eigenvector of x_{k,j} x_{-k,j}
// (has_torsion), or of all of them at once (is_diagonal).
bool has_torsion(const HeisenbergModule& m, const Label& pair);
bool is_diagonal(const HeisenbergModule& m);

}  // namespace loopmod
