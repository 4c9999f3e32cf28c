#include "loopmod/diagonal.hpp"

#include <algorithm>

#include "loopmod/errors.hpp"

namespace loopmod {

namespace {

// lambda with T w = lambda w for T = x_{k,j} x_{-k,j}; nullopt if w is not an eigenvector.
std::optional<Scalar> pair_eigenvalue(const HeisenbergModule& m, const Label& pair, const MultiIndex& w) {
  const Vec tw = m.act(pair_generator(pair, Sign::Plus), m.act(pair_generator(pair, Sign::Minus), w));
  if (tw.is_zero()) return Scalar(0);
  if (tw.size() != 1 || !(tw.begin()->first == w)) return std::nullopt;
  return tw.begin()->second;
}

std::string fmt(const Vec& v) {
  return v.str([](const MultiIndex& x) { return x.str(); });
}

}  // namespace

CheckResult check_eigen_ladders(const HeisenbergModule& m, int max_steps) {
  CheckResult res{"eigenvalue ladders on " + m.describe()};
  const Scalar& a = m.level();
  for (const auto& w : m.basis()) {
    for (const auto& pair : m.window_pairs()) {
      const HGen X = pair_generator(pair, Sign::Plus);
      const HGen Y = pair_generator(pair, Sign::Minus);
      const Scalar ka = Scalar(pair_scale(pair)) * a;
      std::optional<Scalar> lambda;
      try {
        lambda = pair_eigenvalue(m, pair, w);
      } catch (const TruncationOverflow&) {
        ++res.skipped;
        continue;
      }
      if (!lambda) {
        res.fail(w.str() + " is not an eigenvector for pair " + label_str(pair));
        continue;
      }
      for (const auto& [G, H, up] : {std::tuple{X, Y, true}, std::tuple{Y, X, false}}) {
        Vec cur(w);
        for (int step = 1; step <= max_steps; ++step) {
          try {
            const Vec next = m.act(G, cur);
            const auto [down_coeff, up_coeff] = eigenvalue_ladder(ka, *lambda, step, step);
            const Scalar coeff = up ? down_coeff : up_coeff;
            const Vec lhs = m.act(H, next);
            ++res.cases;
            if (!(lhs == coeff * cur))
              res.fail((up ? "e_{-j} e_j^" : "e_j e_{-j}^") + std::to_string(step) + " on " + w.str() + " pair " +
                       label_str(pair) + ": " + fmt(lhs));
            cur = next;
          } catch (const TruncationOverflow&) {
            ++res.skipped;
            break;
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_commuting_family(const HeisenbergModule& m) {
  CheckResult res{"commuting family on " + m.describe()};
  const auto pairs = m.window_pairs();
  auto T = [&](const Label& l, const Vec& v) {
    return m.act(pair_generator(l, Sign::Plus), m.act(pair_generator(l, Sign::Minus), v));
  };
  for (const auto& b : m.basis())
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        try {
          const Vec v(b);
          ++res.cases;
          if (!(T(pairs[i], T(pairs[j], v)) == T(pairs[j], T(pairs[i], v))))
            res.fail("T" + label_str(pairs[i]) + " and T" + label_str(pairs[j]) + " differ on " + b.str());
        } catch (const TruncationOverflow&) {
          ++res.skipped;
        }
      }
  return res;
}

ZInftyGrading z_infty_grade(const HeisenbergModule& m, const MultiIndex& designated) {
  if (!m.in_basis(designated)) throw InvalidArgument("designated vector is not a basis label");
  ZInftyGrading z;
  z.designated = designated;
  std::map<Label, Scalar> lambda;
  for (const auto& pair : m.window_pairs()) {
    try {
      auto l = pair_eigenvalue(m, pair, designated);
      if (!l) throw NotDiagonal(designated.str() + " is not an eigenvector for pair " + label_str(pair));
      lambda[pair] = *l;
    } catch (const TruncationOverflow&) {
    }
  }
  const MultiIndex base = m.zeta_grade(designated);
  std::set<MultiIndex> seen;
  for (const auto& b : m.basis()) {
    const MultiIndex g = m.zeta_grade(b) - base;
    z.grade[b] = g;
    if (!seen.insert(g).second) z.components_at_most_one = false;
  }
  const Scalar& a = m.level();
  for (const auto& b : m.basis()) {
    for (const auto& gen : m.window_gens(false)) {
      try {
        const Label pair = gen.pair_label();
        const MultiIndex want = z.grade[b].plus(pair, gen.k > 0 ? 1 : -1);
        for (const auto& [t, c] : m.act(gen, b)) {
          (void)c;
          if (!(m.zeta_grade(t) - base == want)) z.shift_law = false;
        }
        // The eigenvalue on b is pinned by its grade: lambda_w - g * k a.
        if (auto it = lambda.find(pair); it != lambda.end() && gen.k > 0) {
          const auto l = pair_eigenvalue(m, pair, b);
          const Scalar want_l = it->second - Scalar(z.grade[b].get(pair)) * Scalar(pair_scale(pair)) * a;
          if (!l || *l != want_l) z.shift_law = false;
        }
      } catch (const TruncationOverflow&) {
      }
    }
  }
  return z;
}

std::int64_t compress_grading_F2(const MultiIndex& g) { return z_degree(g); }

std::map<MultiIndex, MultiIndex> grade_F1(const HeisenbergModule& m, const MultiIndex& designated) {
  const auto pairs = m.kind().pair_labels(1);
  if (pairs.empty()) throw InvalidArgument("algebra has no index 1");
  const Label zeta1 = pairs.front();
  const std::int64_t n_w = m.degree(designated);
  const MultiIndex base = m.zeta_grade(designated);
  std::map<MultiIndex, MultiIndex> out;
  for (const auto& b : m.basis()) out[b] = (m.zeta_grade(b) - base).plus(zeta1, n_w);
  return out;
}

AdmissibilityReport admissibility_check(const HeisenbergModule& m) {
  AdmissibilityReport rep;
  std::set<std::set<HGen>> distinct;
  for (const auto& b : m.basis()) {
    std::set<HGen> s;
    for (const auto& g : m.window_gens(false)) {
      try {
        if (m.act(g, b).is_zero()) s.insert(g);
      } catch (const TruncationOverflow&) {
      }
    }
    distinct.insert(std::move(s));
  }
  rep.omega.assign(distinct.begin(), distinct.end());
  auto subset = [](const std::set<HGen>& x, const std::set<HGen>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  for (std::size_t i = 0; i < rep.omega.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < rep.omega.size(); ++j)
      if (i != j && subset(rep.omega[i], rep.omega[j])) maximal = false;
    if (maximal) rep.maximal.push_back(i);
  }
  // A chain is bounded iff its top element lies below some maximal element.
  for (const auto& x : rep.omega) {
    bool bounded = false;
    for (std::size_t j : rep.maximal) bounded = bounded || subset(x, rep.omega[j]);
    rep.admissible = rep.admissible && bounded;
  }
  return rep;
}

bool has_torsion(const HeisenbergModule& m, const Label& pair) {
  for (const auto& b : m.basis()) {
    try {
      if (pair_eigenvalue(m, pair, b)) return true;
    } catch (const TruncationOverflow&) {
    }
  }
  return false;
}

bool is_diagonal(const HeisenbergModule& m) {
  const auto pairs = m.window_pairs();
  for (const auto& b : m.basis()) {
    bool all = true;
    for (const auto& pair : pairs) {
      try {
        if (!pair_eigenvalue(m, pair, b)) all = false;
      } catch (const TruncationOverflow&) {
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace loopmod
