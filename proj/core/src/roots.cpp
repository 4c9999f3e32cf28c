#include "loopmod/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

#include "loopmod/errors.hpp"

namespace loopmod {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix zeros(int n) { return Matrix(n, std::vector<int>(n, 0)); }

void link(Matrix& g, int i, int j, int v) {
  g[i][j] = v;
  g[j][i] = v;
}

// Gram matrices with short roots of norm 2. Bourbaki numbering, 0-based here.
Matrix gram_matrix(FiniteType t) {
  const int n = t.rank;
  Matrix g = zeros(n);
  switch (t.letter) {
    case 'A':
      if (n < 1) break;
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      return g;
    case 'B':
      if (n < 2) break;
      for (int i = 0; i < n - 1; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -2);
      return g;
    case 'C':
      if (n < 1) break;
      if (n == 1) {
        g[0][0] = 4;
        return g;
      }
      for (int i = 0; i < n - 1; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 2, n - 1, -2);
      return g;
    case 'D':
      if (n < 3) break;
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 3, n - 1, -1);
      return g;
    case 'E':
      if (n < 6 || n > 8) break;
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(g, i, i + 1, -1);
      return g;
    case 'F':
      if (n != 4) break;
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(g, 0, 1, -2);
      link(g, 1, 2, -2);
      link(g, 2, 3, -1);
      return g;
    case 'G':
      if (n != 2) break;
      g[0][0] = 2;
      g[1][1] = 6;
      link(g, 0, 1, -3);
      return g;
    default:
      break;
  }
  throw InvalidArgument("unsupported finite type " + t.str());
}

int height(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

bool root_less(const std::vector<int>& a, const std::vector<int>& b) {
  const int ha = height(a);
  const int hb = height(b);
  return ha != hb ? ha < hb : a < b;
}

Root make_root(const std::vector<int>& coords, const Scalar& scale, const Scalar& delta) {
  Root r;
  r.finite_part.reserve(coords.size());
  for (int c : coords) r.finite_part.push_back(Scalar(c) * scale);
  r.delta = delta;
  return r;
}

}  // namespace

std::string FiniteType::str() const { return std::string(1, letter) + std::to_string(rank); }

int FiniteRootSystem::norm(const std::vector<int>& root) const {
  int s = 0;
  for (std::size_t i = 0; i < root.size(); ++i)
    for (std::size_t j = 0; j < root.size(); ++j) s += root[i] * gram[i][j] * root[j];
  return s;
}

FiniteRootSystem finite_root_system(FiniteType t) {
  FiniteRootSystem sys;
  sys.type = t;
  sys.gram = gram_matrix(t);
  const int n = t.rank;
  sys.cartan = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sys.cartan[i][j] = 2 * sys.gram[i][j] / sys.gram[i][i];

  // Grow by height using alpha-strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * sys.cartan[i][j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  sys.positive_roots.assign(known.begin(), known.end());
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end(), root_less);
  int max_norm = 0;
  for (const auto& r : sys.positive_roots) max_norm = std::max(max_norm, sys.norm(r));
  for (const auto& r : sys.positive_roots) sys.is_long.push_back(sys.norm(r) == max_norm);
  return sys;
}

std::string AffineType::str() const {
  return std::string(1, kac_letter) + "_" + std::to_string(kac_rank) + "^(" + std::to_string(r) + ")";
}

AffineType untwisted(char letter, int rank) {
  AffineType t;
  t.base = FiniteType{letter, rank};
  t.r = 1;
  t.kac_letter = letter;
  t.kac_rank = rank;
  gram_matrix(t.base);  // validates
  if ((letter == 'B' || letter == 'C') && rank < 2) throw InvalidArgument("unsupported type " + t.str());
  return t;
}

AffineType parse_affine_type(const std::string& name) {
  static const std::regex re(R"(^\s*([A-Ga-g])_?\{?(\d+)\}?\^\{?\((\d)\)\}?\s*$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw InvalidArgument("cannot parse affine type: " + name);
  const char letter = static_cast<char>(std::toupper(m[1].str()[0]));
  const int n = std::stoi(m[2].str());
  const int r = std::stoi(m[3].str());
  if (r == 1) return untwisted(letter, n);
  AffineType t;
  t.r = r;
  t.kac_letter = letter;
  t.kac_rank = n;
  if (r == 2 && letter == 'A' && n >= 2 && n % 2 == 0) {
    t.base = FiniteType{'C', n / 2};
    t.is_A2l2 = true;
  } else if (r == 2 && letter == 'A' && n >= 3) {
    t.base = FiniteType{'C', (n + 1) / 2};
  } else if (r == 2 && letter == 'D' && n >= 3) {
    t.base = FiniteType{'B', n - 1};
  } else if (r == 2 && letter == 'E' && n == 6) {
    t.base = FiniteType{'F', 4};
  } else if (r == 3 && letter == 'D' && n == 4) {
    t.base = FiniteType{'G', 2};
  } else {
    throw InvalidArgument("no such affine type: " + name);
  }
  return t;
}

bool Root::is_imaginary() const {
  return std::all_of(finite_part.begin(), finite_part.end(), [](const Scalar& s) { return s.is_zero(); }) &&
         !delta.is_zero();
}

bool Root::is_zero() const {
  return delta.is_zero() &&
         std::all_of(finite_part.begin(), finite_part.end(), [](const Scalar& s) { return s.is_zero(); });
}

Root Root::operator+(const Root& o) const {
  if (finite_part.size() != o.finite_part.size()) throw InvalidArgument("root rank mismatch");
  Root r = *this;
  for (std::size_t i = 0; i < finite_part.size(); ++i) r.finite_part[i] += o.finite_part[i];
  r.delta += o.delta;
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& s : r.finite_part) s = -s;
  r.delta = -r.delta;
  return r;
}

std::string Root::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < finite_part.size(); ++i) s += (i ? "," : "") + finite_part[i].str();
  return s + ";" + delta.str() + ")";
}

Root imaginary_root(int rank, const Scalar& k) {
  Root r;
  r.finite_part.assign(rank, Scalar(0));
  r.delta = k;
  return r;
}

std::set<Root> positive_real_roots(const AffineType& t, const Truncation& trunc) {
  trunc.validate();
  const auto sys = finite_root_system(t.base);
  const int bound = trunc.max_delta_degree;
  std::set<Root> out;
  for (std::size_t idx = 0; idx < sys.positive_roots.size(); ++idx) {
    const auto& alpha = sys.positive_roots[idx];
    const bool is_long = sys.is_long[idx];
    for (int n = -bound; n <= bound; ++n) {
      if (t.r == 1) {
        out.insert(make_root(alpha, 1, n));
      } else if (!t.is_A2l2) {
        if (!is_long || n % t.r == 0) out.insert(make_root(alpha, 1, n));
      } else {
        if (!is_long || n % 2 == 0) out.insert(make_root(alpha, 1, n));
      }
    }
    if (t.is_A2l2 && is_long) {
      // (alpha + (2n-1) delta) / 2 with |2n-1| <= 2 * bound.
      for (int odd = -2 * bound + 1; odd <= 2 * bound - 1; odd += 2)
        out.insert(make_root(alpha, Scalar(1, 2), Scalar(odd, 2)));
    }
  }
  return out;
}

std::set<Root> roots_in_window(const AffineType& t, const Truncation& trunc) {
  std::set<Root> out;
  for (const auto& r : positive_real_roots(t, trunc)) {
    out.insert(r);
    out.insert(-r);
  }
  for (int k = 1; k <= trunc.max_delta_degree; ++k) {
    out.insert(imaginary_root(t.rank(), k));
    out.insert(imaginary_root(t.rank(), -k));
  }
  return out;
}

int imaginary_multiplicity(const AffineType& t, int k) {
  if (k == 0) throw InvalidArgument("imaginary_multiplicity: k must be nonzero");
  const int l = t.rank();
  if (t.r == 1) return l;
  if (k % t.r == 0) return l;
  return (t.kac_rank - l) / (t.r - 1);
}

bool is_partition(const AffineType& t, const RootPartition& p, const Truncation& trunc) {
  const auto all = roots_in_window(t, trunc);
  std::set<Root> neg;
  for (const auto& r : p.plus) neg.insert(-r);
  if (neg != p.minus) return false;
  for (const auto& r : p.plus)
    if (p.minus.count(r) || !all.count(r)) return false;
  return p.plus.size() + p.minus.size() == all.size();
}

ClosureReport is_closed_partition(const AffineType& t, const RootPartition& p, const Truncation& trunc,
                                  ClosureRule rule) {
  const auto all = roots_in_window(t, trunc);
  ClosureReport rep;
  for (const auto& a : p.plus) {
    for (const auto& b : p.plus) {
      if (b < a) continue;
      if (rule == ClosureRule::BracketEffective && a.is_imaginary() && b.is_imaginary()) continue;
      const Root s = a + b;
      if (all.count(s) && !p.plus.count(s)) {
        rep.closed = false;
        rep.witness = std::make_pair(a, b);
        return rep;
      }
    }
  }
  return rep;
}

RootPartition standard_partition(const AffineType& t, const Truncation& trunc) {
  return build_S_phi(t, PhiFunction::constant(Sign::Plus), trunc);
}

RootPartition build_S_phi(const AffineType& t, const PhiFunction& phi, const Truncation& trunc) {
  RootPartition p;
  p.plus = positive_real_roots(t, trunc);
  for (int n = 1; n <= trunc.max_delta_degree; ++n)
    p.plus.insert(imaginary_root(t.rank(), phi(n) == Sign::Plus ? n : -n));
  for (const auto& r : p.plus) p.minus.insert(-r);
  return p;
}

}  // namespace loopmod
