#include "loopmod/heisenberg.hpp"

#include <cstdlib>
#include <regex>

#include "loopmod/errors.hpp"

namespace loopmod {

HeisenbergKind HeisenbergKind::H_n(int n) {
  if (n < 1) throw InvalidArgument("H_n needs n >= 1");
  HeisenbergKind k;
  k.flavor = Flavor::Hn;
  k.n = n;
  return k;
}

HeisenbergKind HeisenbergKind::H_infinity() { return HeisenbergKind{}; }

HeisenbergKind HeisenbergKind::L(const AffineType& t) {
  HeisenbergKind k;
  k.flavor = Flavor::L;
  k.type = t;
  return k;
}

int HeisenbergKind::multiplicity(int k) const {
  if (k == 0) throw InvalidArgument("multiplicity of index 0");
  switch (flavor) {
    case Flavor::Hn:
      return std::abs(k) <= n ? 1 : 0;
    case Flavor::Hinf:
      return 1;
    case Flavor::L:
      return imaginary_multiplicity(*type, std::abs(k));
  }
  return 0;
}

std::string HeisenbergKind::str() const {
  switch (flavor) {
    case Flavor::Hn:
      return "H_" + std::to_string(n);
    case Flavor::Hinf:
      return "H";
    case Flavor::L:
      return "L(" + type->str() + ")";
  }
  return "?";
}

std::vector<Label> HeisenbergKind::pair_labels(int bound) const {
  std::vector<Label> out;
  for (int k = 1; k <= bound; ++k) {
    if (is_L()) {
      for (int i = 1; i <= multiplicity(k); ++i) out.push_back(IndexPair{k, i});
    } else if (multiplicity(k) > 0) {
      out.push_back(k);
    }
  }
  return out;
}

bool HeisenbergKind::valid_pair_label(const Label& l) const {
  if (is_L()) {
    const auto* p = std::get_if<IndexPair>(&l);
    return p && p->k >= 1 && p->i >= 1 && p->i <= multiplicity(p->k);
  }
  const int* j = std::get_if<int>(&l);
  return j && *j >= 1 && multiplicity(*j) > 0;
}

Label HGen::pair_label() const {
  switch (type) {
    case Type::E:
      return std::abs(k);
    case Type::X:
      return IndexPair{std::abs(k), i};
    case Type::C:
      break;
  }
  throw InvalidArgument("central element has no pair label");
}

std::string HGen::str() const {
  switch (type) {
    case Type::C:
      return "c";
    case Type::E:
      return "e(" + std::to_string(k) + ")";
    case Type::X:
      return "x(" + std::to_string(k) + "," + std::to_string(i) + ")";
  }
  return "?";
}

HGen parse_hgen(const std::string& text) {
  static const std::regex e_re(R"(^\s*e\(\s*(-?\d+)\s*\)\s*$)");
  static const std::regex x_re(R"(^\s*x\(\s*(-?\d+)\s*,\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  if (text == "c") return HGen::c();
  if (std::regex_match(text, m, e_re)) return HGen::e(std::stoi(m[1]));
  if (std::regex_match(text, m, x_re)) return HGen::x(std::stoi(m[1]), std::stoi(m[2]));
  throw InvalidArgument("cannot parse generator: " + text);
}

HGen pair_generator(const Label& pair, Sign side) {
  const int s = side == Sign::Plus ? 1 : -1;
  if (const int* j = std::get_if<int>(&pair)) return HGen::e(s * *j);
  const auto& p = std::get<IndexPair>(pair);
  return HGen::x(s * p.k, p.i);
}

int pair_scale(const Label& pair) { return std::holds_alternative<int>(pair) ? 1 : std::get<IndexPair>(pair).k; }

void validate_generator(const HeisenbergKind& kind, const HGen& g) {
  if (g.type == HGen::Type::C) return;
  if (g.k == 0) throw InvalidArgument("generator index 0 is not allowed: " + g.str());
  if (kind.is_L()) {
    if (g.type != HGen::Type::X) throw InvalidArgument("e-generator used in " + kind.str());
    if (g.i < 1 || g.i > kind.multiplicity(g.k))
      throw InvalidArgument("multiplicity index out of range: " + g.str());
  } else {
    if (g.type != HGen::Type::E) throw InvalidArgument("x-generator used in " + kind.str());
    if (kind.multiplicity(g.k) == 0) throw InvalidArgument("index out of range for " + kind.str() + ": " + g.str());
  }
}

LinComb<HGen> bracket(const HeisenbergKind& kind, const HGen& a, const HGen& b) {
  validate_generator(kind, a);
  validate_generator(kind, b);
  LinComb<HGen> out;
  if (a.is_central() || b.is_central()) return out;
  if (a.k + b.k != 0) return out;
  if (a.type == HGen::Type::E) {
    // [e_i, e_{-i}] = c for i > 0.
    out.add(HGen::c(), Scalar(a.k > 0 ? 1 : -1));
  } else if (a.i == b.i) {
    out.add(HGen::c(), Scalar(a.k));
  }
  return out;
}

LinComb<HGen> bracket(const HeisenbergKind& kind, const LinComb<HGen>& a, const LinComb<HGen>& b) {
  LinComb<HGen> out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) out.add(bracket(kind, ga, gb), ca * cb);
  return out;
}

std::vector<HGen> window_generators(const HeisenbergKind& kind, int bound, bool include_central) {
  std::vector<HGen> out;
  for (const auto& l : kind.pair_labels(bound)) {
    out.push_back(pair_generator(l, Sign::Minus));
    out.push_back(pair_generator(l, Sign::Plus));
  }
  if (include_central) out.push_back(HGen::c());
  return out;
}

Sign phi_side(const PhiFunction& phi, const HGen& g) {
  if (g.is_central()) throw InvalidArgument("c has no side");
  const Label l = g.pair_label();
  const Sign s = phi.at(l);
  // g_{n delta} lies on the side phi(n); g_{-m delta} on the opposite side of phi(m).
  return g.k > 0 ? s : flip(s);
}

TriangularSplit phi_triangular_split(const HeisenbergKind& kind, const PhiFunction& phi, int bound) {
  TriangularSplit split;
  for (const auto& g : window_generators(kind, bound, false))
    (phi_side(phi, g) == Sign::Plus ? split.plus : split.minus).push_back(g);
  return split;
}

}  // namespace loopmod
