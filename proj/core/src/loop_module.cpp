#include "loopmod/loop_module.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "loopmod/errors.hpp"
#include "loopmod/phi_verma.hpp"

namespace loopmod {

namespace {

using Word = std::vector<std::pair<GBasis, int>>;

// Positive root beta with z in g_{-beta + n delta} for a negative real root vector z.
std::vector<int> negative_beta(const LoopAlgebra& g, const GBasis& z) {
  auto v = g.finite_root(z.row, z.col);
  for (auto& c : v) c = -c;
  return v;
}

std::vector<long> pbw_key(const LoopAlgebra& g, const GBasis& z) {
  if (z.is_imag()) return {0, std::abs(z.power), z.index, z.power};
  if (!z.is_real()) throw std::logic_error("no PBW key for " + z.str());
  const auto beta = negative_beta(g, z);
  std::vector<long> key{1, std::accumulate(beta.begin(), beta.end(), 0)};
  key.insert(key.end(), beta.begin(), beta.end());
  key.push_back(z.power);
  return key;
}

void enumerate_words(const std::vector<GBasis>& gens, const std::vector<int>& weight, std::size_t pos, int exp_cap,
                     int count_left, int weight_left, Word& cur, std::vector<Word>& out) {
  if (pos == gens.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= exp_cap && e <= count_left && e * weight[pos] <= weight_left; ++e) {
    if (e > 0) cur.emplace_back(gens[pos], e);
    enumerate_words(gens, weight, pos + 1, exp_cap, count_left - e, weight_left - e * weight[pos], cur, out);
    if (e > 0) cur.pop_back();
  }
}

Word merge_words(const LoopAlgebra& g, const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& x, const auto& y) { return pbw_less(g, x.first, y.first); });
  return out;
}

}  // namespace

bool LoopLabel::has_real_factor() const {
  return std::any_of(word.begin(), word.end(), [](const auto& f) { return f.first.is_real(); });
}

std::string LoopLabel::str() const {
  std::string s;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    s += it->first.str() + (it->second > 1 ? "^" + std::to_string(it->second) : "") + " ";
  return s + "(x) " + inner.str();
}

std::string loop_vec_str(const LoopVec& v) {
  return v.str([](const LoopLabel& l) { return "[" + l.str() + "]"; });
}

int WeightKey::height() const { return std::accumulate(beta.begin(), beta.end(), 0); }

std::string WeightKey::str() const {
  std::string s = "beta=(";
  for (std::size_t i = 0; i < beta.size(); ++i) s += (i ? "," : "") + std::to_string(beta[i]);
  return s + "), n=" + std::to_string(n);
}

bool pbw_less(const LoopAlgebra& g, const GBasis& a, const GBasis& b) { return pbw_key(g, a) < pbw_key(g, b); }

InducedModule::InducedModule(Spec spec) : spec_(std::move(spec)) {
  const LoopAlgebra& g = *spec_.algebra;
  spec_.real_trunc.validate();
  spec_.imag_trunc.validate();
  if (static_cast<int>(spec_.lambda.h.size()) != g.rank())
    throw InvalidArgument("lambda needs " + std::to_string(g.rank()) + " Cartan values");
  if (spec_.inner->level() != spec_.lambda.c)
    throw InvalidArgument("level mismatch: lambda(c) = " + spec_.lambda.c.str() + " but V has level " +
                          spec_.inner->level().str());
  if (!(spec_.inner->kind() == g.heisenberg_kind()))
    throw InvalidArgument("inner module is over " + spec_.inner->kind().str() + ", expected " +
                          g.heisenberg_kind().str());

  std::vector<GBasis> reals;
  for (const auto& z : g.window_basis(spec_.real_trunc.max_delta_degree))
    if (z.is_negative_real()) {
      if (!is_negative(z)) throw InvalidArgument("negative real root vector " + z.str() + " not in the negative part");
      reals.push_back(z);
    }
  auto by_pbw = [&](const GBasis& a, const GBasis& b) { return pbw_less(g, a, b); };
  std::sort(reals.begin(), reals.end(), by_pbw);
  std::vector<int> heights;
  for (const auto& z : reals) {
    const auto beta = negative_beta(g, z);
    heights.push_back(std::accumulate(beta.begin(), beta.end(), 0));
  }
  std::vector<Word> real_words;
  Word cur;
  enumerate_words(reals, heights, 0, spec_.real_trunc.max_exponent, spec_.real_trunc.max_total_degree,
                  spec_.real_trunc.max_real_height, cur, real_words);

  auto imags = spec_.imag_negatives;
  for (const auto& y : imags)
    if (!y.is_imag() || !is_negative(y)) throw InvalidArgument(y.str() + " is not an imaginary negative generator");
  std::sort(imags.begin(), imags.end(), by_pbw);
  std::vector<Word> imag_words;
  enumerate_words(imags, std::vector<int>(imags.size(), 0), 0, spec_.imag_trunc.max_exponent,
                  spec_.imag_trunc.max_total_degree, 0, cur, imag_words);

  for (const auto& r : real_words)
    for (const auto& i : imag_words) pbw_.push_back(merge_words(g, i, r));
  std::sort(pbw_.begin(), pbw_.end());
  for (const auto& w : pbw_)
    for (const auto& b : spec_.inner->basis()) basis_.push_back(LoopLabel{w, b});
  std::sort(basis_.begin(), basis_.end());
}

bool InducedModule::in_basis(const LoopLabel& l) const { return std::binary_search(basis_.begin(), basis_.end(), l); }

Scalar InducedModule::lambda_on_cartan(int i) const {
  // u_i = sum_p (d_1 + ... + d_p) H_p for diagonal entries d of u_i.
  const auto& d = algebra().cartan_diag(i);
  Scalar partial(0);
  Scalar out(0);
  for (int p = 0; p < algebra().rank(); ++p) {
    partial += d[p];
    out += partial * spec_.lambda.h[p];
  }
  return out;
}

WeightKey InducedModule::weight(const LoopLabel& l) const {
  WeightKey w;
  w.beta.assign(algebra().rank(), 0);
  w.n = spec_.inner->degree(l.inner);
  for (const auto& [z, p] : l.word) {
    w.n += static_cast<std::int64_t>(p) * z.power;
    if (z.is_real()) {
      const auto beta = negative_beta(algebra(), z);
      for (std::size_t i = 0; i < beta.size(); ++i) w.beta[i] += p * beta[i];
    }
  }
  return w;
}

LoopVec InducedModule::act(const GBasis& x, const LoopLabel& l) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find({x, l});
    if (it != memo_.end()) return it->second;
  }
  LoopVec out = act_uncached(x, l);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::make_pair(x, l), out);
  return out;
}

LoopVec InducedModule::act(const GBasis& x, const LoopVec& v) const {
  LoopVec out;
  for (const auto& [l, c] : v) out.add(act(x, l), c);
  return out;
}

LoopVec InducedModule::act(const LoopElement& x, const LoopVec& v) const {
  LoopVec out;
  for (const auto& [g, c] : x) out.add(act(g, v), c);
  return out;
}

LoopVec InducedModule::act_uncached(const GBasis& x, const LoopLabel& l) const {
  const LoopAlgebra& g = algebra();
  switch (x.type) {
    case GBasis::Type::C:
      return LoopVec(l, level());
    case GBasis::Type::D:
      return LoopVec(l, spec_.lambda.d + Scalar(weight(l).n));
    case GBasis::Type::Cartan: {
      const WeightKey w = weight(l);
      const auto& d = g.cartan_diag(x.index);
      Scalar beta_on_u(0);
      for (int p = 0; p < g.rank(); ++p) beta_on_u += Scalar(w.beta[p]) * (d[p] - d[p + 1]);
      return LoopVec(l, lambda_on_cartan(x.index) - beta_on_u);
    }
    default:
      break;
  }
  const bool neg = is_negative(x);
  if (l.word.empty()) {
    if (neg) return LoopVec(LoopLabel{{{x, 1}}, l.inner});
    if (x.is_imag()) {
      const HGen h = g.to_hgen(x);
      if (!spec_.inner->handles(h)) return {};
      LoopVec out;
      for (const auto& [b, c] : spec_.inner->act(h, l.inner)) out.add(LoopLabel{{}, b}, c);
      return out;
    }
    return {};  // positive real root vectors kill V
  }
  const GBasis z = l.word.back().first;
  if (neg && !pbw_less(g, x, z)) {
    LoopLabel r = l;
    if (x == z)
      r.word.back().second += 1;
    else
      r.word.emplace_back(x, 1);
    return LoopVec(r);
  }
  // x z u' v = z (x u' v) + [x, z] u' v
  LoopLabel rest = l;
  if (--rest.word.back().second == 0) rest.word.pop_back();
  LoopVec out = act(z, act(x, rest));
  out.add(act(g.bracket(x, z), LoopVec(rest)));
  return out;
}

std::map<WeightKey, std::size_t> InducedModule::weight_dimensions() const {
  std::map<WeightKey, std::size_t> dims;
  for (const auto& b : basis_) ++dims[weight(b)];
  return dims;
}

std::vector<LoopLabel> InducedModule::strip() const {
  std::vector<LoopLabel> out;
  for (const auto& b : basis_)
    if (!b.has_real_factor()) out.push_back(b);
  return out;
}

std::size_t InducedModule::memo_size() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return memo_.size();
}

InducedPtr build_generalized_loop(std::shared_ptr<const LoopAlgebra> g, const CartanWeight& lambda, ModulePtr V,
                                  const Truncation& trunc) {
  InducedModule::Spec s;
  s.algebra = std::move(g);
  s.lambda = lambda;
  s.inner = std::move(V);
  s.negative = [](const GBasis& z) { return z.is_negative_real(); };
  s.real_trunc = trunc;
  s.imag_trunc = trunc;
  s.name = "M(lambda, " + s.inner->describe() + ")";
  return std::make_shared<InducedModule>(std::move(s));
}

namespace {

std::vector<GBasis> imaginary_negatives(const LoopAlgebra& g, int bound,
                                        const std::function<bool(const GBasis&)>& negative) {
  std::vector<GBasis> out;
  for (const auto& z : g.window_basis(bound))
    if (z.is_imag() && negative(z)) out.push_back(z);
  return out;
}

}  // namespace

InducedPtr build_M_phi_lambda(std::shared_ptr<const LoopAlgebra> g, const PhiFunction& phi,
                              const CartanWeight& lambda, const Truncation& trunc, const Truncation& imag_trunc) {
  InducedModule::Spec s;
  s.algebra = g;
  s.lambda = lambda;
  s.inner = std::make_shared<TrivialModule>(g->heisenberg_kind(), lambda.c, imag_trunc.max_delta_degree);
  s.negative = [g, phi](const GBasis& z) {
    if (z.is_negative_real()) return true;
    return z.is_imag() && phi_side(phi, g->to_hgen(z)) == Sign::Minus;
  };
  s.real_trunc = trunc;
  s.imag_negatives = imaginary_negatives(*g, imag_trunc.max_delta_degree, s.negative);
  s.imag_trunc = imag_trunc;
  s.name = "M_phi(lambda)";
  return std::make_shared<InducedModule>(std::move(s));
}

InducedPtr build_M_phi_lambda_via_loop(std::shared_ptr<const LoopAlgebra> g, const PhiFunction& phi,
                                       const CartanWeight& lambda, const Truncation& trunc,
                                       const Truncation& imag_trunc) {
  auto V = std::make_shared<PhiVermaModule>(g->heisenberg_kind(), phi, lambda.c, imag_trunc);
  return build_generalized_loop(std::move(g), lambda, std::move(V), trunc);
}

PartialLoop build_partial_loop(std::shared_ptr<const LoopAlgebra> g, const std::set<int>& I, const PhiFunction& phi,
                               ModulePtr N, const CartanWeight& lambda, const Truncation& trunc,
                               const Truncation& imag_trunc) {
  const auto kind = g->heisenberg_kind();
  const int bound = imag_trunc.max_delta_degree;
  for (const auto& l : kind.pair_labels(bound)) {
    const bool in_I = I.count(label_degree(l)) > 0;
    if (N->handles_pair(l) != in_I)
      throw InvalidArgument("N must be a module over exactly the pairs with index in I");
  }
  std::set<int> rest;
  for (int k = 1; k <= bound; ++k)
    if (!I.count(k)) rest.insert(k);
  PartialLoop out;
  ModulePtr verma;
  if (rest.empty()) {
    verma = std::make_shared<TrivialModule>(kind, lambda.c, bound);
  } else {
    verma = std::make_shared<PhiVermaModule>(kind, phi, lambda.c, imag_trunc, rest);
  }
  out.V = std::make_shared<TensorModule>(N, verma);
  out.via_V = build_generalized_loop(g, lambda, out.V, trunc);

  InducedModule::Spec s;
  s.algebra = g;
  s.lambda = lambda;
  s.inner = N;
  s.negative = [g, phi, I](const GBasis& z) {
    if (z.is_negative_real()) return true;
    if (!z.is_imag() || I.count(std::abs(z.power))) return false;
    return phi_side(phi, g->to_hgen(z)) == Sign::Minus;
  };
  s.real_trunc = trunc;
  s.imag_negatives = imaginary_negatives(*g, bound, s.negative);
  s.imag_trunc = imag_trunc;
  s.name = "U(g) (x)_{U(K + g_R)} N";
  out.direct = std::make_shared<InducedModule>(std::move(s));
  return out;
}

CheckResult check_loop_representation(const InducedModule& m, int gen_bound) {
  CheckResult res{"representation property on " + m.name()};
  const auto gens = m.algebra().window_basis(gen_bound);
  for (const auto& b : m.basis()) {
    const LoopVec v(b);
    for (const auto& x : gens)
      for (const auto& y : gens) {
        if (y < x) continue;
        try {
          const LoopVec lhs = m.act(x, m.act(y, v)) - m.act(y, m.act(x, v));
          const LoopVec rhs = m.act(m.algebra().bracket(x, y), v);
          ++res.cases;
          if (!(lhs == rhs)) res.fail("[" + x.str() + "," + y.str() + "] on " + b.str());
        } catch (const TruncationOverflow&) {
          ++res.skipped;
        }
      }
  }
  return res;
}

CheckResult check_freeness(const InducedModule& m) {
  CheckResult res{"freeness over the negative part of " + m.name()};
  if (m.basis().size() != m.pbw_monomials().size() * m.inner().basis().size())
    res.fail("basis size is not |PBW| x |V|");
  for (const auto& b : m.basis()) {
    LoopVec v(LoopLabel{{}, b.inner});
    for (const auto& [z, p] : b.word)
      for (int t = 0; t < p; ++t) v = m.act(z, v);
    ++res.cases;
    if (!(v == LoopVec(b))) res.fail("PBW word of " + b.str() + " does not produce the label");
  }
  return res;
}

CheckResult check_support_formula(const InducedModule& m, int height, int n_bound,
                                  const std::optional<std::set<std::int64_t>>& strip_degrees) {
  CheckResult res{"support formula on " + m.name()};
  const int l = m.algebra().rank();
  auto in_window = [&](const WeightKey& w) { return w.height() <= height && std::llabs(w.n) <= n_bound; };
  std::set<WeightKey> actual;
  for (const auto& b : m.basis()) {
    const WeightKey w = m.weight(b);
    if (in_window(w)) actual.insert(w);
  }
  std::set<WeightKey> expected;
  std::vector<int> beta(l, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == l) {
      const bool zero = std::all_of(beta.begin(), beta.end(), [](int c) { return c == 0; });
      for (std::int64_t n = -n_bound; n <= n_bound; ++n)
        if (!zero || !strip_degrees || strip_degrees->count(n)) expected.insert(WeightKey{beta, n});
      return;
    }
    for (int c = 0; c <= left; ++c) {
      beta[pos] = c;
      rec(pos + 1, left - c);
    }
    beta[pos] = 0;
  };
  rec(0, height);
  res.cases = expected.size();
  for (const auto& w : expected)
    if (!actual.count(w)) {
      res.fail("missing weight " + w.str());
      break;
    }
  for (const auto& w : actual)
    if (!expected.count(w)) {
      res.fail("unexpected weight " + w.str());
      break;
    }
  return res;
}

CheckResult check_weight_convolution(const InducedModule& m) {
  CheckResult res{"weight dimensions as a convolution on " + m.name()};
  std::map<std::int64_t, std::size_t> inner_dims;
  for (const auto& b : m.inner().basis()) ++inner_dims[m.inner().degree(b)];
  std::map<WeightKey, std::size_t> conv;
  for (const auto& w : m.pbw_monomials()) {
    const WeightKey base = m.weight(LoopLabel{w, MultiIndex{}});
    for (const auto& [deg, dim] : inner_dims) {
      WeightKey k = base;
      k.n += deg - m.inner().degree(MultiIndex{});
      conv[k] += dim;
    }
  }
  const auto dims = m.weight_dimensions();
  res.cases = dims.size();
  if (dims != conv) res.fail("weight dimensions differ from the PBW x V convolution");
  return res;
}

CheckResult check_strip(const InducedModule& m) {
  CheckResult res{"strip of " + m.name()};
  const bool compare_inner = m.spec().imag_negatives.empty();
  for (const auto& b : m.strip()) {
    for (const auto& x : m.algebra().window_basis(m.inner().window_bound())) {
      if (!x.is_imag()) continue;
      try {
        const LoopVec img = m.act(x, b);
        ++res.cases;
        for (const auto& [t, c] : img) {
          (void)c;
          if (t.has_real_factor()) res.fail(x.str() + " moves " + b.str() + " off the strip");
        }
        if (compare_inner) {
          const HGen h = m.algebra().to_hgen(x);
          LoopVec want;
          if (m.inner().handles(h))
            for (const auto& [t, c] : m.inner().act(h, b.inner)) want.add(LoopLabel{{}, t}, c);
          if (!(img == want)) res.fail(x.str() + " on " + b.str() + " differs from the action on V");
        }
      } catch (const TruncationOverflow&) {
        ++res.skipped;
      }
    }
  }
  return res;
}

namespace {

LoopLabel to_loop_form(const LoopLabel& direct) {
  LoopLabel out;
  out.inner = direct.inner;
  for (const auto& [z, p] : direct.word) {
    if (z.is_imag())
      out.inner = out.inner.plus(IndexPair{std::abs(z.power), z.index}, p);
    else
      out.word.emplace_back(z, p);
  }
  return out;
}

}  // namespace

CheckResult compare_constructions(const InducedModule& direct, const InducedModule& via_loop, int gen_bound) {
  CheckResult res{"direct and loop constructions agree"};
  std::set<LoopLabel> mapped;
  for (const auto& b : direct.basis()) mapped.insert(to_loop_form(b));
  const std::set<LoopLabel> target(via_loop.basis().begin(), via_loop.basis().end());
  if (mapped != target) res.fail("bases do not correspond");
  if (direct.basis().size() != via_loop.basis().size()) res.fail("basis sizes differ");
  for (const auto& b : direct.basis()) {
    for (const auto& x : direct.algebra().window_basis(gen_bound)) {
      try {
        const LoopVec v = via_loop.act(x, to_loop_form(b));
        LoopVec u;
        for (const auto& [t, c] : direct.act(x, b)) u.add(to_loop_form(t), c);
        ++res.cases;
        if (!(u == v)) res.fail(x.str() + " on " + b.str());
      } catch (const TruncationOverflow&) {
        ++res.skipped;
      }
    }
  }
  return res;
}

CheckResult compare_weight_dimensions(const InducedModule& a, const InducedModule& b) {
  CheckResult res{"weight dimensions of " + a.name() + " and " + b.name()};
  const auto da = a.weight_dimensions();
  const auto db = b.weight_dimensions();
  res.cases = da.size();
  if (da != db) {
    for (const auto& [w, d] : da) {
      auto it = db.find(w);
      if (it == db.end() || it->second != d) {
        res.fail("dimension differs at " + w.str());
        break;
      }
    }
    if (res.passed) res.fail("weight sets differ");
  }
  return res;
}

}  // namespace loopmod
