#include "loopmod/probe.hpp"

#include <cstdlib>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "loopmod/errors.hpp"

namespace loopmod {

std::map<WeightKey, LoopVec> weight_components(const InducedModule& m, const LoopVec& w) {
  std::map<WeightKey, LoopVec> out;
  for (const auto& [l, c] : w) out[m.weight(l)].add(l, c);
  return out;
}

bool is_homogeneous(const InducedModule& m, const LoopVec& w) { return weight_components(m, w).size() <= 1; }

LoopVec random_homogeneous_vector(const InducedModule& m, std::mt19937_64& rng) {
  std::map<WeightKey, std::vector<LoopLabel>> spaces;
  for (const auto& b : m.basis())
    if (b.has_real_factor()) spaces[m.weight(b)].push_back(b);
  if (spaces.empty()) throw InvalidArgument("window has no weight space off the strip");
  std::uniform_int_distribution<std::size_t> pick(0, spaces.size() - 1);
  const auto& labels = std::next(spaces.begin(), static_cast<std::ptrdiff_t>(pick(rng)))->second;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (;;) {
    LoopVec w;
    for (const auto& l : labels) w.add(l, Scalar(coeff(rng)));
    if (!w.is_zero()) return w;
  }
}

namespace {

struct Head {
  std::vector<int> beta;
  int height = 0;
  int exponent = 0;
  GBasis z;
};

std::optional<Head> find_head(const InducedModule& m, const LoopVec& w) {
  std::optional<Head> best;
  for (const auto& [l, c] : w) {
    (void)c;
    for (const auto& [z, p] : l.word) {
      if (!z.is_real()) continue;
      Head h;
      h.beta = m.algebra().finite_root(z.col, z.row);
      h.height = std::accumulate(h.beta.begin(), h.beta.end(), 0);
      h.exponent = p;
      h.z = z;
      if (!best || std::tie(h.height, h.beta, h.exponent) < std::tie(best->height, best->beta, best->exponent))
        best = h;
      break;  // the smallest real factor of this term
    }
  }
  return best;
}

std::set<int> occupied_indices(const LoopVec& w) {
  std::set<int> out;
  for (const auto& [l, c] : w) {
    (void)c;
    for (const auto& [label, e] : l.inner.entries()) {
      (void)e;
      out.insert(label_degree(label));
    }
    for (const auto& [z, p] : l.word)
      if (z.is_imag()) out.insert(std::abs(z.power));
  }
  return out;
}

bool index_reachable(const InducedModule& m, int k) {
  for (int i = 1; i <= m.algebra().rank(); ++i) {
    const GBasis y = GBasis::imag(k, i);
    if (m.is_negative(y) || m.inner().handles(m.algebra().to_hgen(y))) return true;
  }
  return false;
}

}  // namespace

ProbeResult irreducibility_probe(const InducedModule& m, const LoopVec& w, int m_bound) {
  if (w.is_zero()) throw InvalidArgument("probe needs a nonzero vector");
  if (!is_homogeneous(m, w)) throw InvalidArgument("probe needs a homogeneous vector");
  ProbeResult res;
  res.start = w;
  LoopVec cur = w;
  while (auto head = find_head(m, cur)) {
    const std::set<int> occupied = occupied_indices(cur);
    std::optional<std::pair<ProbeStep, LoopVec>> fallback;
    std::optional<std::pair<ProbeStep, LoopVec>> chosen;
    for (int t = 0; t <= 2 * m_bound && !chosen; ++t) {
      const int mm = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
      ProbeStep step;
      step.beta = head->beta;
      step.head_exponent = head->exponent;
      step.n = head->z.power;
      step.m = mm;
      step.k = step.n - mm;
      step.x = GBasis::real(head->z.col, head->z.row, -mm);
      step.avoided = step.k != 0 && !occupied.count(std::abs(step.k)) && index_reachable(m, step.k);
      LoopVec img;
      try {
        img = m.act(step.x, cur);
      } catch (const TruncationOverflow&) {
        continue;
      }
      if (img.is_zero()) continue;
      if (step.avoided)
        chosen.emplace(step, std::move(img));
      else if (!fallback)
        fallback.emplace(step, std::move(img));
    }
    if (!chosen) chosen = std::move(fallback);
    if (!chosen)
      throw ProbeInconclusive("no m with |m| <= " + std::to_string(m_bound) + " moves " + loop_vec_str(cur) +
                              " toward the strip");
    res.transcript.push_back(chosen->first);
    cur = std::move(chosen->second);
  }
  res.result = std::move(cur);
  return res;
}

LoopVec replay_probe(const InducedModule& m, const LoopVec& w, const std::vector<ProbeStep>& transcript) {
  LoopVec cur = w;
  for (const auto& s : transcript) cur = m.act(s.x, cur);
  return cur;
}

CheckResult check_probe_replay(const InducedModule& m, const ProbeResult& r) {
  CheckResult res("probe replay");
  LoopVec cur = r.start;
  for (const auto& s : r.transcript) {
    cur = m.act(s.x, cur);
    ++res.cases;
    if (cur.is_zero()) {
      res.fail("step with m = " + std::to_string(s.m) + " gives zero");
      return res;
    }
  }
  if (!(cur == r.result)) res.fail("replay ends at " + loop_vec_str(cur) + " instead of " + loop_vec_str(r.result));
  if (r.result.is_zero()) res.fail("strip element is zero");
  for (const auto& [l, c] : r.result) {
    (void)c;
    if (l.has_real_factor()) res.fail("end point " + l.str() + " is off the strip");
  }
  return res;
}

}  // namespace loopmod
