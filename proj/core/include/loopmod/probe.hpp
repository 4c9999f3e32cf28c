#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "loopmod/check.hpp"
#include "loopmod/loop_module.hpp"

namespace loopmod {

// One descent step: apply x = E_ji (x) t^{-m} against the head factor
// z = E_ij (x) t^n of root -beta + n delta, so [x, z] sits in degree k = n - m.
struct ProbeStep {
  std::vector<int> beta;
  int head_exponent = 0;
  int n = 0;
  int m = 0;
  int k = 0;
  bool avoided = false;  // |k| missed the occupied indices and x_k acts on V or is free
  GBasis x;
};

struct ProbeResult {
  LoopVec start;
  LoopVec result;  // nonzero, all labels without real factors
  std::vector<ProbeStep> transcript;
};

std::map<WeightKey, LoopVec> weight_components(const InducedModule& m, const LoopVec& w);
bool is_homogeneous(const InducedModule& m, const LoopVec& w);

// A nonzero vector with small integer coefficients supported on one weight space
// lambda - beta + n delta with beta != 0, chosen uniformly among such windowed weights.
LoopVec random_homogeneous_vector(const InducedModule& m, std::mt19937_64& rng);

// Descends from a nonzero homogeneous w to a nonzero element of the strip inside the
// submodule generated by w. Scans m = 0, 1, -1, 2, -2, ... up to |m| <= m_bound,
// preferring steps that satisfy the avoidance conditions. InvalidArgument for w = 0
// or inhomogeneous w; ProbeInconclusive when no m in range gives a nonzero image.
ProbeResult irreducibility_probe(const InducedModule& m, const LoopVec& w, int m_bound);

LoopVec replay_probe(const InducedModule& m, const LoopVec& w, const std::vector<ProbeStep>& transcript);
// Replays the transcript and checks every intermediate vector is nonzero and the end
// point equals the reported strip element.
CheckResult check_probe_replay(const InducedModule& m, const ProbeResult& r);

}  // namespace loopmod
