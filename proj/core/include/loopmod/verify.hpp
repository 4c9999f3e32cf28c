#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "loopmod/check.hpp"
#include "loopmod/heisenberg.hpp"
#include "loopmod/loop_module.hpp"
#include "loopmod/phi_function.hpp"
#include "loopmod/roots.hpp"
#include "loopmod/truncation.hpp"

namespace loopmod {

// Antisymmetry, Jacobi and the defining relations on all generators with |index| <= bound.
CheckResult check_heisenberg_brackets(const HeisenbergKind& kind, int bound);

// A rational theta with theta not in k a Z, drawn from rng.
Scalar random_generic_theta(std::mt19937_64& rng, const Scalar& a, int k);

struct VerifyOptions {
  HeisenbergKind kind = HeisenbergKind::H_infinity();
  std::optional<AffineType> affine;
  Scalar a{1};
  PhiFunction phi;
  Truncation trunc;
  std::vector<Scalar> lambda_h;  // for loop modules; zero-filled when short
  std::uint64_t seed = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Every invariant suite that applies to the algebra in `o`.
std::vector<SuiteReport> run_verify(const VerifyOptions& o);

}  // namespace loopmod
