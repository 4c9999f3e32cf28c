#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "loopmod/check.hpp"
#include "loopmod/diagonal.hpp"
#include "loopmod/loop_module.hpp"
#include "loopmod/phi_function.hpp"
#include "loopmod/probe.hpp"
#include "loopmod/roots.hpp"
#include "loopmod/truncation.hpp"
#include "loopmod/weyl.hpp"

namespace loopmod {

using json = nlohmann::ordered_json;

// Rationals always travel as "p/q" strings.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Root& r);
json to_json(const std::vector<Root>& roots);
Root root_from_json(const json& j);

// {exceptions: {"1": "-", "2,1": "+"}, default: "+"} or {period: p, pattern: [...], exceptions?}.
json to_json(const PhiFunction& phi);
PhiFunction phi_from_json(const json& j);

json to_json(const Truncation& t);
Truncation truncation_from_json(const json& j);

json to_json(const WeightPoint& p);
WeightPoint weight_point_from_json(const json& j);

json to_json(const CheckResult& r);
json to_json(const MultiIndex& m);
// Display string, e.g. "E21t^-1".
json to_json(const GBasis& g);
// Structured form {type, row, col, power, index}; inverse of gbasis_from_json.
json gbasis_to_json(const GBasis& g);
GBasis gbasis_from_json(const json& j);
json to_json(const LoopLabel& l);
json to_json(const LoopVec& v);
json to_json(const WeightKey& w);

// {orbit, admissible, breaks, classes: [{p, support_sample}]}.
json classification_to_json(const OrbitDescriptor& orbit, const std::vector<SOPModule>& classes,
                            std::size_t sample_size);
// {K, theta, a, y_choice}.
json realization_to_json(const DiagonalRealization& m);

json to_json(const ProbeStep& s);
ProbeStep probe_step_from_json(const json& j);
json to_json(const ProbeResult& r);

// Columns beta_coeffs (semicolon-joined), n, dim.
std::string weight_dimensions_csv(const std::map<WeightKey, std::size_t>& dims);
json weight_dimensions_json(const std::map<WeightKey, std::size_t>& dims);

}  // namespace loopmod
