#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <random>
#include <sstream>

#include "loopmod/loopmod.hpp"

namespace loopmod::cli {

namespace {

struct Job {
  json config;
  HeisenbergKind kind;
  std::optional<AffineType> affine;
  Scalar a;
  PhiFunction phi;
  Truncation trunc;
  CartanWeight lambda;
  std::uint64_t seed = 0;
  json params;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

const std::set<std::string> kTasks = {"root-system",  "phi-verma",    "weyl-classify", "realization",
                                      "loop-module",  "partial-loop", "verify",        "probe"};

Job parse_job(const json& config, std::optional<std::uint64_t> seed_override) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    (void)value;
    static const std::set<std::string> known = {"algebra", "level_a",    "phi",         "lambda",
                                                "truncation", "task",    "task_params", "seed"};
    if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  Job job;
  job.config = config;
  const auto& alg = config.at("algebra");
  const auto kind = alg.at("kind").get<std::string>();
  if (kind == "H_n") {
    job.kind = HeisenbergKind::H_n(alg.at("n").get<int>());
  } else if (kind == "H") {
    job.kind = HeisenbergKind::H_infinity();
  } else {
    job.affine = parse_affine_type(kind);
    job.kind = HeisenbergKind::L(*job.affine);
  }
  job.a = scalar_from_json(config.value("level_a", json("1")));
  job.phi = phi_from_json(config.value("phi", json("+")));
  job.trunc = truncation_from_json(config.at("truncation"));
  job.seed = seed_override ? *seed_override : config.value("seed", std::uint64_t{0});
  job.params = config.value("task_params", json::object());
  job.lambda.c = job.a;
  job.lambda.d = Scalar(0);
  job.lambda.h.assign(job.affine ? job.affine->rank() : 0, Scalar(0));
  const json lambda = config.value("lambda", json::object());
  for (const auto& [key, value] : lambda.items()) {
    if (key == "d") {
      job.lambda.d = scalar_from_json(value);
    } else if (key == "c") {
      if (!(scalar_from_json(value) == job.a)) throw ConfigError("lambda(c) must equal level_a");
    } else if (key.size() > 2 && key.rfind("H_", 0) == 0) {
      const int i = std::stoi(key.substr(2));
      if (i < 1 || i > static_cast<int>(job.lambda.h.size())) throw ConfigError("lambda label out of range: " + key);
      job.lambda.h[i - 1] = scalar_from_json(value);
    } else {
      throw ConfigError("unknown lambda label '" + key + "'");
    }
  }
  const auto task = config.at("task").get<std::string>();
  if (!kTasks.count(task)) throw ConfigError("unknown task '" + task + "'");
  return job;
}

const AffineType& need_affine(const Job& job) {
  if (!job.affine) throw ConfigError("task needs an affine algebra kind such as \"A_1^(1)\"");
  return *job.affine;
}

std::shared_ptr<const LoopAlgebra> loop_algebra(const Job& job) {
  return std::make_shared<const LoopAlgebra>(need_affine(job));
}

MultiIndex multiindex_from_json(const json& j) {
  MultiIndex m;
  for (const auto& [k, v] : j.items()) m = m.with(parse_label(k), v.get<std::int64_t>());
  return m;
}

std::map<Label, Scalar> label_scalars(const json& j) {
  std::map<Label, Scalar> out;
  for (const auto& [k, v] : j.items()) out[parse_label(k)] = scalar_from_json(v);
  return out;
}

std::map<Label, Sign> label_signs(const json& j) {
  std::map<Label, Sign> out;
  for (const auto& [k, v] : j.items()) out[parse_label(k)] = parse_sign(v.get<std::string>());
  return out;
}

DiagonalRealization realization_from(const Job& job, const json& p, std::set<int> filter = {}) {
  const auto K = p.value("K", std::set<int>{});
  return DiagonalRealization(job.kind, K, label_scalars(p.value("theta", json::object())), job.a, job.trunc,
                             label_signs(p.value("y_choice", json::object())), std::move(filter));
}

struct Output {
  json result = json::object();
  std::vector<CheckResult> checks;
  std::optional<std::string> csv;
};

Output task_root_system(const Job& job) {
  const auto& t = need_affine(job);
  Output out;
  json mult = json::object();
  for (int k = 1; k <= job.trunc.max_delta_degree; ++k) mult[std::to_string(k)] = imaginary_multiplicity(t, k);
  const auto positive = positive_real_roots(t, job.trunc);
  const auto S = build_S_phi(t, job.phi, job.trunc);
  const auto effective = is_closed_partition(t, S, job.trunc, ClosureRule::BracketEffective);
  const auto literal = is_closed_partition(t, S, job.trunc, ClosureRule::Literal);
  auto closure_json = [](const ClosureReport& r) {
    json j{{"closed", r.closed}};
    if (r.witness) j["witness"] = json::array({to_json(r.witness->first), to_json(r.witness->second)});
    return j;
  };
  out.result = json{{"type", t.str()},
                    {"finite_type", t.base.str()},
                    {"positive_real_roots", to_json(std::vector<Root>(positive.begin(), positive.end()))},
                    {"imaginary_multiplicities", mult},
                    {"S_phi", to_json(std::vector<Root>(S.plus.begin(), S.plus.end()))},
                    {"closure", json{{"bracket_effective", closure_json(effective)}, {"literal", closure_json(literal)}}}};
  CheckResult part("S_phi is a closed partition (bracket-effective rule)");
  part.cases = S.plus.size();
  if (!is_partition(t, S, job.trunc)) part.fail("S_phi and -S_phi do not partition the window");
  if (!effective.closed) part.fail(effective.witness->first.str() + " + " + effective.witness->second.str());
  out.checks.push_back(part);
  const auto P = standard_partition(t, job.trunc);
  CheckResult std_part("standard partition is closed (literal rule)");
  std_part.cases = P.plus.size();
  const auto sc = is_closed_partition(t, P, job.trunc, ClosureRule::Literal);
  if (!is_partition(t, P, job.trunc) || !sc.closed) std_part.fail("standard partition is not closed");
  out.checks.push_back(std_part);
  return out;
}

Output task_phi_verma(const Job& job) {
  Output out;
  const auto m = build_phi_verma(job.kind, job.phi, job.a, job.trunc);
  json dims = json::object();
  for (const auto& [n, d] : m.graded_dimensions()) dims[std::to_string(n)] = d;
  json ann = json::array();
  for (const auto& g : annihilator_of_vacuum(m)) ann.push_back(g.str());
  out.result = json{{"module", m.describe()}, {"basis_size", m.basis().size()}, {"graded_dimensions", dims},
                    {"annihilator_of_vacuum", ann}};
  out.checks.push_back(check_representation(m));
  out.checks.push_back(check_grading_shift(m));
  if (job.a.is_zero()) {
    const auto N = proper_submodule_at_level_zero(m);
    json labels = json::array();
    for (const auto& b : N) labels.push_back(to_json(b));
    out.result["proper_submodule"] = labels;
    out.checks.push_back(check_closed_subspace(m, N));
  } else if (job.params.contains("w")) {
    Vec w;
    for (const auto& term : job.params.at("w"))
      w.add(multiindex_from_json(term.at("label")), scalar_from_json(term.at("coefficient")));
    const auto r = reduce_to_highest(m, w);
    out.result["reduce_to_highest"] = json{{"m_bar", to_json(r.m_bar)}, {"coefficient", to_json(r.coefficient)}};
  }
  return out;
}

Output task_weyl_classify(const Job& job) {
  Output out;
  const auto& p = job.params;
  WeightPoint point;
  if (p.contains("point")) {
    std::vector<Scalar> coords;
    for (const auto& c : p.at("point")) coords.push_back(scalar_from_json(c));
    point = WeightPoint::finite(job.a, coords);
  } else {
    std::map<int, Scalar> listed;
    const json given = p.value("listed", json::object());
    for (const auto& [k, v] : given.items()) listed[std::stoi(k)] = scalar_from_json(v);
    point = WeightPoint::infinite(job.a, listed, scalar_from_json(p.value("default", json("0"))));
  }
  CoordWindow window;
  window.coords = point.is_finite() ? *point.n() : 3;
  if (p.contains("window")) {
    window.coords = p.at("window").value("coords", window.coords);
    window.radius = p.at("window").value("radius", window.radius);
  }
  const auto orbit = analyze_orbit(point, window);
  std::vector<SOPModule> classes;
  if (orbit.maximal_break || !orbit.is_degenerate()) classes = classify(orbit);
  out.result = classification_to_json(orbit, classes, p.value("support_sample", std::size_t{8}));
  for (const auto& c : classes) {
    out.checks.push_back(check_weyl_relations(c));
    out.checks.push_back(check_weight_propagation(c));
    out.checks.push_back(check_window_irreducible(c));
  }
  if (!classes.empty()) out.checks.push_back(check_disjoint_supports(classes));
  return out;
}

Output task_realization(const Job& job) {
  Output out;
  if (job.a.is_zero()) throw LevelZero("realization needs a nonzero level");
  const auto m = realization_from(job, job.params);
  out.result = realization_to_json(m);
  out.result["basis_size"] = m.basis().size();
  out.result["irreducible"] = m.irreducible();
  const auto witness = singular_witness(m);
  if (witness)
    out.result["singular_witness"] = json{{"pair", label_str(witness->pair)},
                                          {"vector", to_json(witness->from)},
                                          {"generator", witness->gen.str()}};
  out.checks.push_back(check_representation(m));
  out.checks.push_back(check_eigen_ladders(m, job.trunc.max_exponent));
  out.checks.push_back(check_commuting_family(m));
  CheckResult crit("irreducibility flag matches the ladder coefficients");
  crit.cases = 1;
  if (m.irreducible() == witness.has_value()) crit.fail("irreducible() disagrees with the singular-witness search");
  out.checks.push_back(crit);
  CheckResult grading("Z^infty components and shifts");
  const auto z = z_infty_grade(m, MultiIndex{});
  grading.cases = z.grade.size();
  if (!z.components_at_most_one) grading.fail("a component has dimension > 1");
  if (!z.shift_law) grading.fail("generator shifts break the Z^infty law");
  out.checks.push_back(grading);
  return out;
}

InducedPtr loop_module_from(const Job& job, const json& p) {
  if (job.a.is_zero()) throw LevelZero("loop modules need a nonzero level");
  const auto g = loop_algebra(job);
  const auto construction = p.value("construction", std::string("direct"));
  if (construction == "direct") return build_M_phi_lambda(g, job.phi, job.lambda, job.trunc, job.trunc);
  if (construction == "phi-verma") return build_M_phi_lambda_via_loop(g, job.phi, job.lambda, job.trunc, job.trunc);
  if (construction == "realization") {
    auto V = std::make_shared<DiagonalRealization>(realization_from(job, p.value("realization", json::object())));
    return build_generalized_loop(g, job.lambda, V, job.trunc);
  }
  throw ConfigError("unknown construction '" + construction + "'");
}

std::set<std::int64_t> inner_degrees(const InducedModule& m) {
  std::set<std::int64_t> out;
  for (const auto& b : m.inner().basis()) out.insert(m.inner().degree(b));
  for (const auto& l : m.basis())
    if (!l.has_real_factor()) out.insert(m.weight(l).n);
  return out;
}

Output task_loop_module(const Job& job) {
  Output out;
  const auto m = loop_module_from(job, job.params);
  const auto dims = m->weight_dimensions();
  json support = json::array();
  for (const auto& [w, d] : dims) {
    (void)d;
    support.push_back(to_json(w));
  }
  out.result = json{{"module", m->name()},
                    {"basis_size", m->basis().size()},
                    {"strip_size", m->strip().size()},
                    {"support", support},
                    {"weight_dimensions", weight_dimensions_json(dims)}};
  out.csv = weight_dimensions_csv(dims);
  out.checks.push_back(check_freeness(*m));
  out.checks.push_back(check_weight_convolution(*m));
  out.checks.push_back(check_strip(*m));
  const int n_bound = job.params.value("n_bound", std::max(0, job.trunc.max_delta_degree - 1));
  out.checks.push_back(check_support_formula(*m, job.trunc.max_real_height, n_bound, inner_degrees(*m)));
  if (job.params.value("check_representation", true))
    out.checks.push_back(check_loop_representation(*m, job.params.value("gen_bound", 1)));
  return out;
}

Output task_partial_loop(const Job& job) {
  Output out;
  if (job.a.is_zero()) throw LevelZero("partial loop modules need a nonzero level");
  const auto g = loop_algebra(job);
  const auto I = job.params.value("I", std::set<int>{});
  auto N = std::make_shared<DiagonalRealization>(realization_from(job, job.params.value("N", json::object()), I));
  if (I.empty()) throw ConfigError("partial-loop needs a nonempty I (use loop-module for I empty)");
  const auto pl = build_partial_loop(g, I, job.phi, N, job.lambda, job.trunc, job.trunc);
  const auto dims = pl.direct->weight_dimensions();
  out.result = json{{"V", pl.V->describe()},
                    {"basis_size_via_V", pl.via_V->basis().size()},
                    {"basis_size_direct", pl.direct->basis().size()},
                    {"weight_dimensions", weight_dimensions_json(dims)}};
  out.csv = weight_dimensions_csv(dims);
  out.checks.push_back(compare_weight_dimensions(*pl.direct, *pl.via_V));
  out.checks.push_back(check_freeness(*pl.direct));
  out.checks.push_back(check_freeness(*pl.via_V));
  return out;
}

Output task_verify(const Job& job) {
  Output out;
  VerifyOptions o;
  o.kind = job.kind;
  o.affine = job.affine;
  o.a = job.a;
  o.phi = job.phi;
  o.trunc = job.trunc;
  o.lambda_h = job.lambda.h;
  o.seed = job.seed;
  json suites = json::array();
  for (const auto& s : run_verify(o)) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back(to_json(c));
      out.checks.push_back(c);
    }
    suites.push_back(json{{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}});
  }
  out.result = json{{"suites", suites}};
  return out;
}

Output task_probe(const Job& job) {
  Output out;
  const auto m = loop_module_from(job, job.params);
  const int bound = job.params.value("m_bound", 20);
  const int samples = job.params.value("samples", 5);
  std::mt19937_64 rng(job.seed);
  json probes = json::array();
  for (int s = 0; s < samples; ++s) {
    const auto w = random_homogeneous_vector(*m, rng);
    try {
      const auto r = irreducibility_probe(*m, w, bound);
      auto replay = check_probe_replay(*m, r);
      replay.name += " #" + std::to_string(s);
      json entry = to_json(r);
      entry["replay_passed"] = replay.passed;
      probes.push_back(entry);
      out.checks.push_back(replay);
    } catch (const ProbeInconclusive& e) {
      CheckResult c("probe #" + std::to_string(s));
      c.fail(std::string(e.what()) + " (start " + to_json(w).dump() + ")");
      out.checks.push_back(c);
      probes.push_back(json{{"start", to_json(w)}, {"inconclusive", e.what()}});
    }
  }
  out.result = json{{"module", m->name()}, {"m_bound", bound}, {"probes", probes}};
  return out;
}

Output dispatch(const Job& job) {
  const auto task = job.config.at("task").get<std::string>();
  if (task == "root-system") return task_root_system(job);
  if (task == "phi-verma") return task_phi_verma(job);
  if (task == "weyl-classify") return task_weyl_classify(job);
  if (task == "realization") return task_realization(job);
  if (task == "loop-module") return task_loop_module(job);
  if (task == "partial-loop") return task_partial_loop(job);
  if (task == "verify") return task_verify(job);
  return task_probe(job);
}

json conventions() {
  return json{{"sigma", "x_i maps the weight space at t_i = c to t_i = c + a"},
              {"positive_real_roots", "alpha + n delta with alpha a positive finite root"},
              {"closure_rule", "bracket-effective (imaginary pairs skipped)"},
              {"pbw_order", "imaginary by (|k|, i), then real by height, beta lex, n ascending"},
              {"loop_cartan_basis", "orthogonal u_i; x_{-k,i} = u_i / (u_i, u_i) (x) t^-k"}};
}

}  // namespace

JobResult run_job(const json& config, std::optional<std::uint64_t> seed_override) {
  JobResult res;
  res.report = json{{"generated_at", timestamp()}, {"tool", "loopmod"}, {"version", "0.1.0"}};
  res.report["config"] = config;
  res.report["conventions"] = conventions();
  auto fail_with = [&](int code, const std::string& kind, const std::string& msg) {
    res.exit_code = code;
    res.report["status"] = kind;
    res.report["error"] = msg;
    return res;
  };
  Job job;
  try {
    job = parse_job(config, seed_override);
  } catch (const std::exception& e) {
    return fail_with(kUsage, "config-error", e.what());
  }
  res.report["seed"] = job.seed;
  res.report["truncation"] = to_json(job.trunc);
  try {
    Output out = dispatch(job);
    json checks = json::array();
    bool ok = true;
    for (const auto& c : out.checks) {
      checks.push_back(to_json(c));
      ok = ok && c.passed;
    }
    res.report["result"] = std::move(out.result);
    res.report["checks"] = std::move(checks);
    res.report["status"] = ok ? "pass" : "fail";
    res.exit_code = ok ? kOk : kCheckFailed;
    res.csv = std::move(out.csv);
    return res;
  } catch (const TruncationOverflow& e) {
    return fail_with(kOverflow, "truncation-overflow", e.what());
  } catch (const NotDiagonal& e) {
    return fail_with(kCheckFailed, "fail", e.what());
  } catch (const ProbeInconclusive& e) {
    return fail_with(kCheckFailed, "fail", e.what());
  } catch (const std::exception& e) {
    return fail_with(kUsage, "config-error", e.what());
  }
}

json without_timestamp(json report) {
  report.erase("generated_at");
  return report;
}

}  // namespace loopmod::cli
