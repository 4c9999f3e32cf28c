#include "loopmod/serialize.hpp"

#include <sstream>

#include "loopmod/errors.hpp"

namespace loopmod {

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  throw InvalidArgument("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Root& r) {
  json fp = json::array();
  for (const auto& c : r.finite_part) fp.push_back(to_json(c));
  return json{{"finite_part", fp}, {"delta", to_json(r.delta)}};
}

json to_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

Root root_from_json(const json& j) {
  Root r;
  for (const auto& c : j.at("finite_part")) r.finite_part.push_back(scalar_from_json(c));
  r.delta = scalar_from_json(j.at("delta"));
  return r;
}

namespace {

std::string sign_str(Sign s) { return std::string(1, sign_char(s)); }

json exceptions_json(const std::map<Label, Sign>& ex) {
  json out = json::object();
  for (const auto& [l, s] : ex) out[label_str(l)] = sign_str(s);
  return out;
}

std::map<Label, Sign> exceptions_from_json(const json& j) {
  std::map<Label, Sign> out;
  for (const auto& [k, v] : j.items()) out[parse_label(k)] = parse_sign(v.get<std::string>());
  return out;
}

}  // namespace

json to_json(const PhiFunction& phi) {
  if (phi.is_periodic()) {
    json pattern = json::array();
    for (auto s : phi.pattern()) pattern.push_back(sign_str(s));
    json out{{"period", phi.pattern().size()}, {"pattern", pattern}};
    if (!phi.exceptions().empty()) out["exceptions"] = exceptions_json(phi.exceptions());
    return out;
  }
  return json{{"exceptions", exceptions_json(phi.exceptions())}, {"default", sign_str(phi.default_sign())}};
}

PhiFunction phi_from_json(const json& j) {
  if (j.is_string()) return PhiFunction::constant(parse_sign(j.get<std::string>()));
  if (!j.is_object()) throw InvalidArgument("phi must be an object");
  std::map<Label, Sign> ex;
  if (j.contains("exceptions")) ex = exceptions_from_json(j.at("exceptions"));
  if (j.contains("pattern")) {
    std::vector<Sign> pattern;
    for (const auto& s : j.at("pattern")) pattern.push_back(parse_sign(s.get<std::string>()));
    if (j.contains("period") && j.at("period").get<std::size_t>() != pattern.size())
      throw InvalidArgument("phi period does not match the pattern length");
    return PhiFunction::periodic(std::move(pattern), std::move(ex));
  }
  return PhiFunction::with_exceptions(std::move(ex), parse_sign(j.value("default", std::string("+"))));
}

json to_json(const Truncation& t) {
  return json{{"max_delta_degree", t.max_delta_degree},
              {"max_exponent", t.max_exponent},
              {"max_real_height", t.max_real_height},
              {"max_total_degree", t.max_total_degree}};
}

Truncation truncation_from_json(const json& j) {
  Truncation t;
  t.max_delta_degree = j.at("max_delta_degree").get<int>();
  t.max_exponent = j.at("max_exponent").get<int>();
  t.max_real_height = j.value("max_real_height", 0);
  t.max_total_degree = j.at("max_total_degree").get<int>();
  t.validate();
  return t;
}

json to_json(const WeightPoint& p) {
  json out{{"a", to_json(p.level())}};
  if (p.is_finite()) {
    json coords = json::array();
    for (int i = 1; i <= *p.n(); ++i) coords.push_back(to_json(p.coord(i)));
    out["coords"] = coords;
  } else {
    json listed = json::object();
    for (const auto& [i, c] : p.listed()) listed[std::to_string(i)] = to_json(c);
    out["listed"] = listed;
    out["default"] = to_json(p.default_value());
  }
  return out;
}

WeightPoint weight_point_from_json(const json& j) {
  const Scalar a = scalar_from_json(j.at("a"));
  if (j.contains("coords")) {
    std::vector<Scalar> coords;
    for (const auto& c : j.at("coords")) coords.push_back(scalar_from_json(c));
    return WeightPoint::finite(a, coords);
  }
  std::map<int, Scalar> listed;
  if (j.contains("listed"))
    for (const auto& [k, v] : j.at("listed").items()) listed[std::stoi(k)] = scalar_from_json(v);
  return WeightPoint::infinite(a, listed, scalar_from_json(j.value("default", json("0"))));
}

json to_json(const CheckResult& r) {
  json out{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"skipped", r.skipped}};
  if (!r.passed) out["witness"] = r.witness;
  return out;
}

json to_json(const MultiIndex& m) {
  json out = json::object();
  for (const auto& [l, e] : m.entries()) out[label_str(l)] = e;
  return out;
}

json to_json(const GBasis& g) { return g.str(); }

GBasis gbasis_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "real") return GBasis::real(j.at("row").get<int>(), j.at("col").get<int>(), j.at("power").get<int>());
  if (type == "imag") return GBasis::imag(j.at("power").get<int>(), j.at("index").get<int>());
  if (type == "cartan") return GBasis::cartan(j.at("index").get<int>());
  if (type == "c") return GBasis::central();
  if (type == "d") return GBasis::degree();
  throw InvalidArgument("unknown generator type " + type);
}

json gbasis_to_json(const GBasis& g) {
  switch (g.type) {
    case GBasis::Type::Real:
      return json{{"type", "real"}, {"row", g.row}, {"col", g.col}, {"power", g.power}};
    case GBasis::Type::Imag:
      return json{{"type", "imag"}, {"power", g.power}, {"index", g.index}};
    case GBasis::Type::Cartan:
      return json{{"type", "cartan"}, {"index", g.index}};
    case GBasis::Type::C:
      return json{{"type", "c"}};
    case GBasis::Type::D:
      break;
  }
  return json{{"type", "d"}};
}

json to_json(const LoopLabel& l) {
  json word = json::array();
  for (auto it = l.word.rbegin(); it != l.word.rend(); ++it) word.push_back(json{{it->first.str(), it->second}});
  return json{{"word", word}, {"inner", to_json(l.inner)}};
}

json to_json(const LoopVec& v) {
  json out = json::array();
  for (const auto& [l, c] : v) out.push_back(json{{"coefficient", to_json(c)}, {"label", to_json(l)}});
  return out;
}

json to_json(const WeightKey& w) { return json{{"beta", w.beta}, {"n", w.n}}; }

json classification_to_json(const OrbitDescriptor& orbit, const std::vector<SOPModule>& classes,
                            std::size_t sample_size) {
  json degenerate = json::array();
  for (int i : orbit.degenerate) degenerate.push_back(i);
  json o{{"representative", to_json(orbit.representative)},
         {"window", json{{"coords", orbit.window.coords}, {"radius", orbit.window.radius}}},
         {"degenerate", degenerate},
         {"default_degenerate", orbit.default_degenerate}};
  json brk = json::array();
  if (orbit.maximal_break)
    for (int i : breaks(*orbit.maximal_break, orbit.window)) brk.push_back(i);
  json cls = json::array();
  for (const auto& m : classes) {
    json sample = json::array();
    for (std::size_t i = 0; i < m.basis().size() && i < sample_size; ++i) sample.push_back(to_json(m.basis()[i]));
    cls.push_back(json{{"p", to_json(m.p())}, {"support_size", m.basis().size()}, {"support_sample", sample}});
  }
  const bool admissible = !orbit.is_degenerate() || orbit.maximal_break.has_value();
  return json{{"orbit", o}, {"admissible", admissible}, {"breaks", brk}, {"classes", cls}};
}

json realization_to_json(const DiagonalRealization& m) {
  json theta = json::object();
  for (const auto& [l, t] : m.theta()) theta[label_str(l)] = to_json(t);
  json y = json::object();
  for (const auto& [l, s] : m.y_choice()) y[label_str(l)] = sign_str(s);
  return json{{"K", m.K()}, {"theta", theta}, {"a", to_json(m.level())}, {"y_choice", y}};
}

json to_json(const ProbeStep& s) {
  return json{{"beta", s.beta}, {"head_exponent", s.head_exponent}, {"n", s.n},    {"m", s.m},
              {"k", s.k},       {"avoided", s.avoided},            {"x", s.x.str()}, {"x_struct", gbasis_to_json(s.x)}};
}

ProbeStep probe_step_from_json(const json& j) {
  ProbeStep s;
  s.beta = j.at("beta").get<std::vector<int>>();
  s.head_exponent = j.at("head_exponent").get<int>();
  s.n = j.at("n").get<int>();
  s.m = j.at("m").get<int>();
  s.k = j.at("k").get<int>();
  s.avoided = j.at("avoided").get<bool>();
  s.x = gbasis_from_json(j.at("x_struct"));
  return s;
}

json to_json(const ProbeResult& r) {
  json steps = json::array();
  for (const auto& s : r.transcript) steps.push_back(to_json(s));
  return json{{"start", to_json(r.start)}, {"transcript", steps}, {"strip_element", to_json(r.result)}};
}

namespace {

std::string beta_coeffs(const std::vector<int>& beta) {
  std::string s;
  for (std::size_t i = 0; i < beta.size(); ++i) s += (i ? ";" : "") + std::to_string(beta[i]);
  return s;
}

}  // namespace

std::string weight_dimensions_csv(const std::map<WeightKey, std::size_t>& dims) {
  std::ostringstream os;
  os << "beta_coeffs,n,dim\n";
  for (const auto& [w, d] : dims) os << beta_coeffs(w.beta) << ',' << w.n << ',' << d << '\n';
  return os.str();
}

json weight_dimensions_json(const std::map<WeightKey, std::size_t>& dims) {
  json out = json::array();
  for (const auto& [w, d] : dims) out.push_back(json{{"beta", w.beta}, {"n", w.n}, {"dim", d}});
  return out;
}

}  // namespace loopmod
