#include "sefib/json_io.hpp"

#include "sefib/error.hpp"

namespace sefib {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

void to_json(Json& j, const Rational& q) { j = q.str(); }

void from_json(const Json& j, Rational& q) {
  if (j.is_string()) {
    q = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = Rational::parse(j.dump());
  } else {
    throw UsageError("expected a rational string \"p/q\", got " + j.dump());
  }
}

void to_json(Json& j, const FamilyCurve& c) { j = Json{{"r", c.r}, {"s", c.s}, {"a", c.a}, {"b", c.b}}; }

void from_json(const Json& j, FamilyCurve& c) {
  c.r = j.at("r").get<int>();
  c.s = j.at("s").get<int>();
  c.a = j.at("a").get<Rational>();
  c.b = j.at("b").get<Rational>();
  require_family_params(c.r, c.s);
}

void to_json(Json& j, const AffinePoint& p) { j = Json{{"x", p.x}, {"y", p.y}}; }

void from_json(const Json& j, AffinePoint& p) {
  p.x = j.at("x").get<Rational>();
  p.y = j.at("y").get<Rational>();
}

void to_json(Json& j, const Config& c) { j = Json{{"r", c.r}, {"s", c.s}, {"alphas", c.alphas}}; }

void from_json(const Json& j, Config& c) {
  c.r = j.at("r").get<int>();
  c.s = j.at("s").get<int>();
  c.alphas = j.at("alphas").get<std::vector<Rational>>();
}

void to_json(Json& j, const ProjPoint& p) { j = p.coords(); }

ProjPoint proj_point_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("projective point must be a JSON array of rationals");
  return ProjPoint(j.get<std::vector<Rational>>());
}

void to_json(Json& j, const FiberEquation& e) {
  j = Json{{"i", e.index}, {"A", e.A}, {"B", e.B}, {"C", e.C}, {"scale", e.scale}};
}

void from_json(const Json& j, FiberEquation& e) {
  e.index = j.at("i").get<std::size_t>();
  e.A = j.at("A").get<Rational>();
  e.B = j.at("B").get<Rational>();
  e.C = j.at("C").get<Rational>();
  e.scale = j.contains("scale") ? j.at("scale").get<Rational>() : Rational(1);
}

void to_json(Json& j, const FiberSystem& f) {
  j = Json{{"config", f.config}, {"convention", to_string(f.convention)}, {"equations", f.equations}};
}

void from_json(const Json& j, FiberSystem& f) {
  f.config = j.at("config").get<Config>();
  f.convention = parse_convention(j.value("convention", std::string("family")));
  f.equations = j.at("equations").get<std::vector<FiberEquation>>();
}

void to_json(Json& j, const CurveWithPoints& c) { j = Json{{"curve", c.curve}, {"points", c.points}}; }

void from_json(const Json& j, CurveWithPoints& c) {
  c.curve = j.at("curve").get<FamilyCurve>();
  c.points = j.at("points").get<std::vector<AffinePoint>>();
}

void to_json(Json& j, const CurveParams& p) { j = Json{{"a", p.a}, {"b", p.b}}; }

void to_json(Json& j, const SearchReport& r) {
  j = Json{{"config", r.config},
           {"height_bound", r.height_bound},
           {"hits", r.hits},
           {"search_space_size", r.search_space_size},
           {"elapsed_ms", r.elapsed.count()},
           {"complete", r.complete},
           {"note", "height-bounded search; evidence only, not a proof of finiteness or emptiness"}};
}

void from_json(const Json& j, SearchReport& r) {
  r.config = j.at("config").get<Config>();
  r.height_bound = j.at("height_bound").get<long>();
  r.hits = j.at("hits").get<std::vector<CurveWithPoints>>();
  r.search_space_size = j.at("search_space_size").get<std::uint64_t>();
  r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  r.complete = j.at("complete").get<bool>();
}

void to_json(Json& j, const SquareClassTable& t) {
  j = Json{{"search_space_size", t.search_space_size}, {"per_condition", t.per_condition}, {"cumulative", t.cumulative}};
}

namespace {

Json tuples_json(const std::vector<ExponentTuple>& ts) {
  Json arr = Json::array();
  for (const auto& t : ts) arr.push_back(Json{{"x", t.x}, {"y", t.y}});
  return arr;
}

}  // namespace

void to_json(Json& j, const TrivialPointCertificate& c) {
  j = Json{{"r", c.r},
           {"s", c.s},
           {"n", c.n},
           {"order", c.order},
           {"convention", to_string(c.convention)},
           {"tuple_space", c.tuple_space},
           {"exhaustive", c.exhaustive},
           {"checked", c.checked},
           {"passed", c.passed()},
           {"failed", tuples_json(c.failed)}};
  if (!c.verified.empty()) j["verified"] = tuples_json(c.verified);
}

void to_json(Json& j, const ConfigVerdict& v) {
  Json violations = Json::array();
  for (const auto& x : v.violations) {
    violations.push_back(Json{{"kind", to_string(x.kind)}, {"i", x.i}, {"j", x.j}, {"message", x.describe(v.r)}});
  }
  j = Json{{"valid", v.valid()}, {"violations", violations}};
  if (v.config) j["config"] = *v.config;
}

void to_json(Json& j, const FiberCheck& c) {
  j = Json{{"on_fiber", c.on_fiber}, {"residues", c.residues}, {"failing", c.failing()}};
}

void to_json(Json& j, const ConsistencyReport& c) {
  j = Json{{"consistent", c.consistent}, {"a", c.params.a}, {"b", c.params.b}, {"misfits", c.misfits}};
  if (auto w = c.witness()) j["witness"] = *w;
}

void to_json(Json& j, const LiftResult& l) {
  j = Json{{"ok", l.ok()}, {"scale", l.scale}};
  if (l.curve) j["curve_with_points"] = *l.curve;
  if (l.obstruction) {
    Json o{{"kind", to_string(l.obstruction->kind)}, {"detail", l.obstruction->detail}};
    if (l.obstruction->index) o["index"] = *l.obstruction->index;
    j["obstruction"] = o;
  }
}

void to_json(Json& j, const FixtureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json eqs = Json::array();
  for (const auto& m : r.equations) {
    Json e{{"i", m.index}, {"matched", m.matched}, {"literal_matched", m.literal_matched}};
    if (m.scalar) e["scalar"] = *m.scalar;
    if (m.literal_scalar) e["literal_scalar"] = *m.literal_scalar;
    eqs.push_back(e);
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(r.digest));
  j = Json{{"name", r.name},
           {"digest", std::string(digest)},
           {"passed", r.passed()},
           {"fiber_genus", r.fiber_genus.get_str()},
           {"jacobian_rank", r.jacobian_rank},
           {"checks", checks},
           {"equations", eqs}};
}

}  // namespace sefib
