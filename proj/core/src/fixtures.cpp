#include "sefib/fixtures.hpp"

#include <sstream>

#include "fixture_data.hpp"
#include "sefib/birat.hpp"
#include "sefib/error.hpp"
#include "sefib/fiber.hpp"
#include "sefib/json_io.hpp"

namespace sefib {

std::array<Rational, 3> PrintedSystem::triple(const PrintedEquation& eq, Reading reading) {
  if (reading == Reading::literal) return {eq.y0, eq.y1, -eq.lhs};
  return {eq.y0, eq.y1, eq.lhs};
}

std::vector<std::string> fixture_names() { return {"watkins14", "rogers7"}; }

std::string_view fixture_source(std::string_view name) {
  if (name == "watkins14") return detail::kWatkins14Json;
  if (name == "rogers7") return detail::kRogers7Json;
  throw UsageError("unknown fixture '" + std::string(name) + "' (known: watkins14, rogers7)");
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Fixture load_fixture(std::string_view name) { return parse_fixture(fixture_source(name)); }

Fixture parse_fixture(std::string_view json_text) {
  const Json j = parse_json(json_text);
  try {
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.description = j.value("description", std::string{});
    f.curve = j.at("curve").get<FamilyCurve>();
    f.points = j.at("points").get<std::vector<AffinePoint>>();
    const Json& genus = j.at("expected_fiber_genus");
    f.expected_fiber_genus = BigInt(genus.is_string() ? genus.get<std::string>() : genus.dump(), 10);
    if (j.contains("expected_c")) f.expected_c = j.at("expected_c").get<Rational>();
    if (j.contains("printed_equations")) {
      const Json& pe = j.at("printed_equations");
      PrintedSystem ps;
      const auto layout = pe.at("layout").get<std::string>();
      if (layout == "common_lhs") ps.layout = PrintedSystem::Layout::common_lhs;
      else if (layout == "monic") ps.layout = PrintedSystem::Layout::monic;
      else throw UsageError("unknown printed layout '" + layout + "'");
      const auto reading = pe.at("reading").get<std::string>();
      if (reading == "literal") ps.reading = PrintedSystem::Reading::literal;
      else if (reading == "coefficients") ps.reading = PrintedSystem::Reading::coefficients;
      else throw UsageError("unknown printed reading '" + reading + "'");
      for (const auto& e : pe.at("equations")) {
        ps.equations.push_back({e.at("i").get<std::size_t>(), e.at("lhs").get<Rational>(), e.at("y0").get<Rational>(),
                                e.at("y1").get<Rational>()});
      }
      f.printed = std::move(ps);
    }
    f.digest = fnv1a64(json_text);
    return f;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed fixture: ") + e.what());
  }
}

std::optional<Rational> proportionality(const std::array<Rational, 3>& t, const std::array<Rational, 3>& p) {
  std::size_t k = 0;
  while (k < 3 && p[k].is_zero()) ++k;
  if (k == 3 || t[k].is_zero()) return std::nullopt;
  const Rational lambda = t[k] / p[k];
  for (std::size_t j = 0; j < 3; ++j) {
    if (t[j] != lambda * p[j]) return std::nullopt;
  }
  return lambda;
}

bool FixtureReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* FixtureReport::find(std::string_view check) const {
  for (const auto& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
  return os.str();
}

}  // namespace

FixtureReport verify(const Fixture& fixture, unsigned workers) {
  FixtureReport report;
  report.name = fixture.name;
  report.digest = fixture.digest;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < fixture.points.size(); ++i) {
    if (!contains(fixture.curve, fixture.points[i])) off.push_back(i);
  }
  add("membership", off.empty(),
      off.empty() ? "all " + std::to_string(fixture.points.size()) + " points on the curve"
                  : "points off the curve: " + join_indices(off));

  std::vector<Rational> xs;
  for (const auto& p : fixture.points) xs.push_back(p.x);
  const ConfigVerdict verdict = validate(fixture.curve.r, fixture.curve.s, xs);
  {
    std::string detail = verdict.valid() ? "valid" : "";
    for (const auto& v : verdict.violations) detail += v.describe(fixture.curve.r) + "; ";
    add("config", verdict.valid(), detail);
  }

  const int n = static_cast<int>(fixture.points.size()) - 1;
  report.fiber_genus = fiber_genus(fixture.curve.s, n);
  add("fiber_genus", report.fiber_genus == fixture.expected_fiber_genus,
      "computed " + report.fiber_genus.get_str() + ", expected " + fixture.expected_fiber_genus.get_str());

  if (!verdict.valid()) {
    add("fiber", false, "skipped: configuration invalid");
  } else {
    const FiberSystem system = build_fiber(*verdict.config);
    add("fiber", system.equations.size() == static_cast<std::size_t>(n - 1),
        std::to_string(system.equations.size()) + " equations");

    std::vector<Rational> ys;
    for (const auto& p : fixture.points) ys.push_back(p.y);
    const ProjPoint y(ys);
    const FiberCheck check = on_fiber(system, y, workers);
    add("on_fiber", check.on_fiber,
        check.on_fiber ? "point satisfies all equations" : "nonzero residues at equations " + join_indices(check.failing()));

    if (check.on_fiber) {
      const SmoothnessReport sm = smooth_at(system, y);
      report.jacobian_rank = sm.rank;
      add("smooth_at", sm.smooth,
          "jacobian rank " + std::to_string(sm.rank) + " of " + std::to_string(sm.expected_rank));
    } else {
      add("smooth_at", false, "skipped: point not on fiber");
    }

    if (fixture.expected_c) {
      std::vector<std::size_t> bad;
      for (const auto& eq : system.equations) {
        if (eq.raw()[2] != *fixture.expected_c) bad.push_back(eq.index);
      }
      add("shared_constant", bad.empty(),
          bad.empty() ? "raw C_i = " + fixture.expected_c->str() + " for every equation"
                      : "raw C_i differs at equations " + join_indices(bad));
    }

    if (fixture.printed) {
      const auto& ps = *fixture.printed;
      bool all = ps.equations.size() == system.equations.size();
      std::string detail = all ? "" : "equation count mismatch; ";
      for (const auto& pe : ps.equations) {
        EquationMatch m;
        m.index = pe.index;
        const FiberEquation* eq = nullptr;
        for (const auto& e : system.equations) {
          if (e.index == pe.index) eq = &e;
        }
        if (eq == nullptr) {
          all = false;
          detail += "no constructed equation " + std::to_string(pe.index) + "; ";
          report.equations.push_back(m);
          continue;
        }
        const auto raw = eq->raw();
        m.scalar = proportionality(raw, PrintedSystem::triple(pe, ps.reading));
        m.matched = m.scalar.has_value();
        m.literal_scalar = proportionality(raw, PrintedSystem::triple(pe, PrintedSystem::Reading::literal));
        m.literal_matched = m.literal_scalar.has_value();
        if (!m.matched) {
          all = false;
          const auto printed = PrintedSystem::triple(pe, ps.reading);
          const Rational attempted = printed[0].is_zero() ? Rational(0) : raw[0] / printed[0];
          detail += "equation " + std::to_string(pe.index) + " not proportional (scalar attempted " +
                    attempted.str() + "); ";
        }
        report.equations.push_back(std::move(m));
      }
      if (all) {
        std::size_t literal = 0;
        for (const auto& m : report.equations) literal += m.literal_matched ? 1 : 0;
        detail = std::to_string(report.equations.size()) + " equations match up to a per-equation scalar (" +
                 std::string(ps.reading == PrintedSystem::Reading::literal ? "literal" : "coefficient") +
                 " reading); literal reading matches " + std::to_string(literal) + "/" +
                 std::to_string(report.equations.size());
      }
      add("printed_equations", all, detail);
    }
  }

  if (fixture.points.size() >= 2) {
    try {
      const CurveParams ab = solve_ab(fixture.curve.r, fixture.curve.s, fixture.points[0], fixture.points[1]);
      const bool ok = ab.a == fixture.curve.a && ab.b == fixture.curve.b;
      add("solve_ab", ok, "recovered a = " + ab.a.str() + ", b = " + ab.b.str());
    } catch (const MathError& e) {
      add("solve_ab", false, e.what());
    }
  }
  return report;
}

}  // namespace sefib
