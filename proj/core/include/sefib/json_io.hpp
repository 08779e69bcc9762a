#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sefib/arith.hpp"
#include "sefib/birat.hpp"
#include "sefib/config.hpp"
#include "sefib/family.hpp"
#include "sefib/fiber.hpp"
#include "sefib/fixtures.hpp"
#include "sefib/search.hpp"
#include "sefib/trivial_points.hpp"

namespace sefib {

using Json = nlohmann::json;

/// Parses JSON text; UsageError on syntax errors.
[[nodiscard]] Json parse_json(std::string_view text);

// Rationals are "p/q" strings ("p" when q = 1); integers are also accepted on input.
void to_json(Json& j, const Rational& q);
void from_json(const Json& j, Rational& q);

void to_json(Json& j, const FamilyCurve& c);
void from_json(const Json& j, FamilyCurve& c);
void to_json(Json& j, const AffinePoint& p);
void from_json(const Json& j, AffinePoint& p);
void to_json(Json& j, const Config& c);
void from_json(const Json& j, Config& c);
void to_json(Json& j, const ProjPoint& p);
void to_json(Json& j, const FiberEquation& e);
void from_json(const Json& j, FiberEquation& e);
void to_json(Json& j, const FiberSystem& f);
void from_json(const Json& j, FiberSystem& f);
void to_json(Json& j, const CurveWithPoints& c);
void from_json(const Json& j, CurveWithPoints& c);
void to_json(Json& j, const CurveParams& p);
void to_json(Json& j, const SearchReport& r);
void from_json(const Json& j, SearchReport& r);
void to_json(Json& j, const SquareClassTable& t);
void to_json(Json& j, const TrivialPointCertificate& c);
void to_json(Json& j, const ConfigVerdict& v);
void to_json(Json& j, const FiberCheck& c);
void to_json(Json& j, const ConsistencyReport& c);
void to_json(Json& j, const LiftResult& l);
void to_json(Json& j, const FixtureReport& r);

[[nodiscard]] ProjPoint proj_point_from_json(const Json& j);

}  // namespace sefib

template <>
struct nlohmann::adl_serializer<sefib::ProjPoint> {
  static sefib::ProjPoint from_json(const json& j) { return sefib::proj_point_from_json(j); }
  static void to_json(json& j, const sefib::ProjPoint& p) { sefib::to_json(j, p); }
};
