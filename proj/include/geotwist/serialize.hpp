// JSON forms for every public value: towers and elements round-trip
// bit-exactly (rationals as {num, den} strings of arbitrary precision).

#pragma once

#include <json.hpp>

#include "geotwist/classify.hpp"

namespace geotwist {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const FieldTower& t);
TowerPtr tower_from_json(const Json& j);

Json to_json(const FieldElement& e);  // value only (nested arrays)
FieldElement element_from_json(const Json& j, const TowerPtr& tower);

Json element_with_tower_json(const FieldElement& e);
FieldElement element_with_tower_from_json(const Json& j);

Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, const TowerPtr& tower);

Json to_json(const Matrix3& m);
Matrix3 matrix_from_json(const Json& j, const TowerPtr& tower);

Json to_json(const HesseCurve& c);
CurvePtr curve_from_json(const Json& j);

Json to_json(const RelationSpace& r);
RelationSpace relations_from_json(const Json& j);

Json to_json(const Poly3& p);
Poly3 poly_from_json(const Json& j, const TowerPtr& tower);

Json to_json(const GeometricPair& pair);
GeometricPair pair_from_json(const Json& j);

Json to_json(const GroupDesc& g);
Json to_json(const Certificate& c);
Json to_json(const TwistReport& r);

}  // namespace geotwist
