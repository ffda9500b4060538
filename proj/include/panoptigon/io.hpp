#pragma once

#include <string>

#include <json.hpp>

#include "panoptigon/census.hpp"
#include "panoptigon/classify.hpp"
#include "panoptigon/relaxation.hpp"
#include "panoptigon/transform.hpp"

namespace panoptigon {

using json = nlohmann::json;

/// "x,y x,y ..." separated by single spaces. Throws std::invalid_argument.
LatticePolygon parse_polygon(const std::string& text);
std::string format_polygon(const LatticePolygon& p);

/// Numbers when they fit in 64 bits, decimal strings otherwise.
json to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const LatticePoint& p);
json to_json(const PointSet& s);
json to_json(const LatticePolygon& p);  // {"vertices": [[x,y],...]}
LatticePolygon polygon_from_json(const json& j);

json to_json(const UnimodularMap& t);
UnimodularMap map_from_json(const json& j);

std::string to_string(const Functional& f);  // "alpha,beta"

json to_json(const RationalPoint& p);
json to_json(const RationalPolygon& p);

json to_json(const HyperellipticForm& f);
HyperellipticForm form_from_json(const json& j);

json to_json(const CensusRecord& r);
CensusRecord record_from_json(const json& j);

json to_json(const CensusSummary& s);

}  // namespace panoptigon
