#pragma once

#include <string>

#include <json.hpp>

#include "clusterhall/engine.hpp"
#include "clusterhall/filtration.hpp"
#include "clusterhall/hall.hpp"
#include "clusterhall/mutation.hpp"

namespace clusterhall {

using json = nlohmann::ordered_json;

json to_json(const BigInt& v);  // number when it fits in 64 bits, else string
json to_json(const Rational& v);
json to_json(const QPoly& p);
json to_json(const LaurentPoly& p);
json to_json(const Quiver& q);
json to_json(const Settings& s);
json to_json(const Context& ctx, const IsoType& t);
json to_json(const Category& cat, const CCObject& x);
json to_json(const Category& cat, const TriangleCount& tc);
json to_json(const Category& cat, const MultiplicationReport& r);
json to_json(const Category& cat, const ElementaryStep& s);
json to_json(const Category& cat, const HallMultiplyReport& r);
json to_json(const Category& cat, const ConjectureReport& r);
json to_json(const Category& cat, const Expansion& e);
json to_json(const VariablesReport& r);
json to_json(const FanReport& r);
json to_json(const ToricReport& r);
json to_json(const BasisReport& r);
json to_json(const EpsilonForm& e);

json graph_json(const ExchangeGraph& g);
std::string graph_dot(const ExchangeGraph& g);

}  // namespace clusterhall
