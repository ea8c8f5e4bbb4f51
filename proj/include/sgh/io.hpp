#pragma once

#include <string>

#include "json.hpp"

#include "sgh/distance.hpp"
#include "sgh/hom.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/weighted_graph.hpp"

namespace sgh {

using json = nlohmann::ordered_json;

json to_json(const SignedGraph& g);
json to_json(const WeightedSignedGraph& g);
json to_json(const GirthVector& v);  // infinite entries serialize as null
json to_json(const Certificate& c);
json to_json(const Homomorphism& h);

SignedGraph signed_graph_from_json(const json& j);
WeightedSignedGraph weighted_graph_from_json(const json& j);
Certificate certificate_from_json(const json& j);
Homomorphism homomorphism_from_json(const json& j);

std::string to_dot(const SignedGraph& g);
std::string to_dot(const WeightedSignedGraph& g);

json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace sgh
