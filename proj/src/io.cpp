#include "sgh/io.hpp"

#include <fstream>
#include <stdexcept>

namespace sgh {

namespace {

json girth_entry(const Girth& g) {
  if (g.is_infinite()) return nullptr;
  return g.value();
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::runtime_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::runtime_error(std::string("missing array field \"") + key + "\"");
  return j[key];
}

std::string optional_name(const json& j) {
  if (!j.contains("name")) return "";
  if (!j["name"].is_string()) throw std::runtime_error("\"name\" must be a string");
  return j["name"].get<std::string>();
}

}  // namespace

json to_json(const SignedGraph& g) {
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (const SignedEdge& e : g.edges())
    edges.push_back(json::array({e.u, e.v, std::string(1, sign_char(e.sign))}));
  j["edges"] = std::move(edges);
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

json to_json(const WeightedSignedGraph& g) {
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (const WeightedEdge& e : g.edges()) edges.push_back(json::array({e.u, e.v, e.weight}));
  j["edges"] = std::move(edges);
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

json to_json(const GirthVector& v) {
  json j;
  j["g00"] = girth_entry(v.g00());
  j["g01"] = girth_entry(v.g01());
  j["g10"] = girth_entry(v.g10());
  j["g11"] = girth_entry(v.g11());
  return j;
}

json to_json(const Certificate& c) {
  json j;
  j["g"] = c.girth;
  j["base"] = to_json(c.base);
  json dist = json::array();
  for (const WeightedEdge& e : c.dist_graph.edges())
    dist.push_back(json::array({e.u, e.v, e.weight}));
  j["dist_edges"] = std::move(dist);
  json tris = json::array();
  for (const Triangle& t : c.triangles) tris.push_back(json::array({t[0], t[1], t[2]}));
  j["triangles"] = std::move(tris);
  return j;
}

json to_json(const Homomorphism& h) {
  json j;
  j["switch"] = h.switch_bits;
  j["vertex_map"] = h.vertex_map;
  j["edge_map"] = h.edge_map;
  return j;
}

SignedGraph signed_graph_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("graph must be a JSON object");
  int n = require_int(j.contains("n") ? j["n"] : json(), "\"n\"");
  std::vector<SignedEdge> edges;
  for (const json& e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_string())
      throw std::runtime_error("each edge must be [u, v, \"+\"|\"-\"]");
    std::string s = e[2].get<std::string>();
    if (s != "+" && s != "-") throw std::runtime_error("edge sign must be \"+\" or \"-\"");
    edges.push_back({require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"),
                     s == "+" ? Sign::Plus : Sign::Minus});
  }
  return SignedGraph(n, std::move(edges), optional_name(j));
}

WeightedSignedGraph weighted_graph_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("graph must be a JSON object");
  int n = require_int(j.contains("n") ? j["n"] : json(), "\"n\"");
  std::vector<WeightedEdge> edges;
  for (const json& e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::runtime_error("each edge must be [u, v, weight]");
    edges.push_back({require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"),
                     require_int(e[2], "edge weight")});
  }
  return WeightedSignedGraph(n, std::move(edges), optional_name(j));
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("certificate must be a JSON object");
  if (!j.contains("base")) throw std::runtime_error("certificate needs a \"base\" graph");
  Certificate c{signed_graph_from_json(j["base"]),
                require_int(j.contains("g") ? j["g"] : json(), "\"g\""),
                WeightedSignedGraph(0), {}};
  std::vector<WeightedEdge> dist;
  for (const json& e : require_array(j, "dist_edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::runtime_error("each distance edge must be [u, v, weight]");
    dist.push_back({require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"),
                    require_int(e[2], "edge weight")});
  }
  c.dist_graph = WeightedSignedGraph(c.base.order(), std::move(dist));
  for (const json& t : require_array(j, "triangles")) {
    if (!t.is_array() || t.size() != 3)
      throw std::runtime_error("each triangle must be [x, y, z]");
    c.triangles.push_back({require_int(t[0], "triangle vertex"),
                           require_int(t[1], "triangle vertex"),
                           require_int(t[2], "triangle vertex")});
  }
  return c;
}

Homomorphism homomorphism_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("homomorphism must be a JSON object");
  Homomorphism h;
  for (const json& b : require_array(j, "switch")) {
    int x = require_int(b, "switch bit");
    if (x != 0 && x != 1) throw std::runtime_error("switch bits must be 0 or 1");
    h.switch_bits.push_back(static_cast<std::uint8_t>(x));
  }
  for (const json& v : require_array(j, "vertex_map"))
    h.vertex_map.push_back(require_int(v, "vertex image"));
  for (const json& e : require_array(j, "edge_map"))
    h.edge_map.push_back(require_int(e, "edge image"));
  return h;
}

std::string to_dot(const SignedGraph& g) {
  std::string out = "graph {\n";
  std::vector<char> touched(g.order(), 0);
  for (const SignedEdge& e : g.edges()) {
    touched[e.u] = touched[e.v] = 1;
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (negative(e.sign)) out += " [style=dashed, color=red]";
    out += ";\n";
  }
  for (int v = 0; v < g.order(); ++v)
    if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string to_dot(const WeightedSignedGraph& g) {
  std::string out = "graph {\n";
  std::vector<char> touched(g.order(), 0);
  for (const WeightedEdge& e : g.edges()) {
    touched[e.u] = touched[e.v] = 1;
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" +
           std::to_string(std::abs(e.weight)) + "\"";
    if (e.weight < 0) out += ", style=dashed, color=red";
    out += "];\n";
  }
  for (int v = 0; v < g.order(); ++v)
    if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace sgh
