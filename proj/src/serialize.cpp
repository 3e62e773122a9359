#include "kbar/serialize.hpp"

namespace kbar {

using nlohmann::json;

namespace {

json int_to_json(const InteriorItem& it) {
  if (it.is_particle()) return json{{"ip", it.particle}};
  json ch = json::array();
  for (const auto& c : it.children) ch.push_back(int_to_json(c));
  return json{{"sphere", {{"children", ch}}}};
}

json bnd_to_json(const BoundaryItem& it) {
  if (it.is_particle()) return json{{"bp", it.particle}};
  json in = json::array(), bn = json::array();
  for (const auto& c : it.interior) in.push_back(int_to_json(c));
  for (const auto& c : it.boundary) bn.push_back(bnd_to_json(c));
  return json{{"disk", {{"interior", in}, {"boundary", bn}}}};
}

InteriorItem int_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "interior item must be an object");
  if (j.contains("ip")) {
    if (!j["ip"].is_number_integer())
      throw Error(Errc::ParseError, "\"ip\" must be an integer");
    return InteriorItem::ip(j["ip"].get<int>());
  }
  if (j.contains("sphere")) {
    const json& s = j["sphere"];
    if (!s.is_object() || !s.contains("children") || !s["children"].is_array())
      throw Error(Errc::ParseError, "\"sphere\" needs a \"children\" array");
    std::vector<InteriorItem> ch;
    for (const auto& c : s["children"]) ch.push_back(int_from_json(c));
    return InteriorItem::sphere(std::move(ch));
  }
  throw Error(Errc::ParseError, "interior item must be \"ip\" or \"sphere\"");
}

BoundaryItem bnd_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "boundary item must be an object");
  if (j.contains("bp")) {
    if (!j["bp"].is_number_integer())
      throw Error(Errc::ParseError, "\"bp\" must be an integer");
    return BoundaryItem::bp(j["bp"].get<int>());
  }
  if (j.contains("disk")) {
    const json& d = j["disk"];
    if (!d.is_object() || !d.contains("interior") || !d.contains("boundary") ||
        !d["interior"].is_array() || !d["boundary"].is_array())
      throw Error(Errc::ParseError,
                  "\"disk\" needs \"interior\" and \"boundary\" arrays");
    std::vector<InteriorItem> in;
    std::vector<BoundaryItem> bn;
    for (const auto& c : d["interior"]) in.push_back(int_from_json(c));
    for (const auto& c : d["boundary"]) bn.push_back(bnd_from_json(c));
    return BoundaryItem::disk(std::move(in), std::move(bn));
  }
  throw Error(Errc::ParseError, "boundary item must be \"bp\" or \"disk\"");
}

}  // namespace

json tree_to_json(const BubbleTree& t) {
  json in = json::array(), bn = json::array();
  for (const auto& c : t.interior) in.push_back(int_to_json(c));
  for (const auto& c : t.boundary) bn.push_back(bnd_to_json(c));
  return json{{"n", t.n}, {"m", t.m}, {"root", {{"interior", in}, {"boundary", bn}}}};
}

BubbleTree tree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("root"))
    throw Error(Errc::ParseError, "tree needs \"n\", \"m\", \"root\"");
  const json& r = j["root"];
  if (!r.is_object() || !r.contains("interior") || !r.contains("boundary") ||
      !r["interior"].is_array() || !r["boundary"].is_array())
    throw Error(Errc::ParseError,
                "\"root\" needs \"interior\" and \"boundary\" arrays");
  BubbleTree t;
  t.n = j["n"].get<int>();
  t.m = j["m"].get<int>();
  for (const auto& c : r["interior"]) t.interior.push_back(int_from_json(c));
  for (const auto& c : r["boundary"]) t.boundary.push_back(bnd_from_json(c));
  return t;
}

BubbleTree tree_from_string(const std::string& s) {
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON");
  return tree_from_json(j);
}

namespace {

json dual_node_to_json(const DualTree::Node& n) {
  switch (n.kind) {
    case DualTree::Node::Kind::InteriorLeaf: return json{{"ip", n.label}};
    case DualTree::Node::Kind::BoundaryLeaf: return json{{"bp", n.label}};
    case DualTree::Node::Kind::Vertex: {
      json sp = json::array(), pl = json::array();
      for (const auto& c : n.spatial) sp.push_back(dual_node_to_json(c));
      for (const auto& c : n.planar) pl.push_back(dual_node_to_json(c));
      return json{{"vertex", {{"spatial", sp}, {"planar", pl}}}};
    }
  }
  return {};
}

DualTree::Node dual_node_from_json(const json& j) {
  DualTree::Node n;
  if (!j.is_object()) throw Error(Errc::ParseError, "dual node must be an object");
  if (j.contains("ip")) {
    n.kind = DualTree::Node::Kind::InteriorLeaf;
    n.label = j["ip"].get<int>();
    return n;
  }
  if (j.contains("bp")) {
    n.kind = DualTree::Node::Kind::BoundaryLeaf;
    n.label = j["bp"].get<int>();
    return n;
  }
  if (j.contains("vertex")) {
    const json& v = j["vertex"];
    if (!v.is_object() || !v.contains("spatial") || !v.contains("planar"))
      throw Error(Errc::ParseError, "\"vertex\" needs \"spatial\" and \"planar\"");
    n.kind = DualTree::Node::Kind::Vertex;
    for (const auto& c : v["spatial"]) n.spatial.push_back(dual_node_from_json(c));
    for (const auto& c : v["planar"]) n.planar.push_back(dual_node_from_json(c));
    return n;
  }
  throw Error(Errc::ParseError, "dual node must be \"ip\", \"bp\" or \"vertex\"");
}

}  // namespace

json dual_to_json(const DualTree& d) {
  return json{{"n", d.n}, {"m", d.m}, {"tree", dual_node_to_json(d.root)}};
}

DualTree dual_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("tree"))
    throw Error(Errc::ParseError, "dual tree needs \"n\", \"m\", \"tree\"");
  DualTree d;
  d.n = j["n"].get<int>();
  d.m = j["m"].get<int>();
  d.root = dual_node_from_json(j["tree"]);
  return d;
}

}  // namespace kbar
