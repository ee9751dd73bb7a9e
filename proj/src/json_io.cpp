#include "chainpart/json_io.hpp"

#include <fstream>

#include "chainpart/error.hpp"

namespace chainpart {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw BadParameterError(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw BadParameterError(std::string("bad JSON value for ") + what + ": " + e.what());
  }
}

}  // namespace

Json poset_to_json(const Poset& poset, bool closed) {
  Json rel = Json::array();
  for (auto [u, v] : closed ? poset.relations() : poset.covers()) rel.push_back({u, v});
  Json j{{"n", poset.size()}, {"relations", std::move(rel)}};
  if (closed) j["closed"] = true;
  return j;
}

Poset poset_from_json(const Json& j) {
  const auto n = as<std::size_t>(field(j, "n"), "n");
  const auto rel = as<std::vector<Relation>>(field(j, "relations"), "relations");
  return Poset::from_relations(n, rel);
}

Json online_instance_to_json(const OnlineInstance& instance, bool closed) {
  Json j = poset_to_json(instance.poset, closed);
  j["presentation"] = instance.presentation;
  j["width_bound"] = instance.width_bound;
  return j;
}

OnlineInstance online_instance_from_json(const Json& j) {
  OnlineInstance inst{poset_from_json(j), as<std::vector<Vertex>>(field(j, "presentation"), "presentation"),
                      as<std::size_t>(field(j, "width_bound"), "width_bound")};
  inst.validate();
  return inst;
}

Json regular_instance_to_json(const RegularInstance& instance, bool closed) {
  Json as_json = Json::array();
  for (const Antichain& a : instance.antichains) as_json.push_back(a.members);
  return Json{{"poset", poset_to_json(instance.poset, closed)}, {"antichains", std::move(as_json)}, {"w", instance.w}};
}

RegularInstance regular_instance_from_json(const Json& j) {
  RegularInstance inst{poset_from_json(field(j, "poset")), {}, as<std::size_t>(field(j, "w"), "w")};
  for (const Json& a : field(j, "antichains")) {
    auto members = as<std::vector<Vertex>>(a, "antichain");
    for (Vertex v : members)
      if (v >= inst.poset.size()) throw VertexRangeError("antichain vertex " + std::to_string(v) + " out of range");
    inst.antichains.emplace_back(std::move(members));
  }
  return inst;
}

Json partition_to_json(const ChainPartition& partition) {
  return Json{{"count", partition.count}, {"chain_of", partition.chain_of}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + path);
}

}  // namespace chainpart
