#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "propp/graph_of_groups.hpp"

namespace propp {

using Json = nlohmann::ordered_json;

/// Parse the graph-of-groups schema (groups, vertices, edges, aliases).
/// Structural problems raise Schema; call validate() for the rest.
GraphOfGroups graph_from_json(const Json& j);
Json graph_to_json(const GraphOfGroups& g);
Json group_to_json(const Group& g);

/// Read, parse and validate.
GraphOfGroups load_graph(const std::string& path);
Json load_json(const std::string& path);

/// DOT rendering; vertex ids default to "v:<name>", `ids` overrides some.
std::string to_dot(const GraphOfGroups& g, const std::map<std::string, std::string>& ids = {});

}  // namespace propp
