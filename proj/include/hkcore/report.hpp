#pragma once

#include <json.hpp>

#include "cavity.hpp"
#include "decomposition.hpp"

namespace hkcore::report {

using json = nlohmann::ordered_json;

inline json profile(const TripletProfile& p) {
  return json{{"m", p.m}, {"r", p.r}, {"betti", p.betti}, {"chi", p.chi}};
}

inline json node_index(const NodeIndex& idx, int level) {
  return json{{"node", idx.node},
              {"n", idx.n},
              {"betti", idx.betti},
              {"chi_i", idx.chi_i},
              {"dmax", idx.has_central},
              {"dmin", idx.has_isolated},
              {"class", to_string(classify(idx, level))}};
}

inline json core_level(const CoreLevel& c) {
  json j{{"level", c.level}, {"nodes", c.graph.node_count()}, {"edges", c.graph.edge_count()}};
  j.update(profile(c.profile));
  j["members"] = c.graph.nodes();
  return j;
}

inline json cavity(const Cavity& c) {
  return json{{"order", c.order}, {"nodes", c.nodes}, {"structure", to_string(c.kind)}, {"nesting", nesting(c)}};
}

inline json ranked(const RankedNode& r) { return json{{"node", r.node}, {"level", r.level}, {"betti", r.betti}}; }

}  // namespace hkcore::report
