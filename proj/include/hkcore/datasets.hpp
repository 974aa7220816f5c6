#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace hkcore::datasets {

struct Entry {
  std::string_view name;
  std::string_view file;
  std::size_t nodes;
  std::size_t edges;
};

/// Known external networks, looked up as edge lists under $HKCORE_DATA_DIR.
inline constexpr Entry known[] = {
    {"celegans", "celegans.edges", 297, 2148},
    {"cat", "cat.edges", 65, 730},
};

inline std::optional<std::filesystem::path> data_dir() {
  const char* dir = std::getenv("HKCORE_DATA_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir);
}

inline const Entry& entry(std::string_view name) {
  for (const auto& e : known)
    if (e.name == name) return e;
  throw DomainError("unknown dataset '" + std::string(name) + "'");
}

/// Loads a dataset and checks its node and edge counts. Returns nothing when
/// the file is absent; throws on a count mismatch.
inline std::optional<Graph> load(std::string_view name) {
  const auto& e = entry(name);
  auto dir = data_dir();
  if (!dir) return std::nullopt;
  const auto path = *dir / e.file;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Graph g = parse_edge_list(in);
  if (g.node_count() != e.nodes || g.edge_count() != e.edges)
    throw DomainError(path.string() + ": expected " + std::to_string(e.nodes) + " nodes / " +
                      std::to_string(e.edges) + " edges, found " + std::to_string(g.node_count()) + " / " +
                      std::to_string(g.edge_count()));
  return g;
}

}  // namespace hkcore::datasets
