#pragma once

#include <hkcore/graph.hpp>

#include <filesystem>
#include <random>
#include <fstream>
#include <string>

namespace support {

using hkcore::Graph;
using hkcore::node_t;

/// Triangulated torus: an n x n grid with wraparound and one diagonal per
/// square. Betti numbers (1, 2, 1) for n >= 4.
inline Graph grid_torus(node_t n) {
  Graph g;
  auto id = [n](node_t i, node_t j) { return 1 + (i % n) * n + (j % n); };
  for (node_t i = 0; i < n; ++i)
    for (node_t j = 0; j < n; ++j) {
      g.add_edge(id(i, j), id(i + 1, j));
      g.add_edge(id(i, j), id(i, j + 1));
      g.add_edge(id(i, j), id(i + 1, j + 1));
    }
  return g;
}

/// Octahedron (antipodes 1/2, 3/4, 5/6) plus node 7 coning off the closed
/// star of node 1. Node 1's subnetwork becomes contractible while the
/// 2-cavity survives.
inline Graph octahedron_with_capped_star() {
  Graph g;
  for (node_t i = 1; i <= 6; ++i)
    for (node_t j = i + 1; j <= 6; ++j)
      if ((i + 1) / 2 != (j + 1) / 2) g.add_edge(i, j);
  for (node_t v : {1, 3, 4, 5, 6}) g.add_edge(7, v);
  return g;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("hkcore-" + tag + "-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::filesystem::path file(const std::string& name, const std::string& content) const {
    auto p = path_ / name;
    std::ofstream(p) << content;
    return p;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace support
