#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace hkcore::fixtures {

inline Graph complete(std::size_t n) {
  Graph g;
  for (node_t i = 1; i <= n; ++i) {
    g.add_node(i);
    for (node_t j = 1; j < i; ++j) g.add_edge(j, i);
  }
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 nodes");
  Graph g;
  for (node_t i = 1; i <= n; ++i) g.add_edge(i, i == n ? 1 : i + 1);
  return g;
}

/// Cocktail-party graph on 2d nodes; antipodes are (2i-1, 2i).
inline Graph orthoplex_boundary(std::size_t d) {
  if (d < 1) throw DomainError("orthoplex dimension must be at least 1");
  Graph g;
  const auto n = static_cast<node_t>(2 * d);
  for (node_t i = 1; i <= n; ++i) {
    g.add_node(i);
    for (node_t j = 1; j < i; ++j)
      if ((j + 1) / 2 != (i + 1) / 2) g.add_edge(j, i);
  }
  return g;
}

inline Graph tetrahedron() { return complete(4); }

inline Graph octahedron() { return orthoplex_boundary(3); }

/// Top 1, upper ring 2-6, lower ring 7-11, bottom 12.
inline Graph icosahedron() {
  Graph g;
  for (node_t a = 0; a < 5; ++a) {
    const node_t b = (a + 1) % 5;
    const node_t up = 2 + a, lo = 7 + a;
    g.add_edge(1, up);
    g.add_edge(up, 2 + b);
    g.add_edge(up, lo);
    g.add_edge(up, 7 + b);
    g.add_edge(lo, 7 + b);
    g.add_edge(lo, 12);
  }
  return g;
}

/// Cube with label 1 + x + 2y + 4z, plus the lexicographically smallest
/// diagonal of each face.
inline Graph hexahedron_diagonal() {
  Graph g;
  auto label = [](int x, int y, int z) { return static_cast<node_t>(1 + x + 2 * y + 4 * z); };
  for (int v = 0; v < 8; ++v)
    for (int axis = 0; axis < 3; ++axis)
      if (!((v >> axis) & 1)) g.add_edge(static_cast<node_t>(1 + v), static_cast<node_t>(1 + (v | (1 << axis))));
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::vector<node_t> face;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          std::array<int, 3> c{};
          c[static_cast<std::size_t>(axis)] = side;
          c[static_cast<std::size_t>((axis + 1) % 3)] = a;
          c[static_cast<std::size_t>((axis + 2) % 3)] = b;
          face.push_back(label(c[0], c[1], c[2]));
        }
      std::sort(face.begin(), face.end());
      // face[0] is opposite face[3] on a square with ascending labels
      g.add_edge(face[0], face[3]);
    }
  return g;
}

namespace detail {

inline Graph dodecahedron() {
  Graph g;
  for (node_t i = 0; i < 5; ++i) {
    g.add_edge(1 + i, 1 + (i + 1) % 5);
    g.add_edge(1 + i, 6 + 2 * i);
    g.add_edge(6 + 2 * i + 1, 16 + i);
    g.add_edge(16 + i, 16 + (i + 1) % 5);
  }
  for (node_t j = 0; j < 10; ++j) g.add_edge(6 + j, 6 + (j + 1) % 10);
  return g;
}

/// All 5-cycles as sorted node sets, ascending.
inline std::vector<std::vector<node_t>> pentagons(const Graph& g) {
  std::set<std::vector<node_t>> out;
  std::vector<node_t> path;
  auto extend = [&](auto&& self, node_t cur) -> void {
    if (path.size() == 5) {
      if (g.has_edge(cur, path.front())) {
        auto s = path;
        std::sort(s.begin(), s.end());
        out.insert(s);
      }
      return;
    }
    for (node_t nx : g.neighbors(cur)) {
      if (nx <= path.front() || std::find(path.begin(), path.end(), nx) != path.end()) continue;
      path.push_back(nx);
      self(self, nx);
      path.pop_back();
    }
  };
  for (node_t s : g.nodes()) {
    path = {s};
    extend(extend, s);
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

/// Dodecahedron (nodes 1-20) with a node 21-32 added inside each pentagonal
/// face and joined to its five corners.
inline Graph dodecahedron_stellated() {
  Graph g = detail::dodecahedron();
  node_t next = 21;
  for (const auto& face : detail::pentagons(g)) {
    for (node_t v : face) g.add_edge(next, v);
    ++next;
  }
  return g;
}

/// 14-node sample network: a tetrahedron 1-2-3-4, an octahedron on 9-14
/// (antipodes 9/14, 10/12, 11/13), and the bridging cycles through 3, 5, 6,
/// 7 and 8.
inline Graph sample_fig2() {
  static constexpr std::string_view edges =
      "1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 6\n3 8\n5 9\n6 7\n6 14\n7 8\n"
      "9 10\n9 11\n9 12\n9 13\n10 11\n10 13\n10 14\n11 12\n11 14\n12 13\n12 14\n13 14\n";
  return parse_edge_list(edges);
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"complete:N",    "cycle:N",           "orthoplex_boundary:D",
                                          "tetrahedron",   "octahedron",        "icosahedron",
                                          "hexahedron_diagonal", "dodecahedron_stellated", "sample_fig2"};
  return n;
}

/// Builds a fixture from a name such as "octahedron", "cycle:7" or
/// "orthoplex_boundary:4".
inline Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::size_t param = 0;
  const bool has_param = colon != std::string_view::npos;
  if (has_param) {
    const auto arg = spec.substr(colon + 1);
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), param);
    if (ec != std::errc{} || p != arg.data() + arg.size() || param > 4096)
      throw DomainError("bad fixture parameter in '" + std::string(spec) + "'");
  }
  auto plain = [&](Graph (*fn)()) {
    if (has_param) throw DomainError("fixture '" + std::string(name) + "' takes no parameter");
    return fn();
  };
  auto sized = [&](Graph (*fn)(std::size_t)) {
    if (!has_param) throw DomainError("fixture '" + std::string(name) + "' needs a parameter, e.g. " +
                                      std::string(name) + ":4");
    return fn(param);
  };
  if (name == "complete") return sized(complete);
  if (name == "cycle") return sized(cycle);
  if (name == "orthoplex_boundary" || name == "orthoplex") return sized(orthoplex_boundary);
  if (name == "tetrahedron") return plain(tetrahedron);
  if (name == "octahedron") return plain(octahedron);
  if (name == "icosahedron") return plain(icosahedron);
  if (name == "hexahedron_diagonal") return plain(hexahedron_diagonal);
  if (name == "dodecahedron_stellated") return plain(dodecahedron_stellated);
  if (name == "sample_fig2") return plain(sample_fig2);
  throw DomainError("unknown fixture '" + std::string(spec) + "'");
}

}  // namespace hkcore::fixtures
