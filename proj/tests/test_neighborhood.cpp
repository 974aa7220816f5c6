#include <catch2/catch_amalgamated.hpp>

#include <hkcore/fixtures.hpp>
#include <hkcore/neighborhood.hpp>

#include "oracle.hpp"

using namespace hkcore;

namespace {

struct Expected {
  node_t node;
  std::size_t n;
  bool dmax, dmin;
  std::vector<long long> betti;
  long long chi_i;
};

/// Joins a new hub node 100 to every node of `sub`.
Graph cone(Graph sub) {
  for (node_t v : sub.nodes()) sub.add_edge(100, v);
  return sub;
}

}  // namespace

TEST_CASE("sample network node indices") {
  // Node 5's subnetwork is an edge plus a lone node, so it necessarily has an
  // isolated member.
  const std::vector<Expected> want{
      {1, 4, true, false, {1, 0, 0}, 0},   {2, 4, true, false, {1, 0, 0}, 0},  {3, 5, false, true, {3, 0, 0}, -2},
      {4, 3, true, false, {1, 0, 0}, 0},   {5, 3, false, true, {2, 0, 0}, -1}, {6, 3, false, true, {3, 0, 0}, -2},
      {7, 2, false, true, {2, 0, 0}, -1},  {8, 2, false, true, {2, 0, 0}, -1}, {9, 5, false, true, {2, 1, 0}, 0},
      {10, 4, false, false, {1, 1, 0}, 1}, {11, 4, false, false, {1, 1, 0}, 1}, {12, 4, false, false, {1, 1, 0}, 1},
      {13, 4, false, false, {1, 1, 0}, 1}, {14, 5, false, true, {2, 1, 0}, 0},
  };
  const auto idx = index_all(fixtures::sample_fig2(), 2);
  REQUIRE(idx.size() == want.size());
  for (const auto& w : want) {
    INFO("node " << w.node);
    const auto& got = idx.at(w.node);
    CHECK(got.n == w.n);
    CHECK(got.has_central == w.dmax);
    CHECK(got.has_isolated == w.dmin);
    CHECK(got.betti == w.betti);
    CHECK(got.chi_i == w.chi_i);
  }
  CHECK(format_index(idx.at(4)) == "{3,dmax=2,(1,0,0),0}");
  CHECK(format_index(idx.at(9)) == "{5,dmin=0,(2,1,0),0}");
  CHECK(format_index(idx.at(10)) == "{4,(1,1,0),1}");
}

TEST_CASE("indices of small subnetworks") {
  auto at_hub = [](const Graph& sub, int k_cut) { return node_index(cone(sub), 100, k_cut); };
  CHECK(format_index(at_hub(parse_edge_list("1 2\n3\n"), 1)) == "{3,dmin=0,(2,0),-1}");
  CHECK(format_index(at_hub(fixtures::cycle(4), 1)) == "{4,(1,1),1}");
  CHECK(format_index(at_hub(fixtures::octahedron(), 2)) == "{6,(1,0,1),-1}");
  CHECK(format_index(at_hub(parse_edge_list("1 2\n1 3\n1 4\n"), 1)) == "{4,dmax=3,(1,0),0}");
  const auto lone = node_index(parse_edge_list("5\n1 2\n"), 5, 1);
  CHECK(lone.n == 0);
  CHECK(lone.betti.empty());
  CHECK(lone.chi_i == 1);
  CHECK(classify(lone, 1) == DeletionClass::keep);
  CHECK_THROWS_AS(node_index(fixtures::cycle(4), 1, 0), DomainError);
}

TEST_CASE("characteristic number is one minus the subnetwork Euler characteristic") {
  auto graphs = oracle::corpus();
  for (const char* f : {"octahedron", "icosahedron", "hexahedron_diagonal", "dodecahedron_stellated", "sample_fig2"})
    graphs.push_back(fixtures::generate(f));
  for (const auto& g : graphs)
    for (const auto& [v, idx] : index_all(g, 3)) CHECK(idx.chi_i == 1 - oracle::profile(neighbor_subnetwork(g, v)).chi);
}

TEST_CASE("a central neighbor makes the subnetwork trivial") {
  for (const auto& g : oracle::corpus()) {
    for (node_t v : g.nodes()) {
      const auto sub = neighbor_subnetwork(g, v);
      const auto strict = node_index(g, v, 4, IndexOptions{true});
      const auto fast = node_index(g, v, 4);
      if (strict.has_central) {
        const auto want = oracle::profile(sub);
        CHECK(want.betti[0] == 1);
        for (std::size_t k = 1; k < want.betti.size(); ++k) CHECK(want.betti[k] == 0);
        CHECK(classify(fast, 1) == DeletionClass::trivial);
      }
      CHECK(strict == fast);
    }
  }
}

TEST_CASE("cutoff hides higher Betti numbers only outside strict mode") {
  const auto g = cone(fixtures::octahedron());
  const auto fast = node_index(g, 100, 1);
  CHECK(fast.betti == std::vector<long long>{1, 0});
  CHECK(classify(fast, 1) == DeletionClass::trivial);
  const auto strict = node_index(g, 100, 1, IndexOptions{true});
  CHECK(strict.hidden_betti);
  CHECK(classify(strict, 1) == DeletionClass::keep);
}

TEST_CASE("deletion classes by level") {
  auto idx = [](std::vector<long long> b) {
    NodeIndex i;
    i.node = 1;
    i.n = 5;
    i.betti = std::move(b);
    return i;
  };
  CHECK(classify(idx({1, 0, 0}), 1) == DeletionClass::trivial);
  CHECK(classify(idx({1, 0, 0}), 3) == DeletionClass::trivial);
  CHECK(classify(idx({2, 0, 0}), 1) == DeletionClass::keep);
  CHECK(classify(idx({2, 0, 0}), 2) == DeletionClass::branchy);
  CHECK(classify(idx({2, 1, 0}), 2) == DeletionClass::edge_candidate);
  CHECK(classify(idx({2, 1, 1}), 2) == DeletionClass::keep);
  CHECK(classify(idx({1, 1, 0}), 2) == DeletionClass::keep);
  CHECK(classify(idx({1, 1, 0}), 3) == DeletionClass::cycle);
  CHECK(classify(idx({2, 1, 0}), 3) == DeletionClass::keep);
  CHECK(classify(idx({1, 0, 1}), 3) == DeletionClass::keep);
  CHECK(classify(idx({2, 3, 0, 0}), 4) == DeletionClass::cycle);
  CHECK(classify(idx({1, 0, 1, 0}), 4) == DeletionClass::cycle);
  CHECK(classify(idx({1, 0, 0, 1}), 4) == DeletionClass::keep);
  CHECK_THROWS_AS(classify(idx({1}), 0), DomainError);
  CHECK(std::string(to_string(DeletionClass::edge_candidate)) == "edge_candidate");
}

TEST_CASE("branches of a subnetwork") {
  const auto br = neighbor_branches(fixtures::sample_fig2(), 9, 2);
  REQUIRE(br.size() == 2);
  CHECK(br[0].nodes == std::vector<node_t>{5});
  CHECK(br[0].betti == std::vector<long long>{1, 0, 0});
  CHECK(br[1].nodes == std::vector<node_t>{10, 11, 12, 13});
  CHECK(br[1].betti == std::vector<long long>{1, 1, 0});
}

TEST_CASE("index_all is independent of the thread count") {
  const auto g = oracle::random_graph(60, 0.2, 11);
  const auto one = index_all(g, 3, {}, 1);
  CHECK(index_all(g, 3, {}, 4) == one);
  CHECK(index_all(g, 3, {}, 8) == one);
}
