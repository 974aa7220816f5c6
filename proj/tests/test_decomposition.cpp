#include <catch2/catch_amalgamated.hpp>

#include <hkcore/decomposition.hpp>
#include <hkcore/fixtures.hpp>

#include <sstream>

#include "oracle.hpp"
#include "support.hpp"

using namespace hkcore;

namespace {

std::vector<std::string> log_lines(const std::vector<DeletionLogEntry>& log) {
  std::vector<std::string> out;
  for (const auto& e : log) out.push_back(format_log_line(e));
  return out;
}

std::vector<long long> trim(std::vector<long long> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

bool nested(const Graph& small, const Graph& big) {
  for (const auto& [u, v] : small.edges())
    if (!big.has_edge(u, v)) return false;
  for (node_t v : small.nodes())
    if (!big.has_node(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("sample network decomposition") {
  const auto r = decompose(fixtures::sample_fig2(), 3);
  REQUIRE(r.cores.size() == 3);
  CHECK(r.k_cut == 2);
  const auto& h1 = r.cores[1].profile;
  CHECK(h1.m == std::vector<long long>{12, 20, 8});
  CHECK(h1.r == std::vector<long long>{0, 11, 7});
  CHECK(h1.betti == std::vector<long long>{1, 2, 1});
  CHECK(h1.chi == 0);
  const auto& h2 = r.cores[2].profile;
  CHECK(h2.m == std::vector<long long>{6, 12, 8});
  CHECK(h2.betti == std::vector<long long>{1, 0, 1});
  CHECK(h2.chi == 2);
  CHECK(r.cores[2].graph.nodes() == std::vector<node_t>{9, 10, 11, 12, 13, 14});
  CHECK(log_lines(r.logs[1]) == std::vector<std::string>{"DEL NODE 4 step=1 idx={3,dmax=2,(1,0,0),0}",
                                                         "DEL NODE 2 step=1 idx={3,dmax=2,(1,0,0),0}"});
  std::vector<node_t> step2;
  for (const auto& e : r.logs[2]) step2.push_back(e.u);
  CHECK(step2 == std::vector<node_t>{1, 5, 3, 8, 7, 6});
  CHECK(r.logs[2][0].index_before == node_index(r.cores[1].graph, 1, 2));
  CHECK(r.warnings.empty());
}

TEST_CASE("standalone peel phases agree with decompose") {
  const auto g = fixtures::sample_fig2();
  const auto r = decompose(g, 2);
  auto [h1, log1] = peel_trivial(g, 2);
  CHECK(h1 == r.cores[1].graph);
  CHECK(log1 == r.logs[1]);
  auto [h2, log2] = peel_level2(h1, 2);
  CHECK(h2 == r.cores[2].graph);
  const auto cross = fixtures::orthoplex_boundary(4);
  CHECK(peel_level_j(cross, 3, 3).first == cross);
  CHECK_THROWS_AS(peel_level_j(g, 2, 2), DomainError);
  CHECK_THROWS_AS(decompose(g, 0), DomainError);
}

TEST_CASE("sample network shell") {
  const auto r = decompose(fixtures::sample_fig2(), 2);
  const auto shell = hk_shell(r.cores[1].graph, r.cores[2].graph, 1);
  CHECK(shell.profile.m == std::vector<long long>{9, 10});
  CHECK(shell.profile.r == std::vector<long long>{0, 8});
  CHECK(shell.profile.betti == std::vector<long long>{1, 2});
  CHECK(shell.profile.chi == -1);
  CHECK(log_lines(shell.log).front() == "DEL EDGE 9 13 step=1 idx={5,dmin=0,(2,1,0),0}");
  CHECK(hk_shell(r.cores[2].graph, r.cores[2].graph, 2).graph.empty());
}

TEST_CASE("core ranking") {
  const auto r = decompose(fixtures::sample_fig2(), 3);
  const auto ranked = core_rank(r);
  std::vector<node_t> order;
  for (const auto& n : ranked) order.push_back(n.node);
  CHECK(order == std::vector<node_t>{9, 10, 11, 12, 13, 14, 3, 6, 1, 5, 7, 8, 2, 4});
  CHECK(ranked.front().level == 2);
  CHECK(ranked.front().betti == 1);
  CHECK(ranked.back().level == 0);

  const auto k4 = decompose(fixtures::complete(4), 5);
  CHECK(k4.cores.size() == 1);
  for (const auto& n : core_rank(k4)) CHECK(n.level == 0);
}

TEST_CASE("retention shortcut") {
  const auto r = decompose(fixtures::sample_fig2(), 1);
  const auto ok = retain_subnetwork(r.cores[1].graph, 2, 2);
  CHECK(ok.accepted);
  CHECK(ok.kept == std::vector<node_t>{9, 10, 11, 12, 13, 14});
  CHECK(ok.after.betti == std::vector<long long>{1, 0, 1});

  const auto bad = retain_subnetwork(support::octahedron_with_capped_star(), 2, 2);
  CHECK(trim(bad.before.betti) == std::vector<long long>{1, 0, 1});
  CHECK(bad.kept == std::vector<node_t>{2, 3, 4, 5, 6});
  CHECK_FALSE(bad.accepted);
  CHECK(bad.changed == std::vector<int>{2});
  CHECK(bad.after.betti_at(2) == 0);
}

TEST_CASE("a torus cannot be peeled to level 2") {
  try {
    decompose(support::grid_torus(4), 2);
    FAIL("expected a stuck diagnostic");
  } catch (const DiagnosticError& e) {
    CHECK(e.kind() == DiagnosticError::Kind::stuck_phase);
    CHECK(e.residual_betti() == std::vector<long long>{1, 2, 1});
  }
}

TEST_CASE("core invariants on the random corpus") {
  int finished = 0;
  for (const auto& g : oracle::corpus()) {
    const auto h0 = oracle::profile(g).betti;
    try {
      const auto r = decompose(g, 10);
      ++finished;
      for (std::size_t j = 1; j < r.cores.size(); ++j) {
        const auto& b = r.cores[j].profile.betti;
        CHECK(nested(r.cores[j].graph, r.cores[j - 1].graph));
        CHECK(b[0] == h0[0]);
        for (std::size_t k = 1; k < h0.size(); ++k) CHECK((b.size() > k ? b[k] : 0) == (k < j ? 0 : h0[k]));
      }
    } catch (const DiagnosticError& e) {
      CHECK(e.kind() == DiagnosticError::Kind::stuck_phase);
    }
  }
  CHECK(finished > 50);
}

TEST_CASE("strict mode Betti bookkeeping on every deletion") {
  for (const auto& g : oracle::corpus()) {
    DecomposeOptions opts;
    opts.strict = true;
    CoreResult r;
    try {
      r = decompose(g, 10, opts);
    } catch (const DiagnosticError& e) {
      REQUIRE(e.kind() == DiagnosticError::Kind::stuck_phase);
      continue;
    }
    // replay the log against the oracle
    Graph cur = g;
    auto before = trim(oracle::profile(cur).betti);
    for (std::size_t level = 1; level < r.logs.size(); ++level) {
      for (const auto& e : r.logs[level]) {
        if (e.action == DeletionLogEntry::Action::node) cur.remove_node(e.u);
        else cur.remove_edge(e.u, e.v);
        auto after = trim(oracle::profile(cur).betti);
        REQUIRE(e.global_betti_after.has_value());
        CHECK(trim(*e.global_betti_after) == after);
        if (e.action == DeletionLogEntry::Action::node) {
          const auto cls = classify(e.index_before, 2);
          if (cls == DeletionClass::trivial) {
            CHECK(after == before);
          } else if (cls == DeletionClass::branchy && level == 2) {
            auto want = before;
            want.resize(std::max<std::size_t>(want.size(), 2), 0);
            want[1] -= e.index_before.betti[0] - 1;
            CHECK(after == trim(want));
          }
        }
        before = std::move(after);
      }
      CHECK(cur == r.cores[level].graph);
    }
  }
}

TEST_CASE("decomposition is identical under any thread count") {
  std::vector<Graph> graphs{fixtures::sample_fig2(), fixtures::dodecahedron_stellated(),
                            oracle::random_graph(30, 0.3, 5), oracle::random_graph(24, 0.45, 9)};
  for (const auto& g : graphs) {
    auto run = [&](unsigned t) {
      DecomposeOptions o;
      o.threads = t;
      try {
        const auto r = decompose(g, 10, o);
        std::string s;
        for (const auto& c : r.cores) {
          std::ostringstream out;
          write_edge_list(c.graph, out);
          s += out.str() + "|";
        }
        for (const auto& l : r.logs)
          for (const auto& e : l) s += format_log_line(e) + "\n";
        return s;
      } catch (const DiagnosticError& e) {
        return std::string("stuck ") + e.what();
      }
    };
    const auto one = run(1);
    CHECK(run(4) == one);
    CHECK(run(8) == one);
  }
}
