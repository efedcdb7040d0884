#include <doctest.h>

#include <random>

#include "epw/decomposition.hpp"
#include "epw/minor.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace epw;

namespace {

Graph k5_minus_edge() { return delete_edges(complete_graph(5), {make_edge("1", "2")}); }

}  // namespace

TEST_SUITE("minor") {
  TEST_CASE("verify_embedding accepts the identity embedding") {
    auto g = samples::chorded_cycle();
    MinorEmbedding m;
    for (const auto& v : g.labels()) m.branch_sets[v] = {v};
    for (const auto& e : g.label_edges()) m.edge_map[e] = e;
    CHECK(verify_embedding(g, g, m));
    CHECK(m.footprint() == normalize(g.label_edges()));
  }

  TEST_CASE("verify_embedding rejects broken embeddings") {
    auto k3 = complete_graph(3);
    auto p3 = path_graph(3);
    MinorEmbedding m;
    m.branch_sets = {{"1", {"1"}}, {"2", {"2"}}, {"3", {"3"}}};
    m.edge_map = {{make_edge("1", "2"), make_edge("1", "2")},
                  {make_edge("2", "3"), make_edge("2", "3")},
                  {make_edge("1", "3"), make_edge("1", "3")}};
    CHECK_FALSE(verify_embedding(k3, p3, m));  // 1-3 is not an edge of the path

    auto k4 = complete_graph(4);
    MinorEmbedding overlap;
    overlap.branch_sets = {{"1", {"1"}}, {"2", {"1"}}};
    CHECK_FALSE(verify_embedding(path_graph(2), k4, overlap));

    MinorEmbedding disconnected;
    disconnected.branch_sets = {{"1", {"1", "3"}}, {"2", {"2"}}};
    disconnected.edge_map = {{make_edge("1", "2"), make_edge("1", "2")}};
    CHECK_FALSE(verify_embedding(path_graph(2), path_graph(3), disconnected));
  }

  TEST_CASE("subdivided K4 carries a K4 expansion") {
    auto g = samples::subdivided_k4();
    MinorEmbedding m;
    for (int i = 1; i <= 4; ++i) m.branch_sets[std::to_string(i)] = {std::to_string(i)};
    // each subdivision vertex joins the branch set of its smaller endpoint
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        const auto s = "s" + std::to_string(i) + std::to_string(j);
        m.branch_sets[std::to_string(i)].push_back(s);
        m.edge_map[make_edge(std::to_string(i), std::to_string(j))] = make_edge(s, std::to_string(j));
      }
    }
    CHECK(verify_embedding(complete_graph(4), g, m));
    auto found = find_expansion(complete_graph(4), g);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(verify_embedding(complete_graph(4), g, *found.embedding));
  }

  TEST_CASE("find_expansion basics") {
    auto r = find_expansion(complete_graph(3), complete_graph(5));
    REQUIRE(r.status == SearchStatus::found);
    CHECK(verify_embedding(complete_graph(3), complete_graph(5), *r.embedding));
    CHECK(find_expansion(complete_graph(3), star_graph(4)).status == SearchStatus::none);
    CHECK(find_expansion(complete_graph(3), path_graph(6)).status == SearchStatus::none);
    CHECK(find_expansion(Graph{}, path_graph(2)).status == SearchStatus::found);
  }

  TEST_CASE("rooted search: every vertex of K5 - e lies on a triangle") {
    auto g = k5_minus_edge();
    for (const auto& root : g.labels()) {
      EmbeddingConstraints c;
      c.must_contain["1"] = root;
      auto r = find_expansion(complete_graph(3), g, c);
      REQUIRE(r.status == SearchStatus::found);
      CHECK(verify_embedding(complete_graph(3), g, *r.embedding));
      CHECK(satisfies(g, *r.embedding, c));
    }
  }

  TEST_CASE("region constraints") {
    auto g = samples::disjoint(complete_graph(3, "a"), complete_graph(3, "b"));
    const auto k3 = complete_graph(3);
    EmbeddingConstraints c;
    for (const auto& x : k3.labels()) c.allowed_region[x] = {"b1", "b2", "b3"};
    auto r = find_expansion(complete_graph(3), g, c);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(satisfies(g, *r.embedding, c));
    CHECK(r.embedding->branch_sets.at("1").front().front() == 'b');

    EmbeddingConstraints none;
    for (const auto& x : k3.labels()) none.forbidden_region[x] = std::vector<VertexLabel>{"a1", "b1"};
    CHECK(find_expansion(complete_graph(3), g, none).status == SearchStatus::none);
  }

  TEST_CASE("constraints naming unknown vertices are errors") {
    EmbeddingConstraints c;
    c.must_contain["zz"] = "1";
    CHECK_THROWS_AS(find_expansion(complete_graph(3), complete_graph(4), c), GraphError);
    EmbeddingConstraints d;
    d.must_contain["1"] = "zz";
    CHECK_THROWS_AS(find_expansion(complete_graph(3), complete_graph(4), d), GraphError);
  }

  TEST_CASE("budget exhaustion is distinct from none") {
    auto r = find_expansion(complete_graph(5), samples::petersen(), {}, 3);
    CHECK(r.status == SearchStatus::budget_exhausted);
    auto full = find_expansion(complete_graph(5), samples::petersen());
    CHECK(full.status == SearchStatus::found);
    CHECK(verify_embedding(complete_graph(5), samples::petersen(), *full.embedding));
  }

  TEST_CASE("is_minor and its guard") {
    CHECK(is_minor(path_graph(3), complete_graph(3)));
    CHECK_FALSE(is_minor(complete_graph(4), complete_graph(3)));
    CHECK(is_minor(complete_graph(4), samples::wagner()) == naive_is_minor_oracle(complete_graph(4), samples::wagner()));
    CHECK_FALSE(is_minor(complete_graph(5), samples::wagner()));
    CHECK_THROWS_AS(is_minor(complete_graph(3), path_graph(30)), GraphError);
    CHECK_FALSE(is_minor(complete_graph(3), path_graph(30), true));
  }

  TEST_CASE("naive oracle") {
    CHECK(naive_is_minor_oracle(complete_graph(3), cycle_graph(5)));
    CHECK_FALSE(naive_is_minor_oracle(star_graph(3), cycle_graph(6)));
    CHECK_THROWS_AS(naive_is_minor_oracle(complete_graph(3), path_graph(9)), GraphError);
  }

  TEST_CASE("engine agrees with the naive oracle on all graphs up to four vertices") {
    std::vector<Graph> all;
    for (int n = 1; n <= 4; ++n) {
      auto more = testing::nonisomorphic_graphs(n);
      all.insert(all.end(), more.begin(), more.end());
    }
    CHECK(all.size() == 18);
    for (const auto& h : all) {
      for (const auto& g : all) {
        auto r = find_expansion(h, g);
        CHECK(r.status != SearchStatus::budget_exhausted);
        CHECK((r.status == SearchStatus::found) == naive_is_minor_oracle(h, g));
        if (r.embedding) CHECK(verify_embedding(h, g, *r.embedding));
      }
    }
  }

  TEST_CASE("random rooted searches are sound") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      auto g = testing::random_graph(rng, 7, 0.5);
      auto h = testing::random_graph(rng, 3, 0.7);
      EmbeddingConstraints c;
      c.must_contain[h.label(0)] = g.label(static_cast<int>(rng() % g.order()));
      auto r = find_expansion(h, g, c);
      REQUIRE(r.status != SearchStatus::budget_exhausted);
      if (r.embedding) {
        CHECK(verify_embedding(h, g, *r.embedding));
        CHECK(satisfies(g, *r.embedding, c));
      }
      if (r.status == SearchStatus::none) {
        // without the root the answer can only get easier
        auto free = find_expansion(h, g);
        if (free.status == SearchStatus::found) {
          CHECK(std::find(free.embedding->branch_sets.at(h.label(0)).begin(),
                          free.embedding->branch_sets.at(h.label(0)).end(),
                          c.must_contain.begin()->second) == free.embedding->branch_sets.at(h.label(0)).end());
        }
      }
    }
  }

  TEST_CASE("partition_components") {
    auto h = samples::disjoint(complete_graph(3, "a"), complete_graph(2, "b"));
    auto comps = connected_components(h);
    auto p = partition_components(h, comps[0]);
    CHECK(p.not_containing.size() == 1);
    CHECK(p.containing.empty());

    auto h2 = samples::disjoint(complete_graph(3, "a"), complete_graph(4, "b"));
    auto p2 = partition_components(h2, connected_components(h2)[0]);
    CHECK(p2.not_containing.empty());
    CHECK(p2.containing.size() == 1);

    auto twins = samples::disjoint(complete_graph(3, "a"), complete_graph(3, "b"));
    auto p3 = partition_components(twins, connected_components(twins)[0]);
    CHECK(p3.containing.size() == 1);

    CHECK_THROWS_AS(partition_components(h, complete_graph(3)), GraphError);
  }
}
