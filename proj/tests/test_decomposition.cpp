#include <doctest.h>

#include <random>
#include <set>

#include "epw/decomposition.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace epw;

TEST_SUITE("decomposition") {
  TEST_CASE("connected components") {
    auto g = samples::disjoint(complete_graph(3, "a"), complete_graph(2, "b"));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 1);
    CHECK(connected_components(complete_graph(4)).size() == 1);
    CHECK(connected_components(Graph::from_lists({"x", "y", "z"}, {})).size() == 3);
    CHECK(connected_components(Graph{}).empty());
    CHECK(is_connected(path_graph(5)));
    CHECK_FALSE(is_connected(Graph::from_lists({"x", "y"}, {})));
  }

  TEST_CASE("bowtie has two blocks and one cutvertex") {
    auto t = block_cut_tree(samples::bowtie());
    CHECK(t.blocks.size() == 2);
    CHECK(t.cutvertices == std::vector<VertexLabel>{"v"});
    CHECK(t.tree_edges.size() == 2);
  }

  TEST_CASE("triangle with a pendant edge") {
    auto t = block_cut_tree(samples::triangle_pendant());
    REQUIRE(t.blocks.size() == 2);
    CHECK(t.blocks[0].vertices == std::vector<VertexLabel>{"b", "c", "s"});
    CHECK_FALSE(t.blocks[0].trivial);
    CHECK(t.blocks[1].vertices == std::vector<VertexLabel>{"d", "s"});
    CHECK(t.blocks[1].trivial);
    CHECK(t.cutvertices == std::vector<VertexLabel>{"s"});
    CHECK(t.degree_of_block(0) == 1);
  }

  TEST_CASE("degenerate and invalid inputs") {
    auto single = block_cut_tree(Graph::from_lists({"x"}, {}));
    REQUIRE(single.blocks.size() == 1);
    CHECK(single.cutvertices.empty());
    CHECK_THROWS_AS(block_cut_tree(Graph::from_lists({"x", "y"}, {})), GraphError);
    auto path = block_cut_tree(path_graph(4));
    CHECK(path.blocks.size() == 3);
    CHECK(path.cutvertices == std::vector<VertexLabel>{"2", "3"});
  }

  TEST_CASE("blocks match brute force on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      auto g = testing::random_connected_graph(rng, n, 0.25);
      auto t = block_cut_tree(g);
      std::set<std::vector<VertexLabel>> blocks;
      for (const auto& b : t.blocks) blocks.insert(b.vertices);
      CHECK(blocks == testing::brute_force_blocks(g));
      auto cuts = testing::brute_force_cutvertices(g);
      CHECK(std::set<VertexLabel>(t.cutvertices.begin(), t.cutvertices.end()) == cuts);
      // incidence edges form a tree on blocks + cutvertices
      CHECK(t.tree_edges.size() == t.blocks.size() + t.cutvertices.size() - 1);
    }
  }

  TEST_CASE("branch vertices") {
    CHECK(branch_vertices(samples::chorded_cycle(), samples::chorded_cycle_ctx()) == std::vector<VertexLabel>{"v", "w"});
    CHECK(branch_vertices(complete_graph(3), complete_graph(3)).empty());
    CHECK(branch_vertices(star_graph(3), star_graph(3)) == std::vector<VertexLabel>{"0"});
    CHECK(degree(samples::chorded_cycle_ctx(), "w") == 3);
    CHECK_THROWS_AS(branch_vertices(complete_graph(3), path_graph(3)), GraphError);
  }

  TEST_CASE("segments of the chorded cycle") {
    auto segs = segment_decomposition(samples::chorded_cycle(), samples::chorded_cycle_ctx());
    REQUIRE(segs.size() == 3);
    CHECK(segs[0].kind == SegmentKind::between);
    CHECK(segs[0].length() == 1);
    CHECK(segs[1].kind == SegmentKind::between);
    CHECK(segs[1].length() == 3);
    CHECK(segs[1].internal == std::vector<VertexLabel>{"u1", "u2"});
    CHECK(segs[2].kind == SegmentKind::pendant);
    CHECK(segs[2].from == "w");
    CHECK(segs[2].to == "w1");
    CHECK(segs[2].length() == 1);
  }

  TEST_CASE("pendant and closed segments") {
    auto star = segment_decomposition(star_graph(3), star_graph(3));
    CHECK(star.size() == 3);
    for (const auto& s : star) {
      CHECK(s.kind == SegmentKind::pendant);
      CHECK(s.length() == 1);
    }
    auto ctx = Graph::from_lists({"x", "y", "z", "p", "q"},
                                 {make_edge("x", "y"), make_edge("y", "z"), make_edge("x", "z"), make_edge("x", "p"),
                                  make_edge("x", "q")});
    auto triangle = Graph::from_lists({"x", "y", "z"}, {make_edge("x", "y"), make_edge("y", "z"), make_edge("x", "z")});
    auto closed = segment_decomposition(triangle, ctx);
    REQUIRE(closed.size() == 1);
    CHECK(closed[0].kind == SegmentKind::closed);
    CHECK(closed[0].from == "x");
    CHECK(closed[0].to == "x");
    CHECK(closed[0].length() == 3);
  }

  TEST_CASE("segment preconditions") {
    CHECK_THROWS_AS(segment_decomposition(complete_graph(3), complete_graph(3)), GraphError);
    CHECK_THROWS_AS(segment_decomposition(Graph::from_lists({"a", "b"}, {}), complete_graph(2, "")), GraphError);
  }

  TEST_CASE("classify maximum-degree-2 shapes") {
    CHECK(classify_max_degree2(cycle_graph(5)) == Shape::cycle);
    CHECK(classify_max_degree2(path_graph(4)) == Shape::path);
    CHECK(classify_max_degree2(Graph::from_lists({"x"}, {})) == Shape::isolated_vertex);
    CHECK(classify_max_degree2(star_graph(3)) == Shape::has_degree3_vertex);
    CHECK(to_string(Shape::path) == "Path");
    CHECK(to_string(Shape::cycle) == "Cycle");
    CHECK(to_string(Shape::isolated_vertex) == "IsolatedVertex");
    CHECK(to_string(Shape::has_degree3_vertex) == "HasDegree3Vertex");
  }

  TEST_CASE("property predicate") {
    PropertyPredicate k3{"K3", complete_graph(3)};
    CHECK(k3.holds(cycle_graph(5)));
    CHECK_FALSE(k3.holds(star_graph(4)));
  }

  TEST_CASE("minimal subtree") {
    auto t = block_cut_tree(path_graph(5));  // four trivial blocks in a path
    REQUIRE(t.blocks.size() == 4);
    auto one = minimal_subtree(t, {2});
    CHECK(one.blocks.size() == 1);
    CHECK(one.cutvertices.empty());
    auto ends = minimal_subtree(t, {0, 3});
    CHECK(ends.blocks.size() == 4);
    CHECK(ends.cutvertices.size() == 3);
    auto all = minimal_subtree(t, {0, 1, 2, 3});
    CHECK(all.blocks.size() == t.blocks.size());
    CHECK_THROWS_AS(minimal_subtree(t, {}), GraphError);
    CHECK_THROWS_AS(minimal_subtree(t, {9}), GraphError);
  }

  TEST_CASE("leaf block choice") {
    auto single = block_cut_tree(complete_graph(3));
    CHECK(choose_leaf_block(single).vertices == single.blocks[0].vertices);

    auto path = block_cut_tree(path_graph(4));
    auto leaf = choose_leaf_block(path);
    CHECK(leaf.vertices == std::vector<VertexLabel>{"1", "2"});

    // star of blocks: three triangles on a common center
    auto star = samples::triangle_star();
    auto tree = block_cut_tree(star);
    auto chosen = choose_leaf_block(tree);
    CHECK(tree.degree_of_block(chosen.id) == 1);
    std::vector<VertexLabel> smallest = tree.blocks.front().vertices;
    for (const auto& b : tree.blocks) smallest = std::min(smallest, b.vertices);
    CHECK(chosen.vertices == smallest);
  }
}
