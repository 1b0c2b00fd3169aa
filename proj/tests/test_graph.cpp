#include <doctest.h>

#include "degseq/errors.hpp"
#include "degseq/graph.hpp"

using namespace degseq;

TEST_CASE("edges and degrees") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.degree_sequence() == DegreeSequence{2, 1, 1, 0});
    CHECK_THROWS_AS(g.add_edge(0, 0), ArgumentError);
    CHECK_THROWS_AS(g.add_edge(0, 1), ArgumentError);
    CHECK_THROWS_AS(g.add_edge(0, 4), ArgumentError);
    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("named graphs") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(cycle_graph(5).degree_sequence() == DegreeSequence{2, 2, 2, 2, 2});
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(star_graph(3).degree(0) == 3);
    const auto p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.degree_sequence() == DegreeSequence(std::vector<int>(10, 3)));
}

TEST_CASE("complement, induced, relabel, components") {
    const auto c5 = cycle_graph(5);
    CHECK(c5.complement().degree_sequence() == DegreeSequence{2, 2, 2, 2, 2});
    const std::vector<Vertex> keep{0, 1, 2};
    CHECK(c5.induced(keep) == path_graph(3));
    const std::vector<Vertex> perm{1, 2, 3, 4, 0};
    CHECK(c5.relabeled(perm).edge_count() == 5);
    const std::vector<SimpleGraph> parts{complete_graph(2), complete_graph(3)};
    CHECK(disjoint_union(parts).components().size() == 2);
}

TEST_CASE("join examples") {
    {
        const std::vector<SimpleGraph> parts{SimpleGraph(1), SimpleGraph(1)};
        CHECK(join_graphs(parts).graph == complete_graph(2));
    }
    {
        const std::vector<SimpleGraph> parts{cycle_graph(5), cycle_graph(5)};
        const auto j = join_graphs(parts);
        CHECK(j.graph.degree_sequence() == DegreeSequence(std::vector<int>(10, 7)));
        CHECK(j.offsets == std::vector<int>{0, 5});
    }
    {
        const std::vector<SimpleGraph> parts{complete_graph(2)};
        CHECK(join_graphs(parts).graph == complete_graph(2));
    }
    CHECK_THROWS(join_graphs(std::span<const SimpleGraph>{}));
}
