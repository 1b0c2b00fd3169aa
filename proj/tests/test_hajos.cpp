#include <doctest.h>

#include <numeric>

#include "degseq/errors.hpp"
#include "degseq/hajos.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realizers.hpp"

using namespace degseq;

namespace {

SimpleGraph join2(const SimpleGraph& a, const SimpleGraph& b) {
    const std::vector<SimpleGraph> parts{a, b};
    return join_graphs(parts).graph;
}

SequenceStats stats_of(int chi, int omega, int delta) {
    SequenceStats s;
    s.chi = Sourced<int>{chi, StatSource::OracleEnumeration};
    s.omega = Sourced<int>{omega, StatSource::RaoExact};
    s.delta_max = delta;
    return s;
}

} // namespace

TEST_CASE("plan examples") {
    const auto c5 = plan_construction({2, 2, 2, 2, 2});
    CHECK(c5.m == 2);
    CHECK(c5.alpha == 0);
    CHECK(c5.beta == 0);
    CHECK(c5.r == 1);
    CHECK(c5.t == std::vector<int>{1, 1});
    CHECK(c5.which == ConstructionCase::CaseOne);

    const auto k = plan_construction(DegreeSequence(std::vector<int>(7, 4)));
    CHECK(k.m == 3);
    CHECK(k.alpha == 0);
    CHECK(k.beta == 0);
    CHECK(k.r == 1);
    CHECK(k.t == std::vector<int>{1, 1});
    CHECK(k.which == ConstructionCase::CaseOne);

    CHECK_THROWS_AS(plan_construction({2, 2, 2, 2}), DomainError);
}

TEST_CASE("C5 construction matches the hand trace") {
    const auto r = build_basic_witness({2, 2, 2, 2, 2});
    const auto& g = r.realization.graph;
    CHECK(g.degree_sequence() == DegreeSequence{2, 2, 2, 2, 2});
    CHECK(g.has_edge(3, 4) == false);  // T1 edge v4v5 is removed again
    const auto& w = r.realization.witness;
    CHECK(w.order == 3);
    CHECK(w.branch_vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(verify_witness(g, w).ok());
    // direct v1v2, and v3 reaches v1 and v2 through v4 and v5
    int subdivided = 0;
    for (const auto& p : w.paths) {
        if (!p.mid) {
            CHECK(std::pair(p.u, p.v) == std::pair(0, 1));
            continue;
        }
        ++subdivided;
        CHECK((p.u == 2 || p.v == 2));
        CHECK((*p.mid == 3 || *p.mid == 4));
    }
    CHECK(subdivided == 2);
    CHECK(g.components().size() == 1);
}

TEST_CASE("4-regular on 7 vertices") {
    const auto r = build_basic_witness(DegreeSequence(std::vector<int>(7, 4)));
    CHECK(r.realization.graph.degree_sequence() == DegreeSequence(std::vector<int>(7, 4)));
    CHECK(r.realization.witness.order == 4);
    CHECK(verify_witness(r.realization.graph, r.realization.witness).ok());
}

TEST_CASE("wrong profile is rejected") {
    CHECK_THROWS_AS(build_basic_witness({3, 3, 2, 2, 2}), DomainError);
    CHECK_THROWS_AS(build_basic_witness({3, 3, 1, 1}), DomainError);
}

TEST_CASE("construction properties for every nontrivial profile with n <= 13") {
    int cases[2] = {0, 0};
    for (int n = 3; n <= 13; n += 2)
        for_each_graphic_sequence(n, (n - 1) / 2, [&](const DegreeSequence& d) {
            if (classify_basic_profile(d).verdict != ProfileVerdict::NontrivialBasicProfile) return;
            const auto r = build_basic_witness(d);
            const auto& p = r.plan;
            const auto& g = r.realization.graph;
            const auto& w = r.realization.witness;
            const int m = p.m;
            ++cases[p.which == ConstructionCase::CaseOne ? 0 : 1];
            for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == d[v]);
            CHECK(w.order == m + 1);
            CHECK(verify_witness(g, w).ok());
            for (const auto& path : w.paths)
                if (path.mid) CHECK_MESSAGE((path.u == m || path.v == m), d.to_string());
            for (Vertex v = m + 1; v <= 2 * m; ++v) CHECK_MESSAGE(g.has_edge(m, v), d.to_string());
            if (p.which == ConstructionCase::CaseOne) {
                const std::int64_t expect = p.alpha + std::int64_t{m} * (d[m] - m + 1);
                CHECK(std::accumulate(p.a_targets.begin(), p.a_targets.end(), std::int64_t{0}) == expect);
                CHECK(std::accumulate(p.b_targets.begin(), p.b_targets.end(), std::int64_t{0}) == expect);
            }
        });
    MESSAGE("CaseOne instances: " << cases[0] << ", CaseTwo instances: " << cases[1]);
    CHECK(cases[0] > 0);
    CHECK(cases[1] > 0);
}

TEST_CASE("join_witness_realizations examples") {
    const auto c5 = build_basic_witness({2, 2, 2, 2, 2}).realization;
    const std::vector<WitnessedGraph> two{c5, c5};
    const auto j = join_witness_realizations(two);
    CHECK(j.graph.order() == 10);
    CHECK(j.witness.order == 6);
    CHECK(verify_witness(j.graph, j.witness).ok());

    const WitnessedGraph k1{SimpleGraph(1), clique_witness({0})};
    const std::vector<WitnessedGraph> one{k1};
    const auto id = join_witness_realizations(one);
    CHECK(id.graph == SimpleGraph(1));
    CHECK(id.witness.order == 1);
    const std::vector<WitnessedGraph> pair{k1, k1};
    const auto k2 = join_witness_realizations(pair);
    CHECK(k2.graph == complete_graph(2));
    CHECK(k2.witness.order == 2);

    auto broken = c5;
    broken.witness.order = 4;
    const std::vector<WitnessedGraph> bad{broken};
    CHECK_THROWS_AS(join_witness_realizations(bad), ArgumentError);
}

TEST_CASE("pipeline examples") {
    const auto c5 = witness_pipeline(cycle_graph(5));
    CHECK(c5.realization.graph.degree_sequence() == DegreeSequence{2, 2, 2, 2, 2});
    CHECK(c5.realization.witness.order == 3);
    const auto k4 = witness_pipeline(complete_graph(4));
    CHECK(k4.realization.graph == complete_graph(4));
    CHECK(k4.realization.witness.order == 4);
    const auto mixed = witness_pipeline(join2(cycle_graph(5), complete_graph(4)));
    CHECK(mixed.realization.graph.order() == 9);
    CHECK(mixed.chi == 7);
    CHECK(mixed.realization.witness.order >= 7);
    CHECK(verify_witness(mixed.realization.graph, mixed.realization.witness).ok());
}

TEST_CASE("check_bounds examples") {
    {
        const auto r = check_bounds(stats_of(3, 2, 2));
        CHECK(r.get(BoundKind::Sf).tight);
        CHECK(r.get(BoundKind::Reed).tight);
        CHECK(r.get(BoundKind::Sf).slack == Rational::of(0, 1));
        CHECK_FALSE(r.get(BoundKind::Hajos).evaluated);
        CHECK(r.all_hold());
    }
    {
        const auto r = check_bounds(stats_of(6, 5, 7));
        CHECK(r.get(BoundKind::Sf).holds);
        CHECK(r.get(BoundKind::Sf).slack == Rational::of(3, 5));
        CHECK(r.get(BoundKind::Reed).slack == Rational::of(2, 5));
        CHECK(r.get(BoundKind::Sf).slack.to_double() == doctest::Approx(0.6));
        CHECK(r.get(BoundKind::Reed).slack.to_double() == doctest::Approx(0.4));
    }
    CHECK(check_bounds(stats_of(1, 1, 0)).all_hold());
    {
        SequenceStats s = stats_of(3, 2, 2);
        s.h1 = Sourced<int>{2, StatSource::OracleEnumeration};
        const auto r = check_bounds(s);
        CHECK_FALSE(r.get(BoundKind::Hajos).holds);
        CHECK(r.get(BoundKind::Hajos).slack == Rational::of(-1, 1));
    }
    {
        SequenceStats s;
        s.delta_max = 3;
        const auto r = check_bounds(s);
        for (const auto& v : r.verdicts) CHECK_FALSE(v.evaluated);
    }
    CHECK(Rational::of(6, -4).to_string() == "-3/2");
}
