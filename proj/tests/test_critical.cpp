#include "vstab/constructions.hpp"
#include "vstab/critical.hpp"
#include "vstab/invariants.hpp"
#include "vstab/random.hpp"
#include "vstab/stability.hpp"

#include "threads.hpp"

#include <doctest.h>

using namespace vstab;

namespace {

Graph k4_with_pendant()
{
    GraphBuilder b(5);
    const int q[] = {0, 1, 2, 3};
    b.add_clique(q);
    b.add_edge(3, 4);
    return std::move(b).build();
}

Graph disjoint_cliques(int count, int size)
{
    return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(count), complete_graph(size))).graph;
}

// Two K_5's joined by the matching edges 0-5 and 1-6.
Graph two_k5_with_matching()
{
    GraphBuilder b(10);
    const int p[] = {0, 1, 2, 3, 4};
    const int q[] = {5, 6, 7, 8, 9};
    b.add_clique(p);
    b.add_clique(q);
    b.add_edge(0, 5);
    b.add_edge(1, 6);
    return std::move(b).build();
}

std::vector<std::vector<int>> lists(const std::vector<VertexSet>& sets)
{
    std::vector<std::vector<int>> out;
    for (const auto& s : sets)
        out.push_back(s.members());
    return out;
}

void check_critical(const Graph& g, const VertexSet& h, int chi)
{
    Budget budget;
    CHECK(is_critical(g, h, chi, budget));
    const auto sub = induced_subgraph(g, h);
    CHECK(chromatic_number(sub.graph).chi == chi);
    for (int v = 0; v < sub.graph.order(); ++v)
        CHECK(chromatic_number(delete_vertices(sub.graph, VertexSet(sub.graph.order(), {v})).graph).chi ==
              chi - 1);
}

} // namespace

TEST_CASE("criticality predicate")
{
    Budget b;
    CHECK(is_critical(cycle_graph(5), VertexSet::full(5), 3, b));
    CHECK_FALSE(is_critical(k4_with_pendant(), VertexSet::full(5), 4, b));
    CHECK(is_critical(k4_with_pendant(), VertexSet(5, {0, 1, 2, 3}), 4, b));
    CHECK_FALSE(is_critical(cycle_graph(6), VertexSet::full(6), 2, b));
    CHECK(is_critical(cycle_graph(6), VertexSet(6, {0, 1}), 2, b));
}

TEST_CASE("critical subgraph extraction")
{
    CHECK(find_critical_subgraph(k4_with_pendant()).members() == std::vector<int>{0, 1, 2, 3});
    CHECK(find_critical_subgraph(cycle_graph(5)) == VertexSet::full(5));

    // Frozen from the smallest-index peel: the central clique goes first because a gadget
    // keeps chi = 4 without it.
    const Graph p = construct_prop31(4).graph;
    const VertexSet h = find_critical_subgraph(p);
    CHECK(h.members() == std::vector<int>{1, 2, 3, 8, 9, 10, 11});
    check_critical(p, h, 4);

    CHECK_THROWS_AS(find_critical_subgraph(empty_graph(3)), std::invalid_argument);
}

TEST_CASE("critical subgraph enumeration")
{
    CHECK(lists(enumerate_critical_subgraphs(disjoint_cliques(2, 3), 6)) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
    CHECK(lists(enumerate_critical_subgraphs(cycle_graph(5), 5)) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    CHECK(lists(enumerate_critical_subgraphs(construct_prop31(4).graph, 5)) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});

    CHECK_THROWS_AS(enumerate_critical_subgraphs(disjoint_cliques(6, 3), 13), std::invalid_argument);
    CHECK_NOTHROW(enumerate_critical_subgraphs(disjoint_cliques(6, 3), 12));
}

TEST_CASE("serial and parallel enumeration agree")
{
    const ThreadCount threads(4);
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_small_graph(3, 12, rng);
        if (chromatic_number(g).chi < 2)
            continue;
        CHECK(enumerate_critical_subgraphs(g, g.order(), Execution::serial) ==
              enumerate_critical_subgraphs(g, g.order(), Execution::parallel));
    }
}

TEST_CASE("union component reports")
{
    GraphBuilder b(8);
    const int p[] = {0, 1, 2, 3};
    const int q[] = {4, 5, 6, 7};
    b.add_clique(p);
    b.add_clique(q);
    b.add_edge(3, 4);
    const auto bridged = critical_union_report(std::move(b).build());
    CHECK(bridged.chi == 4);
    CHECK(lists(bridged.union_components) == std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5, 6, 7}});

    const auto r = critical_union_report(construct_prop31(4).graph);
    CHECK(r.delta == 5);
    CHECK(r.k_delta == 0);
    CHECK(r.bound == 6);
    CHECK(r.max_order == 6);
    CHECK(lists(r.critical_subgraphs) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(lists(r.union_components) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(r.bound_satisfied == std::vector<bool>{true});

    const auto k5 = critical_union_report(complete_graph(5));
    CHECK(lists(k5.union_components) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    // Critical subgraphs larger than delta + 1 need an explicit order cap.
    CHECK(critical_union_report(cycle_graph(5)).union_components.empty());
    const auto c5 = critical_union_report(cycle_graph(5), 5);
    CHECK(lists(c5.union_components) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("union components partition the union of critical subgraphs")
{
    Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_small_graph(3, 11, rng);
        if (chromatic_number(g).chi < 2)
            continue;
        const auto r = critical_union_report(g);
        VertexSet all(g.order());
        for (const auto& h : r.critical_subgraphs)
            all |= h;
        VertexSet covered(g.order());
        for (const auto& c : r.union_components) {
            CHECK_FALSE(c.intersects(covered));
            covered |= c;
        }
        CHECK(covered == all);
        for (const auto& h : r.critical_subgraphs) {
            int homes = 0;
            for (const auto& c : r.union_components)
                homes += h.is_subset_of(c) ? 1 : 0;
            CHECK(homes == 1);
        }
        CHECK(r.bound_satisfied.size() == r.union_components.size());
    }
}

TEST_CASE("independent transversals")
{
    const Graph two = disjoint_cliques(2, 2);
    const auto t = independent_transversal(two, {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})});
    REQUIRE(t.has_value());
    CHECK(t->members() == std::vector<int>{0, 2});

    // a1 = 0, a2 = 1, b1 = 2, b2 = 3 with edges a1b1 and a2b2.
    GraphBuilder b(4);
    b.add_edge(0, 2);
    b.add_edge(1, 3);
    const Graph crossed = std::move(b).build();
    const auto u = independent_transversal(crossed, {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})});
    REQUIRE(u.has_value());
    CHECK(u->members() == std::vector<int>{0, 3});

    const Graph k4 = complete_graph(4);
    CHECK_FALSE(independent_transversal(k4, {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}).has_value());
    CHECK_THROWS_AS(independent_transversal(k4, {VertexSet(4, {0, 1}), VertexSet(4, {1, 2})}),
                    std::invalid_argument);
    CHECK(independent_transversal(k4, {})->empty());
}

TEST_CASE("independent transversals exist in the Haxell regime")
{
    Rng rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % 2);
        const auto inst = random_haxell_instance(r, k, rng);
        const auto t = independent_transversal(inst.graph, inst.parts);
        REQUIRE(t.has_value());
        CHECK(is_independent(inst.graph, *t));
        for (const auto& p : inst.parts)
            CHECK(p.intersection_count(*t) == 1);
    }
}

TEST_CASE("pipeline on disjoint cliques")
{
    const Graph g = disjoint_cliques(3, 4);
    const auto res = vs_ivs_pipeline(g);
    REQUIRE(res.certificate.has_value());
    const auto& c = *res.certificate;
    CHECK(c.r == 3);
    CHECK(c.chi_before == 4);
    CHECK(c.chi_after == 3);
    CHECK(c.transversal.count() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(c.transversal.intersection_count(c.components[i]) == 1);
}

TEST_CASE("pipeline on the twelve-vertex gadget graph fails at verification")
{
    const auto res = vs_ivs_pipeline(construct_prop31(4).graph);
    CHECK_FALSE(res.certificate.has_value());
    REQUIRE_FALSE(res.trace.empty());
    CHECK(res.trace.back().step == "verify");
    CHECK_FALSE(res.trace.back().ok);
    for (std::size_t i = 0; i + 1 < res.trace.size(); ++i)
        CHECK(res.trace[i].ok);
}

TEST_CASE("pipeline on two K5 joined by a sparse matching")
{
    const Graph g = two_k5_with_matching();
    const auto res = vs_ivs_pipeline(g);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->r == 2);
    const auto s = stability(g, Parameter::chi);
    CHECK(s.value == 2);
    CHECK(s.independent_value == 2);
}

TEST_CASE("extracted and enumerated subgraphs are critical")
{
    Rng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_small_graph(3, 10, rng);
        const int chi = chromatic_number(g).chi;
        if (chi < 2)
            continue;
        const VertexSet h = find_critical_subgraph(g);
        check_critical(g, h, chi);
        const auto all = enumerate_critical_subgraphs(g, g.order());
        bool contained = false;
        for (const auto& e : all) {
            check_critical(g, e, chi);
            contained = contained || h.is_subset_of(e);
        }
        CHECK(contained);
    }
}

TEST_CASE("pipeline certificates agree with the stability search")
{
    Rng rng(25);
    int certified = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_small_graph(3, 10, rng);
        if (chromatic_number(g).chi < 2)
            continue;
        const auto res = vs_ivs_pipeline(g);
        if (!res.certificate)
            continue;
        ++certified;
        const auto s = stability(g, Parameter::chi);
        CHECK(s.value == res.certificate->r);
        CHECK(s.independent_value == res.certificate->r);
    }
    CHECK(certified > 0);
}
