#include "brute.hpp"

#include "vstab/constructions.hpp"
#include "vstab/invariants.hpp"
#include "vstab/naive.hpp"
#include "vstab/random.hpp"
#include "vstab/sat.hpp"

#include <doctest.h>

using namespace vstab;

namespace {

// Mycielski construction: chi grows by one, omega stays put.
Graph mycielski(const Graph& g)
{
    const int n = g.order();
    GraphBuilder b(2 * n + 1);
    for (const auto& e : g.edges()) {
        b.add_edge(e.u, e.v);
        b.add_edge(e.u, n + e.v);
        b.add_edge(n + e.u, e.v);
    }
    for (int v = 0; v < n; ++v)
        b.add_edge(n + v, 2 * n);
    return std::move(b).build();
}

} // namespace

TEST_CASE("k-colorability examples")
{
    CHECK_FALSE(is_k_colorable(complete_graph(4), 3).has_value());
    const auto c5 = is_k_colorable(cycle_graph(5), 3);
    REQUIRE(c5.has_value());
    CHECK(is_proper(cycle_graph(5), *c5));
    CHECK_FALSE(is_k_colorable(cycle_graph(5), 2).has_value());

    const Graph p = construct_prop31(4).graph;
    const auto four = is_k_colorable(p, 4);
    REQUIRE(four.has_value());
    CHECK(is_proper(p, *four));
    CHECK_FALSE(is_k_colorable(p, 3).has_value());

    CHECK(is_k_colorable(empty_graph(0), 0).has_value());
    CHECK_FALSE(is_k_colorable(empty_graph(1), 0).has_value());
}

TEST_CASE("chromatic number examples")
{
    for (int n = 0; n <= 7; ++n)
        CHECK(chromatic_number(complete_graph(n)).chi == n);
    CHECK(chromatic_number(empty_graph(4)).chi == 1);
    CHECK(chromatic_number(blow_up_cycle5(2)).chi == 5);
    CHECK(chromatic_number(blow_up_cycle5(3)).chi == 8);
    CHECK(chromatic_number(augmented_independence_graph(gen_unsat_family(2)).graph).chi == 4);
}

TEST_CASE("clique number examples")
{
    CHECK(clique_number(cycle_graph(5)).omega == 2);
    CHECK(clique_number(construct_prop31(6).graph).omega == 6);
    const auto b3 = clique_number(blow_up_cycle5(3));
    CHECK(b3.omega == 6);
    CHECK(is_clique(blow_up_cycle5(3), b3.witness));
    CHECK(b3.witness.count() == 6);
    CHECK(clique_number(empty_graph(0)).omega == 0);
}

TEST_CASE("maximum clique enumeration")
{
    const auto k4 = enumerate_maximum_cliques(complete_graph(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].members() == std::vector<int>{0, 1, 2, 3});

    const auto c5 = enumerate_maximum_cliques(cycle_graph(5));
    REQUIRE(c5.size() == 5);
    CHECK(c5[0].members() == std::vector<int>{0, 1});
    CHECK(c5[1].members() == std::vector<int>{0, 4});
    CHECK(c5[4].members() == std::vector<int>{3, 4});

    const auto b2 = enumerate_maximum_cliques(blow_up_cycle5(2));
    CHECK(b2.size() == 5);
    for (const auto& q : b2)
        CHECK(q.count() == 4);
}

TEST_CASE("maximum clique enumeration matches subset scan")
{
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_small_graph(1, 10, rng);
        const int w = brute::omega(g);
        std::vector<VertexSet> expect;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.order()); ++mask)
            if (std::popcount(mask) == w && brute::clique_mask(g, mask))
                expect.push_back(mask_to_set(g.order(), mask));
        std::sort(expect.begin(), expect.end(),
                  [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
        CHECK(enumerate_maximum_cliques(g) == expect);
    }
}

TEST_CASE("chromatic number agrees with exhaustive assignment on 500 graphs")
{
    Rng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = random_small_graph(0, 8, rng);
        const auto r = chromatic_number(g);
        CHECK(r.chi == brute::chi(g));
        if (g.order() > 0) {
            CHECK(is_proper(g, r.coloring));
            CHECK(r.coloring.colors_used() == r.chi);
        }
    }
}

TEST_CASE("clique number agrees with subset scan up to 14 vertices")
{
    Rng rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_small_graph(8, 14, rng);
        const auto r = clique_number(g);
        CHECK(r.omega == brute::omega(g));
        CHECK(is_clique(g, r.witness));
        CHECK(r.witness.count() == r.omega);
    }
}

TEST_CASE("omega <= chi <= delta + 1 and one deletion drops chi by at most one")
{
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_small_graph(1, 11, rng);
        const int chi = chromatic_number(g).chi;
        CHECK(clique_number(g).omega <= chi);
        CHECK(chi <= g.max_degree() + 1);
        for (int v = 0; v < g.order(); ++v) {
            const int after = chromatic_number(delete_vertices(g, VertexSet(g.order(), {v})).graph).chi;
            CHECK((after == chi || after == chi - 1));
        }
    }
}

TEST_CASE("k-colorability witnesses are proper")
{
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_small_graph(1, 16, rng);
        for (int k = 1; k <= 6; ++k)
            if (const auto c = is_k_colorable(g, k)) {
                CHECK(is_proper(g, *c));
                CHECK(c->k == k);
            }
    }
}

TEST_CASE("k-colorability is deterministic")
{
    const Graph g = construct_constr1(5).graph;
    const auto a = is_k_colorable(g, 4);
    const auto b = is_k_colorable(g, 4);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->colors == b->colors);
}

TEST_CASE("greedy bounds never beat the exact value")
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_small_graph(1, 14, rng);
        const Coloring d = greedy_dsatur(g);
        CHECK(is_proper(g, d));
        const Coloring it = iterated_greedy(g, d, 20, 0);
        CHECK(is_proper(g, it));
        CHECK(it.colors_used() <= d.colors_used());
        CHECK(it.colors_used() >= chromatic_number(g).chi);
    }
}

TEST_CASE("budget exhaustion is distinct from a negative answer")
{
    const Graph grotzsch = mycielski(cycle_graph(5));
    CHECK(grotzsch.order() == 11);
    CHECK(chromatic_number(grotzsch).chi == 4);
    CHECK(clique_number(grotzsch).omega == 2);
    Budget tiny(3);
    CHECK_THROWS_AS(chromatic_number(grotzsch, tiny), BudgetExceeded);
    Budget tiny2(3);
    CHECK_THROWS_AS(is_k_colorable(grotzsch, 3, tiny2), BudgetExceeded);
    Budget enough(1'000'000);
    CHECK_FALSE(is_k_colorable(grotzsch, 3, enough).has_value());

    const Graph m5 = mycielski(grotzsch);
    CHECK(chromatic_number(m5).chi == 5);
}

TEST_CASE("summary carries consistent witnesses")
{
    Budget budget;
    const auto s = summarize(construct_prop31(4).graph, budget);
    CHECK(s.n == 12);
    CHECK(s.m == 24);
    CHECK(s.delta == 5);
    CHECK(s.chi == 4);
    CHECK(s.omega == 4);
    CHECK(is_proper(construct_prop31(4).graph, s.witness_coloring));
    CHECK(s.witness_clique.count() == 4);
}
