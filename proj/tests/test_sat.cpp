#include "vstab/dimacs.hpp"
#include "vstab/invariants.hpp"
#include "vstab/random.hpp"
#include "vstab/sat.hpp"

#include "threads.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace vstab;

namespace {

Literal pos(int v) { return {v, true}; }
Literal neg(int v) { return {v, false}; }

CnfInstance instance(int vars, std::vector<std::vector<Literal>> clauses)
{
    CnfInstance inst;
    inst.variable_count = vars;
    for (auto& c : clauses)
        inst.clauses.emplace_back(std::move(c));
    return inst;
}

std::vector<Literal> copies(Literal l, int n)
{
    return std::vector<Literal>(static_cast<std::size_t>(n), l);
}

std::vector<Literal> concat(std::vector<std::vector<Literal>> parts)
{
    std::vector<Literal> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

// Independent set of the requested size, found as a clique of the complement.
bool has_independent_set(const Graph& g, int size)
{
    return clique_number(complement(g)).omega >= size;
}

} // namespace

TEST_CASE("clauses keep a canonical literal order")
{
    const Clause c({neg(1), pos(0), pos(1), neg(0), pos(1)});
    const std::vector<Literal> want{pos(0), neg(0), pos(1), pos(1), neg(1)};
    CHECK(c.literals == want);
    CHECK(pos(3).complement().complement() == pos(3));
    CHECK_THROWS_AS(Clause(std::vector<Literal>{}), std::invalid_argument);
}

TEST_CASE("p-LIT q-SAT validation")
{
    // (b|b|a)&(~b|~b|a)&(c|c|~a)&(~c|~c|~a), variables a=0, b=1, c=2.
    const auto fig = instance(3, {{pos(1), pos(1), pos(0)},
                                  {neg(1), neg(1), pos(0)},
                                  {pos(2), pos(2), neg(0)},
                                  {neg(2), neg(2), neg(0)}});
    CHECK(validate_plit_qsat(fig, 2, 3).ok);
    const auto tight = validate_plit_qsat(fig, 1, 3);
    CHECK_FALSE(tight.ok);
    CHECK_FALSE(tight.violation.empty());
    CHECK_FALSE(validate_plit_qsat(fig, 2, 4).ok);
    CHECK(validate_plit_qsat(gen_unsat_family(4), 4, 7).ok);
}

TEST_CASE("unsatisfiable family at m = 2 is the four-clause instance")
{
    const auto inst = gen_unsat_family(2);
    CHECK(inst.variable_count == 3);
    CHECK(inst.clauses.size() == 4);
    CHECK(to_formula(inst) == "(a|b|b)&(a|~b|~b)&(~a|c|c)&(~a|~c|~c)");
    REQUIRE(inst.meta.has_value());
    CHECK(inst.meta->m == 2);
    CHECK(inst.meta->r == 1);
    CHECK(inst.meta->split_rule == "round_robin_sorted");
}

TEST_CASE("unsatisfiable family at m = 4 reproduces the printed levels")
{
    const auto levels = gen_unsat_levels(4);
    REQUIRE(levels.size() == 3);
    const int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6;

    const auto i0 = instance(1, {copies(pos(a), 4), copies(neg(a), 4)});
    CHECK(levels[0].clauses == i0.clauses);

    const auto i1 = instance(3, {concat({copies(pos(b), 4), copies(pos(a), 2)}),
                                 concat({copies(neg(b), 4), copies(pos(a), 2)}),
                                 concat({copies(pos(c), 4), copies(neg(a), 2)}),
                                 concat({copies(neg(c), 4), copies(neg(a), 2)})});
    CHECK(levels[1].clauses == i1.clauses);

    const auto i2 = instance(7, {concat({copies(pos(d), 4), copies(pos(b), 2), {pos(a)}}),
                                 concat({copies(neg(d), 4), copies(pos(b), 2), {pos(a)}}),
                                 concat({copies(pos(e), 4), copies(neg(b), 2), {pos(a)}}),
                                 concat({copies(neg(e), 4), copies(neg(b), 2), {pos(a)}}),
                                 concat({copies(pos(f), 4), copies(pos(c), 2), {neg(a)}}),
                                 concat({copies(neg(f), 4), copies(pos(c), 2), {neg(a)}}),
                                 concat({copies(pos(g), 4), copies(neg(c), 2), {neg(a)}}),
                                 concat({copies(neg(g), 4), copies(neg(c), 2), {neg(a)}})});
    CHECK(levels[2].clauses == i2.clauses);
    CHECK(levels[2].variable_count == 7);
}

TEST_CASE("unsatisfiable family shape at m = 3")
{
    const auto inst = gen_unsat_family(3);
    CHECK(inst.meta->r == 2);
    CHECK(inst.clauses.size() == 8);
    CHECK(inst.variable_count == 7);
    for (const auto& c : inst.clauses)
        CHECK(c.size() == 5);
    CHECK_FALSE(is_satisfiable(inst).has_value());
    CHECK_THROWS_AS(gen_unsat_family(1), std::invalid_argument);
}

TEST_CASE("every level is m-LIT and unsatisfiable")
{
    for (int m = 2; m <= 8; ++m) {
        const auto levels = gen_unsat_levels(m);
        const int r = static_cast<int>(levels.size()) - 1;
        CHECK((1 << (r - 1)) < m);
        CHECK(m <= (1 << r));
        for (int i = 0; i <= r; ++i) {
            INFO("m = " << m << ", level " << i);
            CHECK(validate_plit_qsat(levels[i], m, 2 * m - (1 << (r - i))).ok);
            CHECK_FALSE(is_satisfiable(levels[i]).has_value());
        }
        const auto& top = levels.back();
        CHECK(top.clauses.size() == (std::size_t{2} << r));
        CHECK(top.variable_count == (2 << r) - 1);
    }
}

TEST_CASE("brute-force satisfiability")
{
    const auto single = instance(1, {{pos(0), pos(0)}});
    const auto s = is_satisfiable(single);
    REQUIRE(s.has_value());
    CHECK((*s)[0]);
    CHECK_FALSE(is_satisfiable(gen_unsat_family(2)).has_value());

    // Lexicographically least: variable 0 false first.
    const auto either = instance(2, {{pos(0), pos(1)}});
    const auto least = is_satisfiable(either, Execution::serial);
    REQUIRE(least.has_value());
    CHECK(*least == Assignment{false, true});

    CnfInstance big;
    big.variable_count = 25;
    big.clauses.emplace_back(std::vector<Literal>{pos(24)});
    CHECK_THROWS_AS(is_satisfiable(big), std::invalid_argument);
}

TEST_CASE("serial and parallel scans return the same least assignment")
{
    const ThreadCount threads(4);
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 16);
        const auto inst = random_cnf(vars, 1 + static_cast<int>(rng() % 40), 3, rng);
        CHECK(is_satisfiable(inst, Execution::serial) == is_satisfiable(inst, Execution::parallel));
    }
}

TEST_CASE("Hall satisfier on small instances")
{
    const auto clash = instance(1, {{pos(0), pos(0)}, {neg(0), neg(0)}});
    CHECK_THROWS_AS(hall_satisfier(clash, 1), std::invalid_argument);

    const auto two = instance(2, {{pos(0), pos(1)}, {neg(0), neg(1)}});
    const auto a = hall_satisfier(two, 1);
    CHECK(satisfies(two, a));
}

TEST_CASE("Hall satisfier never fails on m-LIT 2m-SAT")
{
    Rng rng(1234);
    for (int m = 1; m <= 3; ++m)
        for (int trial = 0; trial < 200; ++trial) {
            const auto inst = random_plit_instance(m, 10, rng);
            REQUIRE(validate_plit_qsat(inst, m, 2 * m).ok);
            const auto a = hall_satisfier(inst, m);
            CHECK(satisfies(inst, a));
            CHECK(is_satisfiable(inst).has_value());
        }
}

TEST_CASE("independence graphs")
{
    const auto tri = independence_graph(instance(3, {{pos(0), pos(1), neg(2)}}));
    CHECK(tri.graph == complete_graph(3));

    const auto i0 = independence_graph(instance(1, {{pos(0), pos(0)}, {neg(0), neg(0)}}));
    CHECK(i0.graph == complete_graph(4));
    CHECK(i0.clause_start == std::vector<int>{0, 2, 4});

    const auto g2 = independence_graph(gen_unsat_family(2));
    CHECK(g2.graph.order() == 12);
    CHECK(chromatic_number(g2.graph).chi == 4);
    CHECK(validate_clique_partition(g2.graph, g2.parts).empty());
}

TEST_CASE("augmented independence graphs")
{
    for (int m = 2; m <= 3; ++m) {
        const auto inst = gen_unsat_family(m);
        const auto aug = augmented_independence_graph(inst);
        const int nc = static_cast<int>(inst.clauses.size());
        const int lits = nc * (2 * m - 1);
        CHECK(aug.graph.order() == nc * (2 * m + 1));
        CHECK(aug.graph.max_degree() == 3 * m);
        CHECK(validate_clique_partition(aug.graph, aug.parts).empty());
        CHECK(aug.parts.parts.size() == static_cast<std::size_t>(nc + 2 * nc));

        bool reached = false;
        for (int v = 0; v < lits; ++v) {
            CHECK(aug.graph.degree(v) <= 3 * m);
            reached = reached || aug.graph.degree(v) == 3 * m;
        }
        CHECK(reached);
        for (int v = lits; v < aug.graph.order(); ++v)
            CHECK(aug.graph.degree(v) == 2 * m - 1);

        for (int c = 0; c < nc; ++c) {
            VertexSet block(aug.graph.order());
            for (int v = aug.clause_start[c]; v < aug.clause_start[c + 1]; ++v)
                block.set(v);
            for (int extra : {lits + 2 * c, lits + 2 * c + 1}) {
                VertexSet q = block;
                q.set(extra);
                CHECK(q.count() == 2 * m);
                CHECK(is_clique(aug.graph, q));
            }
            CHECK_FALSE(aug.graph.adjacent(lits + 2 * c, lits + 2 * c + 1));
        }
    }
    const auto g2 = augmented_independence_graph(gen_unsat_family(2)).graph;
    CHECK(g2.order() == 20);
    CHECK(g2.max_degree() == 6);
    CHECK(chromatic_number(g2).chi == 4);
    CHECK(clique_number(g2).omega == 4);
    CHECK(augmented_independence_graph(gen_unsat_family(3)).graph.order() == 56);
}

TEST_CASE("satisfiable exactly when a clause transversal is independent")
{
    Rng rng(77);
    std::vector<CnfInstance> corpus;
    for (int trial = 0; trial < 150; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 12);
        const int clauses = 1 + static_cast<int>(rng() % 8);
        corpus.push_back(random_cnf(vars, clauses, 1 + static_cast<int>(rng() % 3), rng));
    }
    for (int m = 2; m <= 6; ++m)
        for (const auto& level : gen_unsat_levels(m))
            if (level.variable_count <= 12)
                corpus.push_back(level);
    for (const auto& inst : corpus) {
        const auto g = independence_graph(inst).graph;
        CHECK(is_satisfiable(inst).has_value() ==
              has_independent_set(g, static_cast<int>(inst.clauses.size())));
    }
}

TEST_CASE("removal set examples")
{
    const Graph k4 = complete_graph(4);
    const CliquePartition halves{{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}};
    const Coloring c{{1, 2, 3, 4}, 4};
    CHECK(removal_set(k4, halves, c).members() == std::vector<int>{1, 3});

    const CliquePartition whole{{VertexSet::full(5)}};
    CHECK(removal_set(complete_graph(5), whole, Coloring{{1, 2, 3, 4, 5}, 5}).members() ==
          std::vector<int>{4});

    const auto g2 = independence_graph(gen_unsat_family(2));
    const auto opt = chromatic_number(g2.graph);
    const VertexSet s = removal_set(g2.graph, g2.parts, opt.coloring);
    CHECK(s.count() == 4);
    CHECK(chromatic_number(delete_vertices(g2.graph, s).graph).chi == 3);

    CHECK_THROWS_AS(removal_set(k4, halves, Coloring{{1, 1, 2, 3}, 3}), std::invalid_argument);
}

TEST_CASE("removal sets take one vertex per part and drop the top color")
{
    Rng rng(88);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_small_graph(1, 14, rng);
        // Random clique partition: grow cliques from a shuffled vertex order.
        std::vector<int> order(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v)
            order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        VertexSet left = g.all_vertices();
        CliquePartition parts;
        for (int v : order) {
            if (!left.test(v))
                continue;
            VertexSet part(g.order(), {v});
            for (int u : order)
                if (left.test(u) && u != v && (g.neighbors(u) & part) == part)
                    part.set(u);
            left -= part;
            parts.parts.push_back(part);
        }
        REQUIRE(validate_clique_partition(g, parts).empty());

        const Coloring col = greedy_dsatur(g);
        const int k = col.colors_used();
        const VertexSet s = removal_set(g, parts, col);
        for (const auto& p : parts.parts)
            CHECK(p.intersection_count(s) == 1);
        int top = 0;
        for (int v = 0; v < g.order(); ++v)
            if (!s.test(v))
                top = std::max(top, col.colors[v]);
        CHECK(top <= k - 1);
    }
}

TEST_CASE("stability certificates")
{
    for (int m = 2; m <= 3; ++m) {
        const auto inst = gen_unsat_family(m);
        const auto cert = stability_certificates(inst, m);
        const auto check = validate_certificate(inst, cert);
        CHECK(check.ok);
        const int nc = static_cast<int>(inst.clauses.size());
        CHECK(check.vs_lower == nc);
        CHECK(check.vs_upper == nc);
        CHECK(check.ivs_omega_above == nc);
    }
}

TEST_CASE("corrupted certificates fail validation")
{
    const auto inst = gen_unsat_family(2);
    const auto good = stability_certificates(inst, 2);

    auto swapped = good;
    auto& q = swapped.disjoint_cliques[0];
    const int drop = q.first();
    int add = 0;
    while (q.test(add))
        ++add;
    q.reset(drop);
    q.set(add);
    CHECK_FALSE(validate_certificate(inst, swapped).ok);

    auto overlapping = good;
    overlapping.disjoint_cliques[1] = overlapping.disjoint_cliques[0];
    CHECK_FALSE(validate_certificate(inst, overlapping).ok);

    auto bad_removal = good;
    const int r = bad_removal.removal.first();
    bad_removal.removal.reset(r);
    CHECK_FALSE(validate_certificate(inst, bad_removal).ok);

    auto bad_coloring = good;
    for (auto& c : bad_coloring.reduced_coloring.colors)
        if (c > 0)
            c = 1;
    CHECK_FALSE(validate_certificate(inst, bad_coloring).ok);

    auto wrong_instance = good;
    wrong_instance.instance_unsatisfiable = false;
    CHECK_FALSE(validate_certificate(inst, wrong_instance).ok);
}

TEST_CASE("DIMACS CNF writer")
{
    const auto i0 = instance(1, {{pos(0), pos(0)}, {neg(0), neg(0)}});
    CHECK(write_dimacs_cnf(i0) == "p cnf 1 2\n1 1 0\n-1 -1 0\n");
    const std::string four = write_dimacs_cnf(gen_unsat_family(4));
    CHECK(four.rfind("p cnf 7 8\n", 0) == 0);
    CHECK(std::count(four.begin(), four.end(), '\n') == 9);
    CHECK(write_dimacs_cnf(gen_unsat_family(2)) ==
          "p cnf 3 4\n1 2 2 0\n1 -2 -2 0\n-1 3 3 0\n-1 -3 -3 0\n");
}

TEST_CASE("DIMACS CNF reader")
{
    const auto inst = read_dimacs_cnf("c comment\np cnf 2 2\n1 -2 0\n-1\n2 0\n");
    CHECK(inst.variable_count == 2);
    REQUIRE(inst.clauses.size() == 2);
    CHECK(inst.clauses[1].literals == std::vector<Literal>{neg(0), pos(1)});

    CHECK_THROWS_AS(read_dimacs_cnf("1 2 0\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_cnf("p cnf x 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_cnf("p cnf 2 1\n1 0 2 0\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_cnf("p cnf 2 1\n3 0\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_cnf("p cnf 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_cnf("p cnf 2 2\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_cnf("p cnf 2 1\n0\n"), ParseError);
}

TEST_CASE("DIMACS CNF round trip")
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = random_cnf(1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9),
                                     1 + static_cast<int>(rng() % 4), rng);
        const std::string text = write_dimacs_cnf(inst);
        const auto back = read_dimacs_cnf(text);
        CHECK(back.variable_count == inst.variable_count);
        CHECK(back.clauses == inst.clauses);
        CHECK(write_dimacs_cnf(back) == text);
    }
    for (int m = 2; m <= 5; ++m) {
        const std::string text = write_dimacs_cnf(gen_unsat_family(m));
        CHECK(write_dimacs_cnf(read_dimacs_cnf(text)) == text);
    }
}
