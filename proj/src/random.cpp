#include "vstab/random.hpp"

#include <algorithm>
#include <numeric>

namespace vstab {

Graph random_graph(int n, double p, Rng& rng)
{
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_small_graph(int min_n, int max_n, Rng& rng)
{
    const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
    return random_graph(n, p, rng);
}

CnfInstance random_plit_instance(int m, int max_variables, Rng& rng)
{
    const int vars = std::uniform_int_distribution<int>(1, max_variables)(rng);
    // Every literal has m slots, so at most vars clauses of 2m literals fit.
    const int clauses = std::uniform_int_distribution<int>(1, vars)(rng);
    std::vector<Literal> pool;
    for (int v = 0; v < vars; ++v)
        for (int c = 0; c < m; ++c) {
            pool.push_back({v, true});
            pool.push_back({v, false});
        }
    std::shuffle(pool.begin(), pool.end(), rng);
    CnfInstance inst;
    inst.variable_count = vars;
    for (int c = 0; c < clauses; ++c)
        inst.clauses.emplace_back(
            std::vector<Literal>(pool.begin() + c * 2 * m, pool.begin() + (c + 1) * 2 * m));
    return inst;
}

CnfInstance random_cnf(int variables, int clauses, int clause_size, Rng& rng)
{
    std::uniform_int_distribution<int> var(0, variables - 1);
    std::bernoulli_distribution sign(0.5);
    CnfInstance inst;
    inst.variable_count = variables;
    for (int c = 0; c < clauses; ++c) {
        std::vector<Literal> lits;
        for (int i = 0; i < clause_size; ++i)
            lits.push_back({var(rng), sign(rng)});
        inst.clauses.emplace_back(std::move(lits));
    }
    return inst;
}

PartitionedGraph random_haxell_instance(int r, int k, Rng& rng)
{
    std::uniform_int_distribution<int> extra(0, 2);
    std::vector<int> start{0};
    for (int i = 0; i < r; ++i)
        start.push_back(start.back() + 2 * k + extra(rng));
    const int n = start.back();
    std::vector<int> part_of(static_cast<std::size_t>(n));
    GraphBuilder b(n);
    for (int i = 0; i < r; ++i) {
        std::vector<int> q(static_cast<std::size_t>(start[i + 1] - start[i]));
        std::iota(q.begin(), q.end(), start[i]);
        b.add_clique(q);
        for (int v : q)
            part_of[v] = i;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<int> outside(static_cast<std::size_t>(n), 0);
    std::bernoulli_distribution take(0.7);
    for (const auto& [u, v] : pairs)
        if (outside[u] < k && outside[v] < k && take(rng)) {
            b.add_edge(u, v);
            ++outside[u];
            ++outside[v];
        }

    PartitionedGraph out;
    out.graph = std::move(b).build();
    for (int i = 0; i < r; ++i) {
        VertexSet p(n);
        for (int v = start[i]; v < start[i + 1]; ++v)
            p.set(v);
        out.parts.push_back(std::move(p));
    }
    return out;
}

} // namespace vstab
