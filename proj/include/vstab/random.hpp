#pragma once

#include "vstab/graph.hpp"
#include "vstab/sat.hpp"

#include <random>
#include <vector>

namespace vstab {

using Rng = std::mt19937_64;

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// A random graph with order in [min_n, max_n] and edge density drawn from [0.15, 0.85].
Graph random_small_graph(int min_n, int max_n, Rng& rng);

/// Random m-LIT 2m-SAT instance: every clause has 2m literals and each literal occurs at
/// most m times.
CnfInstance random_plit_instance(int m, int max_variables, Rng& rng);

/// Random CNF with the given shape, literals drawn uniformly.
CnfInstance random_cnf(int variables, int clauses, int clause_size, Rng& rng);

struct PartitionedGraph {
    Graph graph;
    std::vector<VertexSet> parts;
};

/// r cliques of order at least 2k; each vertex gets at most k neighbors outside its clique.
PartitionedGraph random_haxell_instance(int r, int k, Rng& rng);

} // namespace vstab
