#pragma once

#include "vstab/budget.hpp"
#include "vstab/graph.hpp"

#include <optional>
#include <vector>

namespace vstab {

/// Proper k-coloring of g if one exists. Deterministic in (g, k).
///
/// Vertices of degree < k are peeled off first and colored last; the remaining core is
/// split into components and each is searched by DSATUR backtracking (max saturation,
/// then most uncolored neighbors, then smallest index) with forward checking and a Hall-type count on a fixed
/// family of greedy cliques.
std::optional<Coloring> is_k_colorable(const Graph& g, int k, Budget& budget);
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Greedy DSATUR coloring; an upper bound only.
Coloring greedy_dsatur(const Graph& g);

/// Culberson-style iterated greedy: recolors class by class in rotating class orders.
/// Never increases the color count; stops early once `target` colors are reached.
Coloring iterated_greedy(const Graph& g, Coloring start, int rounds, int target);

struct ChromaticResult {
    int chi = 0;
    Coloring coloring; // the canonical optimal coloring
};

/// Exact chromatic number; chi(empty graph) = 0. Throws BudgetExceeded.
ChromaticResult chromatic_number(const Graph& g, Budget& budget);
ChromaticResult chromatic_number(const Graph& g);

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
};

/// Exact clique number by bitset branch and bound with greedy-coloring bounds.
CliqueResult clique_number(const Graph& g, Budget& budget);
CliqueResult clique_number(const Graph& g);

/// Every clique of size exactly `size`, sorted lexicographically by member list.
std::vector<VertexSet> enumerate_cliques_of_size(const Graph& g, int size, Budget& budget);
/// Every maximum clique, sorted lexicographically.
std::vector<VertexSet> enumerate_maximum_cliques(const Graph& g, Budget& budget);
std::vector<VertexSet> enumerate_maximum_cliques(const Graph& g);

struct InvariantSummary {
    int n = 0;
    int m = 0;
    int delta = 0;
    int chi = 0;
    int omega = 0;
    Coloring witness_coloring;
    VertexSet witness_clique;
};

InvariantSummary summarize(const Graph& g, Budget& budget);

} // namespace vstab
