#pragma once

// Plain exponential reference computations for tests. Deliberately naive: no bounds, no
// ordering heuristics, nothing shared with the library solvers beyond the Graph type.

#include "vstab/graph.hpp"
#include "vstab/stability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace brute {

inline bool assign(const vstab::Graph& g, std::vector<int>& col, int v, int k)
{
    if (v == g.order())
        return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            ok = !(g.adjacent(u, v) && col[u] == c);
        if (!ok)
            continue;
        col[v] = c;
        if (assign(g, col, v + 1, k))
            return true;
    }
    return false;
}

/// Smallest k admitting a proper assignment out of all k^n.
inline int chi(const vstab::Graph& g)
{
    std::vector<int> col(static_cast<std::size_t>(g.order()), 0);
    for (int k = 0;; ++k)
        if (assign(g, col, 0, k))
            return k;
}

inline bool clique_mask(const vstab::Graph& g, std::uint32_t mask)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v))
                return false;
    return true;
}

inline bool independent_mask(const vstab::Graph& g, std::uint32_t mask)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v))
                return false;
    return true;
}

inline int omega(const vstab::Graph& g)
{
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.order()); ++mask)
        if (clique_mask(g, mask))
            best = std::max(best, std::popcount(mask));
    return best;
}

inline vstab::Graph remove_mask(const vstab::Graph& g, std::uint32_t mask)
{
    vstab::VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (mask >> v & 1U)
            s.set(v);
    return vstab::delete_vertices(g, s).graph;
}

inline int param(const vstab::Graph& g, vstab::Parameter p)
{
    return p == vstab::Parameter::chi ? chi(g) : omega(g);
}

/// Lexicographically smallest member list, compared as sorted vectors.
inline std::vector<int> members(std::uint32_t mask)
{
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1U)
            out.push_back(v);
    return out;
}

struct Result {
    std::optional<int> vs;
    std::vector<int> vs_witness;
    std::optional<int> ivs;
    std::vector<int> ivs_witness;
};

/// Every subset, recomputing the parameter from scratch each time.
inline Result stability(const vstab::Graph& g, vstab::Parameter p)
{
    const int base = param(g, p);
    Result r;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.order()); ++mask) {
        const int size = std::popcount(mask);
        const bool vs_candidate = !r.vs || size <= *r.vs;
        const bool indep = independent_mask(g, mask);
        const bool ivs_candidate = indep && (!r.ivs || size <= *r.ivs);
        if (!vs_candidate && !ivs_candidate)
            continue;
        if (param(remove_mask(g, mask), p) >= base)
            continue;
        const auto list = members(mask);
        if (vs_candidate && (!r.vs || size < *r.vs || list < r.vs_witness)) {
            r.vs = size;
            r.vs_witness = list;
        }
        if (ivs_candidate && (!r.ivs || size < *r.ivs || list < r.ivs_witness)) {
            r.ivs = size;
            r.ivs_witness = list;
        }
    }
    return r;
}

} // namespace brute
