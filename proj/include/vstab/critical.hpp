#pragma once

#include "vstab/budget.hpp"
#include "vstab/graph.hpp"
#include "vstab/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vstab {

/// chi(g[h]) == chi and chi(g[h - v]) == chi - 1 for every v in h.
bool is_critical(const Graph& g, const VertexSet& h, int chi, Budget& budget);

/// Peels vertices in increasing index order whenever chi survives the removal; the result
/// induces a chi(g)-critical subgraph. Requires chi(g) >= 2.
VertexSet find_critical_subgraph(const Graph& g, Budget& budget);
VertexSet find_critical_subgraph(const Graph& g);

inline constexpr int kMaxFullScanOrder = 16;
inline constexpr int kMaxEnumerationOrder = 12;

/// Every vertex set of order <= max_order inducing a chi(g)-critical subgraph, sorted
/// lexicographically. Critical graphs are connected with minimum degree >= chi-1, so the
/// scan walks connected sets only. Requires n <= 16 or max_order <= 12.
std::vector<VertexSet> enumerate_critical_subgraphs(const Graph& g, int max_order,
                                                    Execution exec, Budget& budget);
std::vector<VertexSet> enumerate_critical_subgraphs(const Graph& g, int max_order,
                                                    Execution exec = Execution::parallel);

struct CriticalityReport {
    int chi = 0;
    int delta = 0;
    long long k_delta = 0;  // 0 when delta < 2
    int max_order = 0;      // order cap used for the enumeration
    long long bound = 0;    // delta + 1 + k_delta
    std::vector<VertexSet> critical_subgraphs;
    std::vector<VertexSet> union_components;
    std::vector<bool> bound_satisfied; // |C| < bound, per component
};

/// Components of the union of all chi-critical subgraphs of order <= max_order (default
/// min(n, delta + 1)). The union keeps only the critical subgraphs' own edges, so two
/// critical sets land in one component exactly when they are chained by shared vertices.
/// The size bound is reported, not enforced.
CriticalityReport critical_union_report(const Graph& g, std::optional<int> max_order = std::nullopt,
                                        Execution exec = Execution::parallel);

/// An independent set with exactly one vertex per part, if any. Backtracks over the part
/// with the fewest usable vertices (ties to the lower part index), vertices ascending.
std::optional<VertexSet> independent_transversal(const Graph& g, const std::vector<VertexSet>& parts);

struct PipelineStep {
    std::string step;
    bool ok = false;
    std::string detail;
};

struct PipelineCertificate {
    int r = 0;
    std::vector<VertexSet> components;
    Coloring coloring;
    std::vector<VertexSet> singleton_colored; // S_i per component
    VertexSet transversal;                    // I
    int chi_before = 0;
    int chi_after = 0;
};

struct PipelineResult {
    std::optional<PipelineCertificate> certificate; // present => vs_chi = ivs_chi = r
    std::vector<PipelineStep> trace;
};

/// Runs the critical-union / singleton-color / transversal recipe on g and verifies the
/// outcome directly.
PipelineResult vs_ivs_pipeline(const Graph& g, std::optional<int> max_order = std::nullopt,
                               Execution exec = Execution::parallel);

} // namespace vstab
