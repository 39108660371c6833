#pragma once

#include "vstab/budget.hpp"
#include "vstab/graph.hpp"
#include "vstab/stability.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vstab {

enum class Family { prop31, prop31_variant, constr1, c5blowup };
std::string to_string(Family f);

enum class Comparator {
    equal,       // computed == value
    at_least,    // computed >= value
    one_of,      // computed in values
    nonexistent, // the invariant is undefined for this graph
};

struct Expectation {
    std::string name; // e.g. "vs_chi", "ivs_chi_lower"
    Comparator cmp = Comparator::equal;
    std::vector<int> values;
};

/// Claimed invariants for a generated graph, straight from the closed-form formulas.
struct ConstructionMeta {
    Family family = Family::prop31;
    std::map<std::string, int> params;
    std::vector<Expectation> expected;
};

struct Construction {
    Graph graph;
    ConstructionMeta meta;
};

int ceil_sqrt(int x);
int ceil_div(int a, int b);

/// K_chi plus `copies` gadgets K_{chi-2} ∧ aK_1 with a = ceil(sqrt(chi)).
///
/// Layout: vertices [0, chi) form the central clique, split into a contiguous parts
/// V_1..V_a with sizes as equal as possible (larger parts first). Copy c occupies the next
/// chi-2+a indices: chi-2 clique vertices, then a independent vertices; independent vertex
/// j sees every clique vertex of its copy and all of V_j.
///
/// copies defaults to 2. Any other count selects the variant and must lie in
/// [2, ceil(chi/a) - 1].
Construction construct_prop31(int chi, std::optional<int> copies = std::nullopt);

/// k disjoint copies of H (two K_k's sharing a K_a) and a central K_k, with
/// k = ceil(2(delta+1)/3) - 1 and a = 2k - delta.
///
/// Layout: vertices [0, k) are the central clique. Copy i starts at k + i(2k-a) with its a
/// shared vertices, then k-a left-only, then k-a right-only vertices. Central vertex i sees
/// the shared vertices of copy i.
Construction construct_constr1(int delta);

/// C5 with every vertex replaced by K_k; part P_i = [ik, (i+1)k).
Construction construct_c5blowup(int k);

enum class ClaimStatus { pass, fail, inconclusive };
std::string to_string(ClaimStatus s);

struct ClaimCheck {
    std::string name;
    ClaimStatus status = ClaimStatus::inconclusive;
    std::string computed; // "5", "nonexistent", or "" when inconclusive
    std::string expected;
};

/// Recomputes every claim in `meta` with the exact solvers. Budget exhaustion yields
/// inconclusive checks, never failures.
std::vector<ClaimCheck> expected_invariants_check(const Graph& g, const ConstructionMeta& meta,
                                                  const StabilityOptions& opts = {});

std::string describe(const Expectation& e);

} // namespace vstab
