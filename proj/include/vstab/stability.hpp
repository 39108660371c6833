#pragma once

#include "vstab/budget.hpp"
#include "vstab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace vstab {

enum class Parameter { chi, omega };
std::string_view to_string(Parameter p);

enum class Execution { serial, parallel };

struct StabilityReport {
    Parameter parameter = Parameter::chi;
    int parameter_value = 0;
    std::optional<int> value;
    std::optional<VertexSet> witness;
    std::optional<int> independent_value;
    std::optional<VertexSet> independent_witness;
    /// True when the search space was exhausted, i.e. the values above are final.
    /// An absent value with exhausted == true means "does not exist".
    bool exhausted = false;
};

struct StabilityOptions {
    Execution execution = Execution::parallel;
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Candidates evaluated per parallel batch.
    int batch = 256;
    bool compute_vs = true;
    bool compute_ivs = true;
};

/// vs and ivs of g for the given parameter, with the lexicographically least minimum
/// witnesses. Requires the parameter value of g to be at least 1.
StabilityReport stability(const Graph& g, Parameter p, const StabilityOptions& opts = {});
StabilityReport vertex_stability(const Graph& g, Parameter p, const StabilityOptions& opts = {});
StabilityReport independent_vertex_stability(const Graph& g, Parameter p,
                                             const StabilityOptions& opts = {});

/// Smallest color class of the canonical optimal coloring (ties to the smallest color).
VertexSet reduce_by_color_class(const Graph& g);

/// True iff removing s strictly lowers the parameter.
bool reduces(const Graph& g, const VertexSet& s, Parameter p, Budget& budget);

/// Some independent set meets every set in `sets`; exact backtracking.
std::optional<VertexSet> independent_hitting_set(const Graph& g, const std::vector<VertexSet>& sets);

// --- threshold arithmetic ---

/// Largest k with (k+1)(k+2) <= delta. Integer-only; delta >= 2.
long long k_delta(long long delta);

struct FBounds {
    long long delta = 0;
    long long lower = 0;
    long long upper = 0;            // unconditional
    long long asymptotic_upper = 0; // valid only for sufficiently large delta
    bool upper_is_asymptotic = false;
    bool in_window = false;         // (k+1)(k+2) <= delta <= k^2+4k+1
    long long k_delta = 0;
};

/// Known bounds on the threshold f(delta); delta >= 3.
FBounds f_bounds(long long delta);

} // namespace vstab
