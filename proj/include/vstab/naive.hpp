#pragma once

#include "vstab/graph.hpp"
#include "vstab/stability.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vstab {

inline constexpr int kMaxNaiveOrder = 16;

/// chi, omega and independence of every induced subgraph, by dynamic programming over
/// vertex masks. Shares no code with the branch-and-bound solvers; used as a reference.
class SubsetTable {
public:
    explicit SubsetTable(const Graph& g);

    int order() const noexcept { return n_; }
    std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << n_) - 1; }
    int chi(std::uint32_t mask) const { return chi_[mask]; }
    int omega(std::uint32_t mask) const { return omega_[mask]; }
    bool independent(std::uint32_t mask) const { return independent_[mask] != 0; }

private:
    int n_;
    std::vector<std::uint8_t> chi_;
    std::vector<std::uint8_t> omega_;
    std::vector<std::uint8_t> independent_;
};

struct NaiveStability {
    std::optional<int> value;
    std::optional<VertexSet> witness; // lexicographically least of minimum size
    std::optional<int> independent_value;
    std::optional<VertexSet> independent_witness;
};

/// Scans every vertex subset.
NaiveStability naive_stability(const Graph& g, Parameter p);

VertexSet mask_to_set(int n, std::uint32_t mask);

} // namespace vstab
