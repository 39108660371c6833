#include "vstab/naive.hpp"

#include <algorithm>
#include <bit>

namespace vstab {

SubsetTable::SubsetTable(const Graph& g) : n_(g.order())
{
    if (n_ > kMaxNaiveOrder)
        throw std::invalid_argument("subset tables are limited to " +
                                    std::to_string(kMaxNaiveOrder) + " vertices");
    const std::uint32_t size = std::uint32_t{1} << n_;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
        for (int u = 0; u < n_; ++u)
            if (g.adjacent(v, u))
                nbr[v] |= std::uint32_t{1} << u;

    independent_.assign(size, 0);
    omega_.assign(size, 0);
    chi_.assign(size, 0);
    independent_[0] = 1;
    for (std::uint32_t s = 1; s < size; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        independent_[s] = independent_[rest] && (nbr[v] & rest) == 0;
        omega_[s] = std::max<int>(omega_[rest], 1 + omega_[rest & nbr[v]]);
    }
    // chi(S) = 1 + min chi(S - I) over independent I containing the lowest vertex of S.
    for (std::uint32_t s = 1; s < size; ++s) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t others = s ^ low;
        int best = n_ + 1;
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            const std::uint32_t cls = sub | low;
            if (independent_[cls])
                best = std::min(best, 1 + chi_[s ^ cls]);
            if (sub == 0)
                break;
        }
        chi_[s] = static_cast<std::uint8_t>(best);
    }
}

VertexSet mask_to_set(int n, std::uint32_t mask)
{
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1U)
            s.set(v);
    return s;
}

NaiveStability naive_stability(const Graph& g, Parameter p)
{
    const SubsetTable t(g);
    const int n = t.order();
    const std::uint32_t full = t.full_mask();
    auto value = [&](std::uint32_t m) { return p == Parameter::chi ? t.chi(m) : t.omega(m); };
    const int base = value(full);

    NaiveStability out;
    auto consider = [](std::optional<int>& best, std::optional<VertexSet>& witness, int size,
                       VertexSet s) {
        if (!best || size < *best || (size == *best && lex_compare(s, *witness) < 0)) {
            best = size;
            witness = std::move(s);
        }
    };
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (value(full ^ s) >= base)
            continue;
        const int size = std::popcount(s);
        consider(out.value, out.witness, size, mask_to_set(n, s));
        if (t.independent(s))
            consider(out.independent_value, out.independent_witness, size, mask_to_set(n, s));
    }
    return out;
}

} // namespace vstab
