#include "vstab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace vstab {

namespace {

// Charges the shared budget in blocks so hot loops avoid an atomic per node.
class NodeMeter {
public:
    explicit NodeMeter(Budget& b) : budget_(b)
    {
        // Flushes from earlier meters may already have crossed the limit.
        const auto used = budget_.used();
        if (used > budget_.limit())
            throw BudgetExceeded();
        // Small remaining budgets are charged node by node so they bite exactly.
        block_ = std::clamp<std::uint64_t>((budget_.limit() - used) / 64, 1, kBlock);
    }
    ~NodeMeter()
    {
        if (pending_ != 0) {
            try {
                budget_.charge(pending_);
            } catch (const BudgetExceeded&) {
            }
        }
    }
    void tick()
    {
        if (++pending_ == block_) {
            pending_ = 0;
            budget_.charge(block_);
        }
    }

private:
    static constexpr std::uint64_t kBlock = 256;
    Budget& budget_;
    std::uint64_t block_ = kBlock;
    std::uint64_t pending_ = 0;
};

// Greedy maximal clique grown from `seed`, preferring candidates with the most
// neighbors among the remaining candidates (ties to the smallest index).
std::vector<int> grow_clique(const Graph& g, int seed)
{
    std::vector<int> q{seed};
    VertexSet cand = g.neighbors(seed);
    while (!cand.empty()) {
        int best = -1;
        int best_score = -1;
        cand.for_each([&](int u) {
            const int score = g.neighbors(u).intersection_count(cand);
            if (score > best_score) {
                best_score = score;
                best = u;
            }
        });
        q.push_back(best);
        cand &= g.neighbors(best);
    }
    std::sort(q.begin(), q.end());
    return q;
}

// DSATUR backtracking for a single connected component.
class DsaturSearch {
public:
    DsaturSearch(const Graph& g, int k, Budget& budget)
        : g_(g), n_(g.order()), k_(k), words_((k + 63) / 64), meter_(budget),
          color_(n_, -1), count_(static_cast<std::size_t>(n_) * k_, 0),
          avail_(static_cast<std::size_t>(n_) * words_, 0), sat_(n_, 0), open_deg_(n_, 0)
    {
        for (int v = 0; v < n_; ++v)
            open_deg_[v] = g_.degree(v);
        for (int v = 0; v < n_; ++v)
            for (int c = 0; c < k_; ++c)
                avail_[v * words_ + c / 64] |= std::uint64_t{1} << (c % 64);

        std::vector<std::vector<int>> found;
        for (int v = 0; v < n_; ++v) {
            auto q = grow_clique(g_, v);
            if (q.size() >= 3)
                found.push_back(std::move(q));
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        cliques_ = std::move(found);
        member_of_.assign(n_, {});
        for (int i = 0; i < static_cast<int>(cliques_.size()); ++i)
            for (int v : cliques_[i])
                member_of_[v].push_back(i);
        stamp_.assign(cliques_.size(), 0);
        scratch_.assign(words_, 0);
    }

    std::optional<std::vector<int>> run()
    {
        for (const auto& q : cliques_)
            if (static_cast<int>(q.size()) > k_)
                return std::nullopt;
        if (dfs(0, 0))
            return color_;
        return std::nullopt;
    }

private:
    bool dfs(int colored, int used)
    {
        if (colored == n_)
            return true;
        int v = -1;
        for (int u = 0; u < n_; ++u)
            if (color_[u] < 0 &&
                (v < 0 || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && open_deg_[u] > open_deg_[v])))
                v = u;
        if (sat_[v] >= k_)
            return false;
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (count_[v * k_ + c] != 0)
                continue;
            meter_.tick();
            assign(v, c);
            if (consistent(v) && dfs(colored + 1, std::max(used, c + 1)))
                return true;
            unassign(v, c);
        }
        return false;
    }

    void assign(int v, int c)
    {
        color_[v] = c;
        g_.neighbors(v).for_each([&](int u) {
            --open_deg_[u];
            if (count_[u * k_ + c]++ == 0) {
                ++sat_[u];
                avail_[u * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
            }
        });
    }

    void unassign(int v, int c)
    {
        color_[v] = -1;
        g_.neighbors(v).for_each([&](int u) {
            ++open_deg_[u];
            if (--count_[u * k_ + c] == 0) {
                --sat_[u];
                avail_[u * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        });
    }

    // Forward check on neighbors of v, then Hall's condition on every tracked clique
    // touching them: its uncolored members need at least as many distinct free colors.
    bool consistent(int v)
    {
        bool ok = true;
        ++epoch_;
        g_.neighbors(v).for_each([&](int u) {
            if (!ok || color_[u] >= 0)
                return;
            if (sat_[u] >= k_) {
                ok = false;
                return;
            }
            for (int qi : member_of_[u]) {
                if (stamp_[qi] == epoch_)
                    continue;
                stamp_[qi] = epoch_;
                if (!hall_ok(cliques_[qi])) {
                    ok = false;
                    return;
                }
            }
        });
        return ok;
    }

    bool hall_ok(const std::vector<int>& q)
    {
        std::fill(scratch_.begin(), scratch_.end(), 0);
        int open = 0;
        for (int u : q) {
            if (color_[u] >= 0)
                continue;
            ++open;
            for (int w = 0; w < words_; ++w)
                scratch_[w] |= avail_[u * words_ + w];
        }
        if (open <= 1)
            return true;
        int free = 0;
        for (auto w : scratch_)
            free += std::popcount(w);
        return free >= open;
    }

    const Graph& g_;
    int n_;
    int k_;
    int words_;
    NodeMeter meter_;
    std::vector<int> color_;
    std::vector<std::uint16_t> count_;
    std::vector<std::uint64_t> avail_;
    std::vector<int> sat_;
    std::vector<int> open_deg_; // uncolored neighbors
    std::vector<std::vector<int>> cliques_;
    std::vector<std::vector<int>> member_of_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::vector<std::uint64_t> scratch_;
};

int smallest_free_color(const Graph& g, const std::vector<int>& color, int v)
{
    std::vector<char> taken(static_cast<std::size_t>(g.degree(v)) + 2, 0);
    g.neighbors(v).for_each([&](int u) {
        const int c = color[u];
        if (c >= 1 && c < static_cast<int>(taken.size()))
            taken[c] = 1;
    });
    int c = 1;
    while (taken[c])
        ++c;
    return c;
}

// Maximum-clique branch and bound. With `target` set, reports every clique of that size.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, Budget& budget) : g_(g), meter_(budget) {}

    CliqueResult maximum()
    {
        enumerate_ = false;
        best_ = 0;
        std::vector<int> r;
        expand(r, g_.all_vertices());
        CliqueResult out;
        out.omega = best_;
        out.witness = VertexSet::from_members(g_.order(), best_set_);
        return out;
    }

    std::vector<VertexSet> all_of_size(int size)
    {
        enumerate_ = true;
        target_ = size;
        found_.clear();
        if (size <= 0)
            return {};
        std::vector<int> r;
        expand(r, g_.all_vertices());
        std::sort(found_.begin(), found_.end(),
                  [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
        return std::move(found_);
    }

private:
    // Greedy coloring of p in index order; returns vertices grouped by color with bounds.
    void color_sort(const VertexSet& p, std::vector<int>& order, std::vector<int>& bound)
    {
        VertexSet left = p;
        int color = 0;
        while (!left.empty()) {
            ++color;
            VertexSet q = left;
            while (!q.empty()) {
                const int v = q.first();
                q.reset(v);
                q -= g_.neighbors(v);
                left.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(std::vector<int>& r, VertexSet p)
    {
        meter_.tick();
        std::vector<int> order;
        std::vector<int> bound;
        color_sort(p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            const int reach = static_cast<int>(r.size()) + bound[i];
            if (enumerate_ ? reach < target_ : reach <= best_)
                return;
            const int v = order[i];
            r.push_back(v);
            VertexSet next = p & g_.neighbors(v);
            if (next.empty() || (enumerate_ && static_cast<int>(r.size()) == target_))
                record(r);
            else
                expand(r, std::move(next));
            r.pop_back();
            p.reset(v);
        }
    }

    void record(const std::vector<int>& r)
    {
        const int size = static_cast<int>(r.size());
        if (enumerate_) {
            if (size == target_)
                found_.push_back(VertexSet::from_members(g_.order(), r));
        } else if (size > best_) {
            best_ = size;
            best_set_ = r;
        }
    }

    const Graph& g_;
    NodeMeter meter_;
    bool enumerate_ = false;
    int target_ = 0;
    int best_ = 0;
    std::vector<int> best_set_;
    std::vector<VertexSet> found_;
};

} // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k, Budget& budget)
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    const int n = g.order();
    Coloring out;
    out.k = k;
    out.colors.assign(static_cast<std::size_t>(n), 0);
    if (n == 0)
        return out;
    if (k == 0)
        return std::nullopt;

    // Peel vertices of degree < k; they can always be colored after the rest.
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v)
        degree[v] = g.degree(v);
    VertexSet core = g.all_vertices();
    std::vector<int> peeled;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (core.test(v) && degree[v] < k) {
                core.reset(v);
                peeled.push_back(v);
                g.neighbors(v).for_each([&](int u) { --degree[u]; });
                changed = true;
            }
        }
    }

    for (const auto& comp : connected_components(g, core)) {
        const auto sub = induced_subgraph(g, comp);
        DsaturSearch search(sub.graph, k, budget);
        auto colors = search.run();
        if (!colors)
            return std::nullopt;
        for (int i = 0; i < sub.graph.order(); ++i)
            out.colors[sub.new_to_old[i]] = (*colors)[i] + 1;
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it)
        out.colors[*it] = smallest_free_color(g, out.colors, *it);
    return out;
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k)
{
    Budget budget;
    return is_k_colorable(g, k, budget);
}

Coloring greedy_dsatur(const Graph& g)
{
    const int n = g.order();
    Coloring out;
    out.colors.assign(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        seen[v].assign(static_cast<std::size_t>(g.degree(v)) + 2, 0);
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (out.colors[u] == 0 &&
                (v < 0 || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v))))
                v = u;
        const int c = smallest_free_color(g, out.colors, v);
        out.colors[v] = c;
        out.k = std::max(out.k, c);
        g.neighbors(v).for_each([&](int u) {
            if (c < static_cast<int>(seen[u].size()) && !seen[u][c]) {
                seen[u][c] = 1;
                ++sat[u];
            }
        });
    }
    return out;
}

namespace {

inline constexpr std::uint64_t kIndependenceProbeBudget = 2'000'000;
inline constexpr int kIteratedGreedyRounds = 300;

// Exact independence number when a small clique search on the complement settles it,
// otherwise 0. Gives the lower bound chi >= n / alpha.
int bounded_independence_number(const Graph& g)
{
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    const Graph complement = std::move(b).build();
    Budget probe(kIndependenceProbeBudget);
    try {
        return clique_number(complement, probe).omega;
    } catch (const BudgetExceeded&) {
        return 0;
    }
}

} // namespace

Coloring iterated_greedy(const Graph& g, Coloring start, int rounds, int target)
{
    const int n = g.order();
    for (int round = 0; round < rounds && start.k > target; ++round) {
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(start.k) + 1);
        for (int v = 0; v < n; ++v)
            classes[start.colors[v]].push_back(v);
        std::vector<int> idx(static_cast<std::size_t>(start.k));
        std::iota(idx.begin(), idx.end(), 1);
        switch (round % 3) {
        case 0:
            std::reverse(idx.begin(), idx.end());
            break;
        case 1:
            std::stable_sort(idx.begin(), idx.end(),
                             [&](int a, int b) { return classes[a].size() > classes[b].size(); });
            break;
        default:
            std::stable_sort(idx.begin(), idx.end(),
                             [&](int a, int b) { return classes[a].size() < classes[b].size(); });
            break;
        }
        // Recoloring class by class never needs more colors than before.
        Coloring next;
        next.colors.assign(static_cast<std::size_t>(n), 0);
        for (int c : idx) {
            for (int v : classes[c]) {
                next.colors[v] = smallest_free_color(g, next.colors, v);
                next.k = std::max(next.k, next.colors[v]);
            }
        }
        start = std::move(next);
    }
    return start;
}

ChromaticResult chromatic_number(const Graph& g, Budget& budget)
{
    ChromaticResult out;
    if (g.order() == 0)
        return out;
    int lower = clique_number(g, budget).omega;
    Coloring upper = iterated_greedy(g, greedy_dsatur(g), kIteratedGreedyRounds, lower);
    if (lower < upper.k) {
        if (const int alpha = bounded_independence_number(g); alpha > 0)
            lower = std::max(lower, (g.order() + alpha - 1) / alpha);
    }
    for (int k = lower; k < upper.k; ++k) {
        if (auto c = is_k_colorable(g, k, budget)) {
            out.chi = k;
            out.coloring = std::move(*c);
            return out;
        }
    }
    out.chi = upper.k;
    out.coloring = std::move(upper);
    return out;
}

ChromaticResult chromatic_number(const Graph& g)
{
    Budget budget;
    return chromatic_number(g, budget);
}

CliqueResult clique_number(const Graph& g, Budget& budget)
{
    CliqueSearch search(g, budget);
    return search.maximum();
}

CliqueResult clique_number(const Graph& g)
{
    Budget budget;
    return clique_number(g, budget);
}

std::vector<VertexSet> enumerate_cliques_of_size(const Graph& g, int size, Budget& budget)
{
    CliqueSearch search(g, budget);
    return search.all_of_size(size);
}

std::vector<VertexSet> enumerate_maximum_cliques(const Graph& g, Budget& budget)
{
    const int omega = clique_number(g, budget).omega;
    return enumerate_cliques_of_size(g, omega, budget);
}

std::vector<VertexSet> enumerate_maximum_cliques(const Graph& g)
{
    Budget budget;
    return enumerate_maximum_cliques(g, budget);
}

InvariantSummary summarize(const Graph& g, Budget& budget)
{
    InvariantSummary s;
    s.n = g.order();
    s.m = g.size();
    s.delta = g.max_degree();
    auto clique = clique_number(g, budget);
    s.omega = clique.omega;
    s.witness_clique = std::move(clique.witness);
    auto chi = chromatic_number(g, budget);
    s.chi = chi.chi;
    s.witness_coloring = std::move(chi.coloring);
    return s;
}

} // namespace vstab
