#include "vstab/stability.hpp"

#include "vstab/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace vstab {

std::string_view to_string(Parameter p)
{
    return p == Parameter::chi ? "chi" : "omega";
}

namespace {

// Sets a removal set must meet. For omega these are exactly the maximum cliques; for chi
// they are chi-critical vertex sets, seeded with the chi-cliques and grown by learning.
class HittingConstraints {
public:
    void add(VertexSet s)
    {
        for (const auto& c : sets_)
            if (c == s)
                return;
        sets_.push_back(std::move(s));
    }
    const std::vector<VertexSet>& sets() const noexcept { return sets_; }

private:
    std::vector<VertexSet> sets_;
};

// Greedy count of pairwise-disjoint members; a lower bound on any hitting set.
int disjoint_packing(const std::vector<const VertexSet*>& sets, int universe)
{
    VertexSet used(universe);
    int count = 0;
    for (const auto* s : sets)
        if (!s->intersects(used)) {
            used |= *s;
            ++count;
        }
    return count;
}

// Enumerates size-`size` subsets in lexicographic order that can still meet every
// constraint. Resumable so candidates can be drawn in batches; the constraint list may
// grow between calls.
class SubsetEnumerator {
public:
    SubsetEnumerator(const Graph& g, int size, bool independent, const HittingConstraints& cons)
        : g_(g), n_(g.order()), size_(size), independent_(independent), cons_(cons),
          chosen_set_(g.order())
    {
        cursor_.assign(static_cast<std::size_t>(size) + 1, 0);
        blocked_.assign(static_cast<std::size_t>(size) + 1, VertexSet(n_));
        done_ = size > n_ || !feasible(0);
    }

    bool next(std::vector<int>& out)
    {
        while (!done_) {
            const int d = static_cast<int>(chosen_.size());
            if (d == size_) {
                out = chosen_;
                pop();
                return true;
            }
            int v = cursor_[d];
            while (v < n_ && blocked_[d].test(v))
                ++v;
            if (v >= n_ || n_ - v < size_ - d) {
                if (d == 0) {
                    done_ = true;
                    break;
                }
                pop();
                continue;
            }
            cursor_[d] = v + 1;
            chosen_.push_back(v);
            chosen_set_.set(v);
            blocked_[d + 1] = blocked_[d];
            blocked_[d + 1].set(v);
            if (independent_)
                blocked_[d + 1] |= g_.neighbors(v);
            cursor_[d + 1] = v + 1;
            if (!feasible(v + 1))
                pop();
        }
        return false;
    }

private:
    void pop()
    {
        const int v = chosen_.back();
        chosen_.pop_back();
        chosen_set_.reset(v);
    }

    bool feasible(int from)
    {
        const int d = static_cast<int>(chosen_.size());
        const int slots = size_ - d;
        VertexSet avail = VertexSet::full(n_) - blocked_[d];
        for (int v = 0; v < std::min(from, n_); ++v)
            avail.reset(v);
        restricted_.clear();
        for (const auto& c : cons_.sets()) {
            if (c.intersects(chosen_set_))
                continue;
            if (slots == 0)
                return false;
            restricted_.push_back(c & avail);
            if (restricted_.back().empty())
                return false;
        }
        if (restricted_.size() <= 1)
            return true;
        std::vector<const VertexSet*> ptrs;
        ptrs.reserve(restricted_.size());
        for (const auto& r : restricted_)
            ptrs.push_back(&r);
        std::stable_sort(ptrs.begin(), ptrs.end(),
                         [](const VertexSet* a, const VertexSet* b) { return a->count() < b->count(); });
        return disjoint_packing(ptrs, n_) <= slots;
    }

    const Graph& g_;
    int n_;
    int size_;
    bool independent_;
    const HittingConstraints& cons_;
    std::vector<int> chosen_;
    VertexSet chosen_set_;
    std::vector<int> cursor_;
    std::vector<VertexSet> blocked_;
    std::vector<VertexSet> restricted_;
    bool done_ = false;
};

class StabilitySearch {
public:
    StabilitySearch(const Graph& g, Parameter p, const StabilityOptions& opts, Budget& budget)
        : g_(g), p_(p), opts_(opts), budget_(budget)
    {
    }

    StabilityReport run()
    {
        StabilityReport rep;
        rep.parameter = p_;
        if (p_ == Parameter::chi) {
            chi_ = chromatic_number(g_, budget_);
            value_ = chi_.chi;
        } else {
            value_ = clique_number(g_, budget_).omega;
        }
        rep.parameter_value = value_;
        if (value_ < 1)
            throw std::invalid_argument("parameter is already 0; nothing to reduce");

        for (auto& c : enumerate_cliques_of_size(g_, value_, budget_))
            cons_.add(std::move(c));
        const int lower = lower_bound();

        try {
            if (opts_.compute_vs) {
                const int upper = p_ == Parameter::chi ? class_upper_bound() : g_.order();
                if (auto w = search(lower, upper, false)) {
                    rep.value = w->count();
                    rep.witness = std::move(*w);
                }
            }
            if (opts_.compute_ivs) {
                int from = rep.value.value_or(lower);
                std::optional<int> upper;
                if (p_ == Parameter::chi) {
                    upper = class_upper_bound();
                } else if (auto any = independent_hitting_set(g_, cons_.sets())) {
                    upper = any->count();
                }
                if (upper) {
                    if (auto w = search(from, *upper, true)) {
                        rep.independent_value = w->count();
                        rep.independent_witness = std::move(*w);
                    }
                }
            }
            rep.exhausted = true;
        } catch (const BudgetExceeded&) {
            rep.exhausted = false;
        }
        return rep;
    }

private:
    int lower_bound() const
    {
        std::vector<const VertexSet*> ptrs;
        for (const auto& c : cons_.sets())
            ptrs.push_back(&c);
        return std::max(1, disjoint_packing(ptrs, g_.order()));
    }

    int class_upper_bound() const
    {
        int best = g_.order();
        for (int c = 1; c <= chi_.coloring.k; ++c) {
            const int size = static_cast<int>(chi_.coloring.color_class(c).size());
            if (size > 0)
                best = std::min(best, size);
        }
        return best;
    }

    std::optional<VertexSet> search(int from, int upto, bool independent)
    {
        for (int s = std::max(from, 1); s <= upto; ++s) {
            // One thread gains nothing from batching and loses the per-candidate learning.
            const bool serial =
                opts_.execution == Execution::serial || omp_get_max_threads() == 1;
            auto found = serial ? search_size_serial(s, independent)
                                : search_size_parallel(s, independent);
            if (found)
                return VertexSet::from_members(g_.order(), *found);
        }
        return std::nullopt;
    }

    std::optional<std::vector<int>> search_size_serial(int size, bool independent)
    {
        SubsetEnumerator it(g_, size, independent, cons_);
        std::vector<int> cand;
        while (it.next(cand)) {
            const auto s = VertexSet::from_members(g_.order(), cand);
            if (check(s))
                return cand;
        }
        return std::nullopt;
    }

    // Candidates are drawn in lexicographic batches and tested concurrently. The first
    // success in batch order wins, so the witness matches the serial search.
    std::optional<std::vector<int>> search_size_parallel(int size, bool independent)
    {
        SubsetEnumerator it(g_, size, independent, cons_);
        const int batch_size = std::max(1, opts_.batch);
        std::vector<std::vector<int>> batch;
        while (true) {
            batch.clear();
            std::vector<int> cand;
            while (static_cast<int>(batch.size()) < batch_size && it.next(cand))
                batch.push_back(cand);
            if (batch.empty())
                return std::nullopt;

            const int count = static_cast<int>(batch.size());
            std::vector<char> ok(count, 0);
            std::vector<std::optional<VertexSet>> learned(count);
            std::exception_ptr error;
            int first_ok = count;
            std::atomic<int> earliest{count};
#pragma omp parallel for schedule(dynamic, 1)
            for (int i = 0; i < count; ++i) {
                if (error_flag_.load(std::memory_order_relaxed) ||
                    i > earliest.load(std::memory_order_relaxed))
                    continue;
                try {
                    const auto s = VertexSet::from_members(g_.order(), batch[i]);
                    if (p_ == Parameter::omega || reduces_chi(s)) {
                        ok[i] = 1;
                        int cur = earliest.load(std::memory_order_relaxed);
                        while (i < cur && !earliest.compare_exchange_weak(cur, i))
                            ;
                    } else {
                        learned[i] = critical_core(s);
                    }
                } catch (...) {
#pragma omp critical(vstab_stability_error)
                    {
                        if (!error)
                            error = std::current_exception();
                        error_flag_ = true;
                    }
                }
            }
            if (error) {
                error_flag_ = false;
                std::rethrow_exception(error);
            }
            for (int i = 0; i < count; ++i)
                if (ok[i]) {
                    first_ok = i;
                    break;
                }
            if (first_ok < count)
                return batch[first_ok];
            for (auto& l : learned)
                if (l)
                    cons_.add(std::move(*l));
        }
    }

    bool check(const VertexSet& s)
    {
        if (p_ == Parameter::omega)
            return true; // hitting every maximum clique is exactly what lowers omega
        if (reduces_chi(s))
            return true;
        cons_.add(critical_core(s));
        return false;
    }

    bool reduces_chi(const VertexSet& s)
    {
        const auto rest = delete_vertices(g_, s);
        return is_k_colorable(rest.graph, value_ - 1, budget_).has_value();
    }

    // A chi-critical vertex set avoiding s; every later candidate must meet it.
    VertexSet critical_core(const VertexSet& s)
    {
        const int target = value_;
        VertexSet h = g_.all_vertices() - s;
        // Critical graphs have minimum degree >= target-1.
        bool changed = true;
        while (changed) {
            changed = false;
            h.for_each([&](int v) {
                if (g_.neighbors(v).intersection_count(h) < target - 1) {
                    h.reset(v);
                    changed = true;
                }
            });
        }
        for (const auto& comp : connected_components(g_, h)) {
            if (!is_k_colorable(induced_subgraph(g_, comp).graph, target - 1, budget_)) {
                h = comp;
                break;
            }
        }
        for (int v : h.members()) {
            h.reset(v);
            if (is_k_colorable(induced_subgraph(g_, h).graph, target - 1, budget_))
                h.set(v);
        }
        return h;
    }

    const Graph& g_;
    Parameter p_;
    const StabilityOptions& opts_;
    Budget& budget_;
    ChromaticResult chi_;
    int value_ = 0;
    HittingConstraints cons_;
    std::atomic<bool> error_flag_{false};
};

} // namespace

StabilityReport stability(const Graph& g, Parameter p, const StabilityOptions& opts)
{
    Budget budget(opts.node_budget);
    StabilityReport rep;
    try {
        StabilitySearch search(g, p, opts, budget);
        rep = search.run();
    } catch (const BudgetExceeded&) {
        rep.parameter = p;
        rep.exhausted = false;
    }
    return rep;
}

StabilityReport vertex_stability(const Graph& g, Parameter p, const StabilityOptions& opts)
{
    auto o = opts;
    o.compute_vs = true;
    o.compute_ivs = false;
    return stability(g, p, o);
}

StabilityReport independent_vertex_stability(const Graph& g, Parameter p,
                                             const StabilityOptions& opts)
{
    auto o = opts;
    o.compute_vs = false;
    o.compute_ivs = true;
    return stability(g, p, o);
}

VertexSet reduce_by_color_class(const Graph& g)
{
    const auto res = chromatic_number(g);
    if (res.chi < 1)
        throw std::invalid_argument("graph has no vertices");
    int best = -1;
    std::size_t best_size = 0;
    for (int c = 1; c <= res.coloring.k; ++c) {
        const auto members = res.coloring.color_class(c);
        if (!members.empty() && (best < 0 || members.size() < best_size)) {
            best = c;
            best_size = members.size();
        }
    }
    const auto members = res.coloring.color_class(best);
    return VertexSet::from_members(g.order(), members);
}

bool reduces(const Graph& g, const VertexSet& s, Parameter p, Budget& budget)
{
    const auto rest = delete_vertices(g, s);
    if (p == Parameter::chi) {
        const int chi = chromatic_number(g, budget).chi;
        return chi > 0 && is_k_colorable(rest.graph, chi - 1, budget).has_value();
    }
    return clique_number(rest.graph, budget).omega < clique_number(g, budget).omega;
}

namespace {

bool hitting_dfs(const Graph& g, const std::vector<VertexSet>& sets, VertexSet& chosen,
                 VertexSet& blocked)
{
    // Branch on the unmet set with the fewest usable vertices.
    const VertexSet* pick = nullptr;
    int pick_count = 0;
    for (const auto& s : sets) {
        if (s.intersects(chosen))
            continue;
        const int usable = (s - blocked).count();
        if (usable == 0)
            return false;
        if (!pick || usable < pick_count) {
            pick = &s;
            pick_count = usable;
        }
    }
    if (!pick)
        return true;
    const auto options = (*pick - blocked).members();
    for (int v : options) {
        const VertexSet saved = blocked;
        chosen.set(v);
        blocked.set(v);
        blocked |= g.neighbors(v);
        if (hitting_dfs(g, sets, chosen, blocked))
            return true;
        chosen.reset(v);
        blocked = saved;
    }
    return false;
}

} // namespace

std::optional<VertexSet> independent_hitting_set(const Graph& g, const std::vector<VertexSet>& sets)
{
    VertexSet chosen(g.order());
    VertexSet blocked(g.order());
    if (hitting_dfs(g, sets, chosen, blocked))
        return chosen;
    return std::nullopt;
}

// --- threshold arithmetic ---

long long k_delta(long long delta)
{
    if (delta < 2)
        throw std::invalid_argument("k_delta needs delta >= 2");
    long long k = 0;
    while ((k + 2) * (k + 3) <= delta)
        ++k;
    return k;
}

FBounds f_bounds(long long delta)
{
    if (delta < 3)
        throw std::invalid_argument("f_bounds needs delta >= 3");
    FBounds b;
    b.delta = delta;
    b.k_delta = k_delta(delta);
    const long long k = b.k_delta;
    b.in_window = (k + 1) * (k + 2) <= delta && delta <= k * k + 4 * k + 1;
    if (delta <= 10) {
        b.lower = b.upper = b.asymptotic_upper = delta;
        b.upper_is_asymptotic = false;
        return b;
    }
    b.lower = b.in_window ? delta + 2 - k : delta + 1 - k;
    b.upper = delta;
    b.asymptotic_upper = delta + 2 - k;
    b.upper_is_asymptotic = true;
    return b;
}

} // namespace vstab
