#include "vstab/critical.hpp"

#include "vstab/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <sstream>

namespace vstab {

bool is_critical(const Graph& g, const VertexSet& h, int chi, Budget& budget)
{
    if (chi < 1 || h.empty())
        return false;
    const auto sub = induced_subgraph(g, h);
    const int n = sub.graph.order();
    for (int v = 0; v < n; ++v)
        if (sub.graph.degree(v) < chi - 1)
            return false;
    // Every H - v being (chi-1)-colorable already gives chi(H) <= chi.
    if (is_k_colorable(sub.graph, chi - 1, budget))
        return false;
    for (int v = 0; v < n; ++v) {
        VertexSet drop(n);
        drop.set(v);
        if (!is_k_colorable(delete_vertices(sub.graph, drop).graph, chi - 1, budget))
            return false;
    }
    return true;
}

VertexSet find_critical_subgraph(const Graph& g, Budget& budget)
{
    const int chi = chromatic_number(g, budget).chi;
    if (chi < 2)
        throw std::invalid_argument("find_critical_subgraph needs chi >= 2");
    // One ascending pass suffices: a vertex kept once stays necessary in every subset.
    VertexSet current = g.all_vertices();
    for (int v = 0; v < g.order(); ++v) {
        VertexSet trial = current;
        trial.reset(v);
        if (!is_k_colorable(induced_subgraph(g, trial).graph, chi - 1, budget))
            current = std::move(trial);
    }
    return current;
}

VertexSet find_critical_subgraph(const Graph& g)
{
    Budget budget;
    return find_critical_subgraph(g, budget);
}

namespace {

// Vertices surviving repeated removal of those with fewer than d neighbors.
VertexSet degree_core(const Graph& g, int d)
{
    VertexSet core = g.all_vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = core.first(); v >= 0; v = core.next(v)) {
            if (g.neighbors(v).intersection_count(core) < d) {
                core.reset(v);
                changed = true;
            }
        }
    }
    return core;
}

bool min_degree_at_least(const Graph& g, const VertexSet& s, int d)
{
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbors(v).intersection_count(s) < d)
            return false;
    return true;
}

// ESU-style enumeration of connected sets whose smallest member is `root`.
class ConnectedSets {
public:
    ConnectedSets(const Graph& g, const VertexSet& allowed, int root, int min_order, int max_order,
                  int chi, Budget& budget)
        : g_(g), allowed_(allowed), root_(root), min_order_(min_order), max_order_(max_order),
          chi_(chi), budget_(budget)
    {
    }

    std::vector<VertexSet> run()
    {
        VertexSet sub(g_.order());
        sub.set(root_);
        VertexSet ext = g_.neighbors(root_) & allowed_;
        for (int v = ext.first(); v >= 0 && v <= root_; v = ext.next(v))
            ext.reset(v);
        VertexSet closed = g_.neighbors(root_);
        closed.set(root_);
        extend(sub, ext, closed);
        return std::move(found_);
    }

private:
    void extend(VertexSet& sub, VertexSet ext, const VertexSet& closed)
    {
        budget_.charge();
        const int size = sub.count();
        if (size >= min_order_ && min_degree_at_least(g_, sub, chi_ - 1) &&
            is_critical(g_, sub, chi_, budget_))
            found_.push_back(sub);
        if (size >= max_order_)
            return;
        while (!ext.empty()) {
            const int w = ext.first();
            ext.reset(w);
            VertexSet next_ext = ext;
            VertexSet fresh = g_.neighbors(w) & allowed_;
            fresh -= closed;
            for (int v = fresh.first(); v >= 0 && v <= root_; v = fresh.next(v))
                fresh.reset(v);
            next_ext |= fresh;
            VertexSet next_closed = closed | g_.neighbors(w);
            sub.set(w);
            extend(sub, std::move(next_ext), next_closed);
            sub.reset(w);
        }
    }

    const Graph& g_;
    const VertexSet& allowed_;
    int root_;
    int min_order_;
    int max_order_;
    int chi_;
    Budget& budget_;
    std::vector<VertexSet> found_;
};

} // namespace

std::vector<VertexSet> enumerate_critical_subgraphs(const Graph& g, int max_order, Execution exec,
                                                    Budget& budget)
{
    if (g.order() > kMaxFullScanOrder && max_order > kMaxEnumerationOrder)
        throw std::invalid_argument("critical subgraph enumeration needs n <= " +
                                    std::to_string(kMaxFullScanOrder) + " or max_order <= " +
                                    std::to_string(kMaxEnumerationOrder));
    if (g.order() == 0)
        return {};
    const int chi = chromatic_number(g, budget).chi;
    if (chi < 1)
        return {};
    const VertexSet core = degree_core(g, chi - 1);
    const std::vector<int> roots = core.members();
    const int cap = std::min(max_order, g.order());

    std::vector<std::vector<VertexSet>> per_root(roots.size());
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < roots.size(); ++i)
            per_root[i] = ConnectedSets(g, core, roots[i], chi, cap, chi, budget).run();
    } else {
        std::exception_ptr error;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(roots.size()); ++i) {
            if (failed.load())
                continue;
            try {
                per_root[i] = ConnectedSets(g, core, roots[i], chi, cap, chi, budget).run();
            } catch (...) {
#pragma omp critical(vstab_critical_error)
                if (!error)
                    error = std::current_exception();
                failed.store(true);
            }
        }
        if (error)
            std::rethrow_exception(error);
    }

    std::vector<VertexSet> out;
    for (auto& v : per_root)
        for (auto& s : v)
            out.push_back(std::move(s));
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
    return out;
}

std::vector<VertexSet> enumerate_critical_subgraphs(const Graph& g, int max_order, Execution exec)
{
    Budget budget;
    return enumerate_critical_subgraphs(g, max_order, exec, budget);
}

namespace {

std::vector<VertexSet> overlap_components(int n, const std::vector<VertexSet>& sets)
{
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    VertexSet covered(n);
    for (const auto& s : sets) {
        const int a = s.first();
        s.for_each([&](int v) { parent[find(v)] = find(a); });
        covered |= s;
    }
    std::vector<VertexSet> comps;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    covered.for_each([&](int v) {
        const int r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(comps.size());
            comps.emplace_back(n);
        }
        comps[slot[r]].set(v);
    });
    return comps;
}

} // namespace

CriticalityReport critical_union_report(const Graph& g, std::optional<int> max_order, Execution exec)
{
    CriticalityReport rep;
    rep.delta = g.max_degree();
    rep.k_delta = rep.delta >= 2 ? k_delta(rep.delta) : 0;
    rep.bound = rep.delta + 1 + rep.k_delta;
    rep.max_order = max_order.value_or(std::min(g.order(), rep.delta + 1));
    Budget budget;
    rep.chi = chromatic_number(g, budget).chi;
    rep.critical_subgraphs = enumerate_critical_subgraphs(g, rep.max_order, exec, budget);
    rep.union_components = overlap_components(g.order(), rep.critical_subgraphs);
    for (const auto& c : rep.union_components)
        rep.bound_satisfied.push_back(c.count() < rep.bound);
    return rep;
}

namespace {

bool transversal_search(const Graph& g, const std::vector<VertexSet>& parts,
                        std::vector<char>& done, VertexSet& chosen, VertexSet& blocked, int left)
{
    if (left == 0)
        return true;
    int best = -1;
    int best_count = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (done[i])
            continue;
        const int c = (parts[i] - blocked).count();
        if (best < 0 || c < best_count) {
            best = static_cast<int>(i);
            best_count = c;
        }
    }
    if (best_count == 0)
        return false;
    const VertexSet usable = parts[best] - blocked;
    done[best] = 1;
    for (int v = usable.first(); v >= 0; v = usable.next(v)) {
        VertexSet saved = blocked;
        chosen.set(v);
        blocked |= g.neighbors(v);
        blocked.set(v);
        if (transversal_search(g, parts, done, chosen, blocked, left - 1))
            return true;
        chosen.reset(v);
        blocked = std::move(saved);
    }
    done[best] = 0;
    return false;
}

} // namespace

std::optional<VertexSet> independent_transversal(const Graph& g, const std::vector<VertexSet>& parts)
{
    VertexSet seen(g.order());
    for (const auto& p : parts) {
        if (p.universe() != g.order())
            throw std::invalid_argument("part universe does not match the graph");
        if (p.intersects(seen))
            throw std::invalid_argument("parts must be pairwise disjoint");
        seen |= p;
    }
    std::vector<char> done(parts.size(), 0);
    VertexSet chosen(g.order());
    VertexSet blocked(g.order());
    if (!transversal_search(g, parts, done, chosen, blocked, static_cast<int>(parts.size())))
        return std::nullopt;
    return chosen;
}

PipelineResult vs_ivs_pipeline(const Graph& g, std::optional<int> max_order, Execution exec)
{
    PipelineResult res;
    auto step = [&](std::string name, bool ok, std::string detail) {
        res.trace.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    Budget budget;
    const auto chi = chromatic_number(g, budget);
    if (!step("chromatic_number", chi.chi >= 2, "chi = " + std::to_string(chi.chi)))
        return res;

    const auto rep = critical_union_report(g, max_order, exec);
    const int r = static_cast<int>(rep.union_components.size());
    {
        std::ostringstream d;
        d << rep.critical_subgraphs.size() << " critical subgraphs of order <= " << rep.max_order
          << ", " << r << " union components";
        if (!step("critical_union", r > 0, d.str()))
            return res;
    }

    PipelineCertificate cert;
    cert.r = r;
    cert.components = rep.union_components;
    cert.coloring = chi.coloring;
    cert.chi_before = chi.chi;
    {
        std::ostringstream d;
        bool ok = true;
        for (std::size_t i = 0; i < cert.components.size(); ++i) {
            const auto& comp = cert.components[i];
            std::vector<int> uses(static_cast<std::size_t>(chi.chi) + 1, 0);
            comp.for_each([&](int v) { ++uses[chi.coloring.colors[v]]; });
            VertexSet s(g.order());
            comp.for_each([&](int v) {
                if (uses[chi.coloring.colors[v]] == 1)
                    s.set(v);
            });
            d << (i ? ", " : "") << "|S_" << i + 1 << "| = " << s.count();
            ok = ok && !s.empty();
            cert.singleton_colored.push_back(std::move(s));
        }
        if (!step("singleton_colors", ok, d.str()))
            return res;
    }

    const auto transversal = independent_transversal(g, cert.singleton_colored);
    if (!step("transversal", transversal.has_value(),
              transversal ? "I = " + to_string(*transversal) : "no independent transversal"))
        return res;
    cert.transversal = *transversal;

    cert.chi_after = chromatic_number(delete_vertices(g, cert.transversal).graph, budget).chi;
    const bool drops = cert.chi_after == cert.chi_before - 1 && is_independent(g, cert.transversal) &&
                       cert.transversal.count() == r;
    if (!step("verify", drops,
              "chi(G - I) = " + std::to_string(cert.chi_after) + ", chi(G) = " +
                  std::to_string(cert.chi_before)))
        return res;
    res.certificate = std::move(cert);
    return res;
}

} // namespace vstab
