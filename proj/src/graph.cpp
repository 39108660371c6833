#include "vstab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vstab {

namespace {

std::size_t word_count(int universe)
{
    return static_cast<std::size_t>((universe + 63) / 64);
}

void check_order(int n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    if (n > kMaxVertices)
        throw GraphError("graph has " + std::to_string(n) + " vertices; the limit is " +
                         std::to_string(kMaxVertices));
}

} // namespace

// --- VertexSet ---

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0)
{
    check_order(universe);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
{
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        set(v);
    }
}

VertexSet VertexSet::from_members(int universe, std::span<const int> members)
{
    VertexSet s(universe);
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (universe % 64 != 0)
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

int VertexSet::count() const noexcept
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

int VertexSet::first() const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

int VertexSet::next(int v) const noexcept
{
    int from = v + 1;
    if (from >= universe_)
        return -1;
    std::size_t w = word(from);
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << bit(from));
    while (true) {
        if (bits != 0)
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        if (++w >= words_.size())
            return -1;
        bits = words_[w];
    }
}

int VertexSet::last() const noexcept
{
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i] != 0)
            return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i]));
    return -1;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~o.words_[i];
    return *this;
}

int VertexSet::intersection_count(const VertexSet& o) const noexcept
{
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & o.words_[i]);
    return c;
}

std::strong_ordering lex_compare(const VertexSet& a, const VertexSet& b)
{
    int x = a.first();
    int y = b.first();
    while (x != -1 && y != -1) {
        if (x != y)
            return x <=> y;
        x = a.next(x);
        y = b.next(y);
    }
    if (x == -1 && y == -1)
        return std::strong_ordering::equal;
    return x == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const VertexSet& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](int v) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

// --- Graph ---

Graph::Graph(int n)
{
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

int Graph::size() const noexcept
{
    int twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

int Graph::max_degree() const noexcept
{
    int best = 0;
    for (const auto& row : adj_)
        best = std::max(best, row.count());
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

GraphBuilder::GraphBuilder(int n)
{
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

bool GraphBuilder::add_edge(int u, int v)
{
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge endpoint out of range");
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v))
        return false;
    adj_[u].set(v);
    adj_[v].set(u);
    return true;
}

void GraphBuilder::add_clique(std::span<const int> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            add_edge(vertices[i], vertices[j]);
}

Graph GraphBuilder::build() &&
{
    Graph g;
    g.adj_ = std::move(adj_);
    return g;
}

// --- Coloring / partitions ---

int Coloring::colors_used() const
{
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    int used = 0;
    for (int c : colors)
        if (c >= 1 && c <= k && !seen[c]) {
            seen[c] = 1;
            ++used;
        }
    return used;
}

std::vector<int> Coloring::color_class(int c) const
{
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(colors.size()); ++v)
        if (colors[v] == c)
            out.push_back(v);
    return out;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order())
        return false;
    for (int col : c.colors)
        if (col < 1 || col > c.k)
            return false;
    for (const auto& e : g.edges())
        if (c.colors[e.u] == c.colors[e.v])
            return false;
    return true;
}

std::string validate_clique_partition(const Graph& g, const CliquePartition& p)
{
    VertexSet covered(g.order());
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const auto& part = p.parts[i];
        if (part.universe() != g.order())
            return "part " + std::to_string(i) + " has the wrong universe";
        if (part.empty())
            return "part " + std::to_string(i) + " is empty";
        if (part.intersects(covered))
            return "part " + std::to_string(i) + " overlaps an earlier part";
        if (!is_clique(g, part))
            return "part " + std::to_string(i) + " is not a clique";
        covered |= part;
    }
    if (covered.count() != g.order())
        return "parts do not cover every vertex";
    return {};
}

// --- operators ---

Graph complete_graph(int n)
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph empty_graph(int n)
{
    return Graph(n);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph join(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order();
    const int n2 = g2.order();
    GraphBuilder b(n1 + n2);
    for (const auto& e : g1.edges())
        b.add_edge(e.u, e.v);
    for (const auto& e : g2.edges())
        b.add_edge(n1 + e.u, n1 + e.v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            b.add_edge(u, n1 + v);
    return std::move(b).build();
}

UnionResult disjoint_union(std::span<const Graph> gs)
{
    UnionResult out;
    int total = 0;
    for (const auto& g : gs) {
        out.offsets.push_back(total);
        total += g.order();
    }
    GraphBuilder b(total);
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (const auto& e : gs[i].edges())
            b.add_edge(out.offsets[i] + e.u, out.offsets[i] + e.v);
    out.graph = std::move(b).build();
    return out;
}

Graph blow_up_cycle5(int k)
{
    if (k < 1)
        throw GraphError("clique blow-up of C5 needs k >= 1");
    GraphBuilder b(5 * k);
    for (int p = 0; p < 5; ++p) {
        const int q = (p + 1) % 5;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j)
                b.add_edge(p * k + i, p * k + j);
            for (int j = 0; j < k; ++j)
                b.add_edge(p * k + i, q * k + j);
        }
    }
    return std::move(b).build();
}

Deletion induced_subgraph(const Graph& g, const VertexSet& keep)
{
    if (keep.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    Deletion out;
    out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    keep.for_each([&](int v) {
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    });
    GraphBuilder b(static_cast<int>(out.new_to_old.size()));
    for (int nu = 0; nu < b.order(); ++nu) {
        const int u = out.new_to_old[nu];
        g.neighbors(u).for_each([&](int v) {
            const int nv = out.old_to_new[v];
            if (nv > nu)
                b.add_edge(nu, nv);
        });
    }
    out.graph = std::move(b).build();
    return out;
}

Deletion delete_vertices(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    return induced_subgraph(g, g.all_vertices() - s);
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && (s - g.neighbors(v)).count() != 1)
            ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && g.neighbors(v).intersects(s))
            ok = false;
    });
    return ok;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.set(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grown(g.order());
            frontier.for_each([&](int v) { grown |= g.neighbors(v); });
            grown &= within;
            grown -= comp;
            frontier = std::move(grown);
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    return connected_components(g, g.all_vertices());
}

} // namespace vstab
