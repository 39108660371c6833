#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vstab {

/// Hard cap on vertex count; desk-scale instances stay far below it.
inline constexpr int kMaxVertices = 4096;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-universe bitset over 0..size-1, stored in 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    static VertexSet from_members(int universe, std::span<const int> members);
    static VertexSet full(int universe);

    int universe() const noexcept { return universe_; }
    bool test(int v) const noexcept { return (words_[word(v)] >> bit(v)) & 1U; }
    void set(int v) noexcept { words_[word(v)] |= mask(v); }
    void reset(int v) noexcept { words_[word(v)] &= ~mask(v); }

    int count() const noexcept;
    bool empty() const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;
    /// Smallest member, or -1.
    int first() const noexcept;
    /// Smallest member strictly greater than v, or -1.
    int next(int v) const noexcept;
    /// Largest member, or -1.
    int last() const noexcept;

    std::vector<int> members() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    VertexSet& operator&=(const VertexSet& o) noexcept;
    VertexSet& operator|=(const VertexSet& o) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept;
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    /// Count of members of a & b without materializing it.
    int intersection_count(const VertexSet& o) const noexcept;

    bool operator==(const VertexSet& o) const = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    static int word(int v) noexcept { return v >> 6; }
    static int bit(int v) noexcept { return v & 63; }
    static std::uint64_t mask(int v) noexcept { return std::uint64_t{1} << bit(v); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Orders sets by their sorted member lists, lexicographically.
std::strong_ordering lex_compare(const VertexSet& a, const VertexSet& b);
std::string to_string(const VertexSet& s);

struct Edge {
    int u;
    int v;
    auto operator<=>(const Edge&) const = default;
};

class GraphBuilder;

/// Undirected simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept; // edge count
    bool adjacent(int u, int v) const noexcept { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return adj_[v].count(); }
    int max_degree() const noexcept;
    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    bool operator==(const Graph& o) const = default;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    int order() const noexcept { return static_cast<int>(adj_.size()); }
    /// Adds u-v; rejects self-loops and out-of-range endpoints. Returns false if already present.
    bool add_edge(int u, int v);
    void add_clique(std::span<const int> vertices);
    Graph build() &&;

private:
    std::vector<VertexSet> adj_;
};

/// Vertex -> color in 1..k; proper with respect to the graph it was built for.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    int colors_used() const;
    /// Members of color c.
    std::vector<int> color_class(int c) const;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Pairwise disjoint cliques covering every vertex exactly once.
struct CliquePartition {
    std::vector<VertexSet> parts;
};

/// Empty string when valid, otherwise the first violation found.
std::string validate_clique_partition(const Graph& g, const CliquePartition& p);

// --- operators ---

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
/// g1 then g2, plus every edge between them.
Graph join(const Graph& g1, const Graph& g2);

struct UnionResult {
    Graph graph;
    std::vector<int> offsets;
};
UnionResult disjoint_union(std::span<const Graph> gs);

/// Each vertex of C5 replaced by K_k; part P_i is [i*k, (i+1)*k).
Graph blow_up_cycle5(int k);

struct Deletion {
    Graph graph;
    std::vector<int> old_to_new; // -1 for deleted vertices
    std::vector<int> new_to_old;
};
Deletion delete_vertices(const Graph& g, const VertexSet& s);
/// Subgraph induced by `keep`, with index maps.
Deletion induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Connected components of the subgraph induced by `within`, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> connected_components(const Graph& g);

} // namespace vstab
