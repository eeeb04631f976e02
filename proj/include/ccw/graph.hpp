#ifndef CCW_GRAPH_HPP
#define CCW_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccw/errors.hpp"

namespace ccw {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Copies share the underlying storage, so passing graphs by value is cheap
/// and a graph can be read from several threads at once.
class Graph {
public:
    Graph() : data_(std::make_shared<const Data>()) {}

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints throw.
    static Graph from_edges(int n, std::span<const Edge> edges)
    {
        if (n < 0)
            throw InvalidInput("vertex count must be nonnegative");
        Data d;
        d.n = n;
        d.adj.resize(static_cast<std::size_t>(n));
        d.matrix.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") has an endpoint outside [0," + std::to_string(n) + ")");
            if (u == v)
                throw InvalidInput("self-loop at vertex " + std::to_string(u));
            auto& cell = d.matrix[d.index(u, v)];
            if (cell)
                continue;
            cell = 1;
            d.matrix[d.index(v, u)] = 1;
            d.adj[static_cast<std::size_t>(u)].push_back(v);
            d.adj[static_cast<std::size_t>(v)].push_back(u);
            ++d.m;
        }
        for (auto& nbrs : d.adj)
            std::sort(nbrs.begin(), nbrs.end());
        Graph g;
        g.data_ = std::make_shared<const Data>(std::move(d));
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return data_->n; }
    std::size_t edge_count() const { return data_->m; }
    bool contains(Vertex v) const { return v >= 0 && v < data_->n; }

    bool adjacent(Vertex u, Vertex v) const { return data_->matrix[data_->index(u, v)] != 0; }

    std::span<const Vertex> neighbors(Vertex v) const { return data_->adj[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const
    {
        int best = 0;
        for (Vertex v = 0; v < order(); ++v)
            best = std::max(best, degree(v));
        return best;
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.data_ == b.data_ || (a.data_->n == b.data_->n && a.data_->adj == b.data_->adj);
    }

private:
    struct Data {
        int n = 0;
        std::size_t m = 0;
        std::vector<std::vector<Vertex>> adj;
        std::vector<std::uint8_t> matrix;

        std::size_t index(Vertex u, Vertex v) const
        {
            return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
        }
    };

    std::shared_ptr<const Data> data_;
};

inline void require_vertices(const Graph& g, std::span<const Vertex> s)
{
    for (Vertex v : s)
        if (!g.contains(v))
            throw InvalidInput("vertex " + std::to_string(v) + " is not in a graph on " +
                               std::to_string(g.order()) + " vertices");
}

/// True iff every distinct pair of `s` is adjacent. Empty sets and singletons are cliques.
inline bool is_clique(const Graph& g, std::span<const Vertex> s)
{
    require_vertices(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && !g.adjacent(s[i], s[j]))
                return false;
    return true;
}

inline bool is_clique(const Graph& g, std::initializer_list<Vertex> s)
{
    return is_clique(g, std::span<const Vertex>(s.begin(), s.size()));
}

/// Identification of vertices for a clique sum: each pair maps a vertex of
/// the first graph onto a vertex of the second.
using SharedMap = std::vector<std::pair<Vertex, Vertex>>;

/// A clique sum together with the vertex maps into the composed graph.
struct CliqueSum {
    Graph graph;
    std::vector<Vertex> from_first;   // g1 vertex -> composed vertex (identity)
    std::vector<Vertex> from_second;  // g2 vertex -> composed vertex
};

inline void validate_shared_map(const Graph& g1, const Graph& g2, const SharedMap& shared)
{
    VertexSet left;
    VertexSet right;
    for (auto [a, b] : shared) {
        if (!g1.contains(a))
            throw InvalidInput("shared vertex " + std::to_string(a) + " is not in the first graph");
        if (!g2.contains(b))
            throw InvalidInput("shared vertex " + std::to_string(b) + " is not in the second graph");
        left.push_back(a);
        right.push_back(b);
    }
    auto has_duplicate = [](VertexSet s) {
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) != s.end();
    };
    if (has_duplicate(left) || has_duplicate(right))
        throw InvalidInput("shared vertex map is not injective");
    if (!is_clique(g1, left))
        throw InvalidInput("shared set is not a clique in the first graph");
    if (!is_clique(g2, right))
        throw InvalidInput("shared set is not a clique in the second graph");
}

/// Glues g1 and g2 along the identified clique. The vertex set is the union
/// of both vertex sets: g1 keeps its numbering and the unshared vertices of
/// g2 are appended in g2 order. An empty map yields the disjoint union.
inline CliqueSum clique_sum_mapped(const Graph& g1, const Graph& g2, const SharedMap& shared)
{
    validate_shared_map(g1, g2, shared);

    CliqueSum out;
    out.from_first.resize(static_cast<std::size_t>(g1.order()));
    for (Vertex v = 0; v < g1.order(); ++v)
        out.from_first[static_cast<std::size_t>(v)] = v;

    out.from_second.assign(static_cast<std::size_t>(g2.order()), -1);
    for (auto [a, b] : shared)
        out.from_second[static_cast<std::size_t>(b)] = a;
    Vertex next = g1.order();
    for (auto& image : out.from_second)
        if (image < 0)
            image = next++;

    std::vector<Edge> edges = g1.edges();
    for (auto [u, v] : g2.edges())
        edges.emplace_back(out.from_second[static_cast<std::size_t>(u)],
                           out.from_second[static_cast<std::size_t>(v)]);
    out.graph = Graph::from_edges(next, edges);
    return out;
}

inline Graph clique_sum(const Graph& g1, const Graph& g2, const SharedMap& shared)
{
    return clique_sum_mapped(g1, g2, shared).graph;
}

namespace detail {

// Branch and bound maximum clique over an abstract vertex set 0..k-1.
// `adj(i, j)` reports adjacency; the candidate-size bound prunes.
template <typename Adjacent>
int max_clique_size(int k, Adjacent adj)
{
    int best = 0;
    std::vector<int> initial(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        initial[static_cast<std::size_t>(i)] = i;

    auto expand = [&](auto&& self, int size, std::vector<int> candidates) -> void {
        if (candidates.empty()) {
            best = std::max(best, size);
            return;
        }
        while (!candidates.empty()) {
            if (size + static_cast<int>(candidates.size()) <= best)
                return;
            int v = candidates.back();
            candidates.pop_back();
            std::vector<int> next;
            next.reserve(candidates.size());
            for (int u : candidates)
                if (adj(v, u))
                    next.push_back(u);
            self(self, size + 1, std::move(next));
        }
    };
    expand(expand, 0, std::move(initial));
    return best;
}

}  // namespace detail

/// Size of a largest clique; 0 for the graph with no vertices.
inline int clique_number(const Graph& g)
{
    return detail::max_clique_size(g.order(), [&](int u, int v) { return g.adjacent(u, v); });
}

/// Largest number of leaves of an induced star: the maximum, over all
/// vertices, of the independence number of the open neighborhood.
/// Exact search; intended for neighborhoods of up to about 25 vertices.
inline int star_number(const Graph& g)
{
    if (g.order() == 0)
        throw InvalidInput("star number is undefined for the empty graph");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        if (static_cast<int>(nbrs.size()) <= best)
            continue;
        int leaves = detail::max_clique_size(static_cast<int>(nbrs.size()), [&](int i, int j) {
            return !g.adjacent(nbrs[static_cast<std::size_t>(i)], nbrs[static_cast<std::size_t>(j)]);
        });
        best = std::max(best, leaves);
    }
    return best;
}

}  // namespace ccw

#endif
