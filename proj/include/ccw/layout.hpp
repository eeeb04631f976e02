#ifndef CCW_LAYOUT_HPP
#define CCW_LAYOUT_HPP

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "ccw/graph.hpp"

namespace ccw {

/// A permutation of the vertices together with its inverse.
class LinearOrdering {
public:
    LinearOrdering() = default;

    explicit LinearOrdering(std::vector<Vertex> order) : order_(std::move(order))
    {
        position_.assign(order_.size(), -1);
        const auto n = static_cast<Vertex>(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            Vertex v = order_[i];
            if (v < 0 || v >= n)
                throw InvalidInput("ordering entry " + std::to_string(v) + " is outside [0," +
                                   std::to_string(n) + ")");
            auto& slot = position_[static_cast<std::size_t>(v)];
            if (slot >= 0)
                throw InvalidInput("ordering lists vertex " + std::to_string(v) + " twice");
            slot = static_cast<Vertex>(i);
        }
    }

    static LinearOrdering identity(int n)
    {
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            order[static_cast<std::size_t>(i)] = i;
        return LinearOrdering(std::move(order));
    }

    std::size_t size() const { return order_.size(); }
    const std::vector<Vertex>& order() const { return order_; }
    Vertex at(std::size_t i) const { return order_[i]; }
    Vertex position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

    friend bool operator==(const LinearOrdering&, const LinearOrdering&) = default;

private:
    std::vector<Vertex> order_;
    std::vector<Vertex> position_;
};

/// Largest position gap over the edges of `g`; 0 when `g` has no edges.
inline int ordering_width(const Graph& g, const LinearOrdering& l)
{
    if (static_cast<int>(l.size()) != g.order())
        throw InvalidInput("ordering has " + std::to_string(l.size()) + " entries for a graph on " +
                           std::to_string(g.order()) + " vertices");
    int width = 0;
    for (auto [u, v] : g.edges())
        width = std::max(width, std::abs(l.position(u) - l.position(v)));
    return width;
}

/// Ordered list of vertex classes, not yet known to be a clique cover.
using CoverClasses = std::vector<VertexSet>;

struct CoverCheck {
    bool valid = true;
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// Checks that `classes` partition V(g) into nonempty cliques. The first
/// problem found is reported in `reason`.
inline CoverCheck validate_cover(const Graph& g, const CoverClasses& classes)
{
    std::vector<int> seen(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        if (cls.empty())
            return {false, "class " + std::to_string(i) + " is empty"};
        for (Vertex v : cls) {
            if (!g.contains(v))
                return {false, "class " + std::to_string(i) + " contains vertex " + std::to_string(v) +
                                   " outside the graph"};
            auto& owner = seen[static_cast<std::size_t>(v)];
            if (owner >= 0)
                return {false, "vertex " + std::to_string(v) + " is covered more than once (classes " +
                                   std::to_string(owner) + " and " + std::to_string(i) + ")"};
            owner = static_cast<int>(i);
        }
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (!g.adjacent(cls[a], cls[b]))
                    return {false, "class " + std::to_string(i) + " is not a clique (" +
                                       std::to_string(cls[a]) + " and " + std::to_string(cls[b]) +
                                       " are not adjacent)"};
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (seen[static_cast<std::size_t>(v)] < 0)
            return {false, "vertex " + std::to_string(v) + " is uncovered"};
    return {};
}

namespace detail {

// Width of an ordered sequence of disjoint classes; empty classes are
// allowed and still occupy an index. Vertices in no class are ignored.
inline int sequence_width(const Graph& g, const CoverClasses& classes)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i])
            index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    int width = 0;
    for (auto [u, v] : g.edges()) {
        int a = index[static_cast<std::size_t>(u)];
        int b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0)
            width = std::max(width, std::abs(a - b));
    }
    return width;
}

}  // namespace detail

/// An ordered partition of V(G) into cliques, bound to the graph it covers.
/// Each class is stored in increasing vertex order.
class OrderedCliqueCover {
public:
    OrderedCliqueCover(Graph g, CoverClasses cliques) : graph_(std::move(g)), cliques_(std::move(cliques))
    {
        for (auto& c : cliques_)
            std::sort(c.begin(), c.end());
        if (auto check = validate_cover(graph_, cliques_); !check)
            throw InvalidInput("invalid clique cover: " + check.reason);
        owner_.assign(static_cast<std::size_t>(graph_.order()), 0);
        for (std::size_t i = 0; i < cliques_.size(); ++i)
            for (Vertex v : cliques_[i])
                owner_[static_cast<std::size_t>(v)] = i;
    }

    const Graph& graph() const { return graph_; }
    const CoverClasses& cliques() const { return cliques_; }
    std::size_t size() const { return cliques_.size(); }
    const VertexSet& clique(std::size_t i) const { return cliques_[i]; }

    /// Index of the clique containing `v`.
    std::size_t clique_of(Vertex v) const { return owner_[static_cast<std::size_t>(v)]; }

    friend bool operator==(const OrderedCliqueCover& a, const OrderedCliqueCover& b)
    {
        return a.graph_ == b.graph_ && a.cliques_ == b.cliques_;
    }

private:
    Graph graph_;
    CoverClasses cliques_;
    std::vector<std::size_t> owner_;
};

/// Largest clique-index gap over edges; 0 when every edge lies inside a clique.
inline int cover_width(const OrderedCliqueCover& c)
{
    int width = 0;
    for (auto [u, v] : c.graph().edges()) {
        auto a = static_cast<int>(c.clique_of(u));
        auto b = static_cast<int>(c.clique_of(v));
        width = std::max(width, std::abs(a - b));
    }
    return width;
}

/// Quotient of the cover: one vertex per clique, in cover order, adjacent
/// when some edge of the context graph joins the two cliques.
inline Graph cover_graph(const OrderedCliqueCover& c)
{
    std::vector<Edge> edges;
    for (auto [u, v] : c.graph().edges()) {
        auto a = static_cast<Vertex>(c.clique_of(u));
        auto b = static_cast<Vertex>(c.clique_of(v));
        if (a != b)
            edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph::from_edges(static_cast<int>(c.size()), edges);
}

}  // namespace ccw

#endif
