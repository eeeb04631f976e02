#ifndef CCW_GENERATORS_HPP
#define CCW_GENERATORS_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ccw/composition.hpp"
#include "ccw/graph.hpp"
#include "ccw/graph_io.hpp"
#include "ccw/layout_io.hpp"
#include "ccw/solvers.hpp"

namespace ccw {

/// Seeded generator with platform-independent integer and Bernoulli draws
/// (the standard distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool bernoulli(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

inline Graph path_graph(int n)
{
    if (n < 1)
        throw InvalidInput("a path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

/// The path on 2t + 1 vertices, whose middle vertex is t.
inline Graph odd_path(int t)
{
    if (t < 1)
        throw InvalidInput("path parameter t must be at least 1");
    return path_graph(2 * t + 1);
}

inline Graph complete_graph(int n)
{
    if (n < 1)
        throw InvalidInput("a complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// K_{1,leaves} with center 0.
inline Graph star_graph(int leaves)
{
    if (leaves < 0)
        throw InvalidInput("leaf count must be nonnegative");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

/// G(n, p): each pair is an edge independently with probability p.
inline Graph random_graph(int n, double p, Rng& rng)
{
    if (n < 1)
        throw InvalidInput("random graph needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput("edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph random_graph(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    return random_graph(n, p, rng);
}

/// Every clique of exactly `k` vertices, each sorted, in lexicographic order.
inline std::vector<VertexSet> cliques_of_size(const Graph& g, int k)
{
    std::vector<VertexSet> out;
    VertexSet current;
    auto extend = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (Vertex v = from; v < g.order(); ++v) {
            bool ok = std::all_of(current.begin(), current.end(), [&](Vertex u) { return g.adjacent(u, v); });
            if (!ok)
                continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    if (k >= 0)
        extend(extend, 0);
    return out;
}

/// Two graphs, a cover of each and the identification of a shared clique.
struct CliqueSumInstance {
    Graph g1;
    OrderedCliqueCover c1;
    Graph g2;
    OrderedCliqueCover c2;
    SharedMap shared;
};

/// Two copies of the path on 2t + 1 vertices glued at their middle
/// vertices, each covered by consecutive pairs {0,1},{2,3},...,{2t}.
inline CliqueSumInstance odd_path_sum(int t)
{
    Graph p = odd_path(t);
    CoverClasses pairs;
    for (Vertex v = 0; v < p.order(); v += 2) {
        if (v + 1 < p.order())
            pairs.push_back({v, v + 1});
        else
            pairs.push_back({v});
    }
    OrderedCliqueCover c(p, pairs);
    return {p, c, p, c, SharedMap{{t, t}}};
}

struct CliqueSumParams {
    int min_vertices = 2;
    int max_vertices = 8;
    double edge_probability = 0.5;
    int min_shared = 1;
    int max_shared = 3;
    /// Redraw instances whose covers both have width 0.
    bool require_positive_width = true;
    int ccw_limit = SolverLimits{}.ccw;
};

inline void validate(const CliqueSumParams& p)
{
    if (p.min_vertices < 1 || p.max_vertices < p.min_vertices)
        throw InvalidInput("vertex range must satisfy 1 <= min <= max");
    if (p.min_shared < 0 || p.max_shared < p.min_shared || p.min_shared > p.max_vertices)
        throw InvalidInput("shared clique size range is invalid");
    if (!(p.edge_probability >= 0.0 && p.edge_probability <= 1.0))
        throw InvalidInput("edge probability must lie in [0, 1]");
}

/// Draws a random clique-sum instance. Each side is G(n, p) with a clique
/// of the chosen shared size; the shared clique is uniform among the
/// cliques of that size and the covers are exact CCW witnesses.
inline CliqueSumInstance random_clique_sum(const CliqueSumParams& params, Rng& rng)
{
    validate(params);
    for (;;) {
        const int k = rng.uniform(params.min_shared, params.max_shared);
        const int lo = std::max(params.min_vertices, std::max(k, 1));
        if (lo > params.max_vertices)
            throw InvalidInput("shared clique does not fit into the vertex range");
        auto draw_side = [&]() -> std::pair<Graph, VertexSet> {
            for (;;) {
                Graph g = random_graph(rng.uniform(lo, params.max_vertices), params.edge_probability, rng);
                auto candidates = cliques_of_size(g, k);
                if (candidates.empty())
                    continue;
                auto pick = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(candidates.size()) - 1))];
                return {g, pick};
            }
        };
        auto [g1, s1] = draw_side();
        auto [g2, s2] = draw_side();
        rng.shuffle(s2);
        SharedMap shared;
        for (std::size_t i = 0; i < s1.size(); ++i)
            shared.emplace_back(s1[i], s2[i]);
        auto r1 = ccw_exact(g1, params.ccw_limit);
        auto r2 = ccw_exact(g2, params.ccw_limit);
        if (params.require_positive_width && r1.value + r2.value == 0)
            continue;
        return {g1, r1.witness, g2, r2.witness, shared};
    }
}

/// Instance file: g1 edge list, c1 cover, g2 edge list, c2 cover, then
/// "shared k" and k lines "u v" (vertex of g1, vertex of g2).
inline void write_instance(std::ostream& out, const CliqueSumInstance& inst)
{
    write_edge_list(out, inst.g1);
    write_cover(out, inst.c1);
    write_edge_list(out, inst.g2);
    write_cover(out, inst.c2);
    out << "shared " << inst.shared.size() << '\n';
    for (auto [a, b] : inst.shared)
        out << a << ' ' << b << '\n';
}

inline SharedMap read_shared_map(std::istream& in)
{
    int k = detail::parse_header(detail::next_nonblank_line(in, "shared header"), "shared");
    SharedMap shared;
    for (int i = 0; i < k; ++i) {
        auto a = detail::checked_int(detail::read_integer(in, "shared vertex"), "shared vertex");
        auto b = detail::checked_int(detail::read_integer(in, "shared vertex"), "shared vertex");
        shared.emplace_back(a, b);
    }
    return shared;
}

inline CliqueSumInstance read_instance(std::istream& in)
{
    Graph g1 = read_edge_list(in);
    OrderedCliqueCover c1 = read_cover(in, g1);
    Graph g2 = read_edge_list(in);
    OrderedCliqueCover c2 = read_cover(in, g2);
    SharedMap shared = read_shared_map(in);
    validate_shared_map(g1, g2, shared);
    return {g1, c1, g2, c2, shared};
}

}  // namespace ccw

#endif
