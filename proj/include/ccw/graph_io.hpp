#ifndef CCW_GRAPH_IO_HPP
#define CCW_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ccw/graph.hpp"

namespace ccw {

namespace detail {

inline long long read_integer(std::istream& in, const char* what)
{
    long long value = 0;
    if (!(in >> value))
        throw InvalidInput(std::string("expected ") + what);
    return value;
}

inline void expect_keyword(std::istream& in, const std::string& keyword)
{
    std::string token;
    if (!(in >> token) || token != keyword)
        throw InvalidInput("expected '" + keyword + "', found '" + token + "'");
}

inline int checked_int(long long value, const char* what)
{
    if (value < 0 || value > (1LL << 30))
        throw InvalidInput(std::string(what) + " out of range: " + std::to_string(value));
    return static_cast<int>(value);
}

}  // namespace detail

/// Edge-list text format: "n m" then m lines "u v", 0-based.
inline Graph read_edge_list(std::istream& in)
{
    int n = detail::checked_int(detail::read_integer(in, "vertex count"), "vertex count");
    int m = detail::checked_int(detail::read_integer(in, "edge count"), "edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto u = detail::read_integer(in, "edge endpoint");
        auto v = detail::read_integer(in, "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge " + std::to_string(i) + " has an endpoint outside [0," +
                               std::to_string(n) + ")");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(n, edges);
}

/// Writes edges as "u v" with u < v, sorted lexicographically.
inline void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

inline Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace ccw

#endif
