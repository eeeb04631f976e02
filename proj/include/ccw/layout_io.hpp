#ifndef CCW_LAYOUT_IO_HPP
#define CCW_LAYOUT_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ccw/graph_io.hpp"
#include "ccw/layout.hpp"

namespace ccw {

namespace detail {

inline std::string next_nonblank_line(std::istream& in, const char* what)
{
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return line;
    throw InvalidInput(std::string("unexpected end of input, expected ") + what);
}

// Parses "<keyword> <count>" from a single header line.
inline int parse_header(const std::string& line, const std::string& keyword)
{
    std::istringstream in(line);
    expect_keyword(in, keyword);
    int count = checked_int(read_integer(in, "count"), "count");
    std::string rest;
    if (in >> rest)
        throw InvalidInput("trailing text after '" + keyword + "' header: " + rest);
    return count;
}

inline std::vector<Vertex> parse_vertex_line(const std::string& line)
{
    std::istringstream in(line);
    std::vector<Vertex> out;
    long long v = 0;
    while (in >> v) {
        if (v < 0 || v > (1LL << 30))
            throw InvalidInput("vertex index out of range: " + std::to_string(v));
        out.push_back(static_cast<Vertex>(v));
    }
    if (!in.eof())
        throw InvalidInput("malformed vertex list: '" + line + "'");
    return out;
}

inline void write_vertex_line(std::ostream& out, std::span<const Vertex> vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out << ' ';
        out << vs[i];
    }
    out << '\n';
}

}  // namespace detail

/// Cover format: "cover K", then K lines of increasing vertex indices, one
/// clique per line in cover order.
inline CoverClasses read_cover_classes(std::istream& in)
{
    int k = detail::parse_header(detail::next_nonblank_line(in, "cover header"), "cover");
    CoverClasses classes;
    classes.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw InvalidInput("cover ended after " + std::to_string(i) + " of " + std::to_string(k) +
                               " cliques");
        auto members = detail::parse_vertex_line(line);
        if (members.empty())
            throw InvalidInput("cover clique " + std::to_string(i) + " is empty");
        classes.push_back(std::move(members));
    }
    return classes;
}

inline OrderedCliqueCover read_cover(std::istream& in, const Graph& g)
{
    return OrderedCliqueCover(g, read_cover_classes(in));
}

inline void write_cover(std::ostream& out, const CoverClasses& classes)
{
    out << "cover " << classes.size() << '\n';
    for (const auto& c : classes)
        detail::write_vertex_line(out, c);
}

inline void write_cover(std::ostream& out, const OrderedCliqueCover& c) { write_cover(out, c.cliques()); }

/// Ordering format: "ordering n", then one line with the vertices in order.
inline LinearOrdering read_ordering(std::istream& in)
{
    int n = detail::parse_header(detail::next_nonblank_line(in, "ordering header"), "ordering");
    std::vector<Vertex> order;
    if (n > 0)
        order = detail::parse_vertex_line(detail::next_nonblank_line(in, "ordering entries"));
    if (static_cast<int>(order.size()) != n)
        throw InvalidInput("ordering header announces " + std::to_string(n) + " entries, found " +
                           std::to_string(order.size()));
    return LinearOrdering(std::move(order));
}

inline void write_ordering(std::ostream& out, const LinearOrdering& l)
{
    out << "ordering " << l.size() << '\n';
    if (l.size() > 0)
        detail::write_vertex_line(out, l.order());
}

/// Reads a "value k" result header.
inline int read_value_header(std::istream& in)
{
    return detail::parse_header(detail::next_nonblank_line(in, "value header"), "value");
}

}  // namespace ccw

#endif
