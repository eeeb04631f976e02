#ifndef CCW_STRIPS_HPP
#define CCW_STRIPS_HPP

#include <algorithm>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ccw/layout.hpp"

namespace ccw {

/// A run of consecutive cliques [start, start + length) of an ordered cover.
struct Strip {
    std::size_t start = 0;
    std::size_t length = 0;

    std::size_t end() const { return start + length; }
    friend bool operator==(const Strip&, const Strip&) = default;
};

inline std::ostream& operator<<(std::ostream& out, const Strip& s)
{
    return out << '[' << s.start << ',' << s.end() << ')';
}

/// Partition of a cover into strips around a central strip. Interior parts
/// are blocks of `block_size` cliques; the first and last parts hold at
/// most `block_size` cliques. Empty strips are omitted.
struct StripPartition {
    std::vector<Strip> parts;
    std::size_t block_index = 0;
    std::size_t block_size = 1;

    const Strip& block() const { return parts[block_index]; }
    std::size_t left_count() const { return block_index; }
    std::size_t right_count() const { return parts.size() - block_index - 1; }
};

inline std::ostream& operator<<(std::ostream& out, const StripPartition& p)
{
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            out << ' ';
        if (i == p.block_index)
            out << '*';
        out << p.parts[i];
    }
    return out;
}

/// Number of cliques in a block: the cover width, or 1 when the width is 0.
inline std::size_t block_size(const OrderedCliqueCover& c)
{
    return static_cast<std::size_t>(std::max(1, cover_width(c)));
}

/// Tiles the cover around `b`. The central strip may be longer than a
/// block (see `locate_enclosing_block`); `partition_around_block` is the
/// strict form.
inline StripPartition partition_around_strip(const OrderedCliqueCover& c, Strip b)
{
    const std::size_t total = c.size();
    const std::size_t w = block_size(c);
    if (b.length == 0 || b.end() > total)
        throw InvalidInput("strip [" + std::to_string(b.start) + "," + std::to_string(b.end()) +
                           ") does not lie within a cover of " + std::to_string(total) + " cliques");
    if (b.length < w)
        throw InvalidInput("central strip has " + std::to_string(b.length) + " cliques, a block needs " +
                           std::to_string(w));

    StripPartition p;
    p.block_size = w;
    // Left prefix: k = p*w + r, first the remainder strip, then blocks.
    const std::size_t r = b.start % w;
    if (r > 0)
        p.parts.push_back({0, r});
    for (std::size_t s = r; s < b.start; s += w)
        p.parts.push_back({s, w});
    p.block_index = p.parts.size();
    p.parts.push_back(b);
    for (std::size_t s = b.end(); s < total; s += w)
        p.parts.push_back({s, std::min(w, total - s)});
    return p;
}

inline StripPartition partition_around_block(const OrderedCliqueCover& c, Strip b)
{
    const std::size_t w = block_size(c);
    if (b.length != w)
        throw InvalidInput("strip has " + std::to_string(b.length) + " cliques but a block has " +
                           std::to_string(w));
    return partition_around_strip(c, b);
}

inline std::size_t strip_distance(const StripPartition& p, std::size_t i, std::size_t j)
{
    if (i >= p.parts.size() || j >= p.parts.size())
        throw InvalidInput("strip index out of range for a partition of " + std::to_string(p.parts.size()) +
                           " parts");
    return i > j ? i - j : j - i;
}

/// Window of cliques containing every clique that meets `s`, grown to at
/// least the block size: rightward first, leftward when the right end of
/// the cover is reached. Because `s` is a clique the window needs at most
/// one clique more than a block.
inline Strip locate_enclosing_block(const OrderedCliqueCover& c, std::span<const Vertex> s)
{
    if (s.empty())
        throw InvalidInput("cannot locate a block for an empty vertex set");
    if (!is_clique(c.graph(), s))
        throw InvalidInput("vertex set is not a clique");
    std::size_t lo = c.size();
    std::size_t hi = 0;
    for (Vertex v : s) {
        lo = std::min(lo, c.clique_of(v));
        hi = std::max(hi, c.clique_of(v));
    }
    const std::size_t length = std::max(block_size(c), hi - lo + 1);
    std::size_t start = lo;
    if (start + length > c.size())
        start = c.size() - length;
    return {start, length};
}

/// True when no edge joins a clique left of `s` to a clique right of `s`.
inline bool separates(const OrderedCliqueCover& c, Strip s)
{
    for (auto [u, v] : c.graph().edges()) {
        auto a = c.clique_of(u);
        auto b = c.clique_of(v);
        if (a > b)
            std::swap(a, b);
        if (a < s.start && b >= s.end())
            return false;
    }
    return true;
}

}  // namespace ccw

#endif
