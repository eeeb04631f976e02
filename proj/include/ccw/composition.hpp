#ifndef CCW_COMPOSITION_HPP
#define CCW_COMPOSITION_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ccw/graph.hpp"
#include "ccw/graph_io.hpp"
#include "ccw/layout.hpp"
#include "ccw/layout_io.hpp"
#include "ccw/strips.hpp"

namespace ccw {

enum class Source : std::uint8_t { first = 1, second = 2 };

/// An element of an interleaved sequence, remembering which input it came from.
template <typename T>
struct Tagged {
    Source source;
    T item;

    friend bool operator==(const Tagged&, const Tagged&) = default;
};

/// second[0], first[0], second[1], first[1], ... and then whatever remains
/// of the longer input.
template <typename T>
std::vector<Tagged<T>> interleave(std::span<const T> first, std::span<const T> second)
{
    std::vector<Tagged<T>> out;
    out.reserve(first.size() + second.size());
    const std::size_t common = std::min(first.size(), second.size());
    for (std::size_t i = 0; i < common; ++i) {
        out.push_back({Source::second, second[i]});
        out.push_back({Source::first, first[i]});
    }
    for (std::size_t i = common; i < first.size(); ++i)
        out.push_back({Source::first, first[i]});
    for (std::size_t i = common; i < second.size(); ++i)
        out.push_back({Source::second, second[i]});
    return out;
}

template <typename T>
std::vector<Tagged<T>> interleave(const std::vector<T>& first, const std::vector<T>& second)
{
    return interleave(std::span<const T>(first), std::span<const T>(second));
}

/// Intermediate state of the clique-sum cover construction.
struct CompositionTrace {
    CliqueSum sum;
    StripPartition partition1;
    StripPartition partition2;
    /// Interleaved sequence before the shared set is extracted; items are
    /// clique indices into the source cover.
    std::vector<Tagged<std::size_t>> sequence;
    /// The interleaving of the two central strips occupies [block_begin, block_end).
    std::size_t block_begin = 0;
    std::size_t block_end = 0;
    /// Cliques after extraction, in composed numbering, emptied cliques kept.
    CoverClasses extracted;
    std::size_t shared_position = 0;
};

namespace detail {

inline std::vector<std::size_t> strip_indices(const Strip& s)
{
    std::vector<std::size_t> out(s.length);
    for (std::size_t i = 0; i < s.length; ++i)
        out[i] = s.start + i;
    return out;
}

inline std::vector<std::size_t> part_or_empty(const StripPartition& p, std::ptrdiff_t index)
{
    if (index < 0 || static_cast<std::size_t>(index) >= p.parts.size())
        return {};
    return strip_indices(p.parts[static_cast<std::size_t>(index)]);
}

inline void append(std::vector<Tagged<std::size_t>>& out, std::vector<Tagged<std::size_t>> seg)
{
    out.insert(out.end(), seg.begin(), seg.end());
}

inline void require_cover_of(const Graph& g, const OrderedCliqueCover& c, const char* which)
{
    if (!(c.graph() == g))
        throw InvalidInput(std::string("the ") + which + " cover does not cover the " + which + " graph");
}

}  // namespace detail

/// Runs the construction up to (and including) extraction of the shared
/// clique. Requires a nonempty shared set.
inline CompositionTrace trace_composition(const Graph& g1, const OrderedCliqueCover& c1, const Graph& g2,
                                          const OrderedCliqueCover& c2, const SharedMap& shared)
{
    detail::require_cover_of(g1, c1, "first");
    detail::require_cover_of(g2, c2, "second");
    if (shared.empty())
        throw InvalidInput("the construction needs a nonempty shared clique");

    CompositionTrace tr;
    tr.sum = clique_sum_mapped(g1, g2, shared);

    VertexSet s1;
    VertexSet s2;
    for (auto [a, b] : shared) {
        s1.push_back(a);
        s2.push_back(b);
    }
    tr.partition1 = partition_around_strip(c1, locate_enclosing_block(c1, s1));
    tr.partition2 = partition_around_strip(c2, locate_enclosing_block(c2, s2));
    const auto& p1 = tr.partition1;
    const auto& p2 = tr.partition2;
    const auto b1 = static_cast<std::ptrdiff_t>(p1.block_index);
    const auto b2 = static_cast<std::ptrdiff_t>(p2.block_index);

    // Left of the blocks: pair strips at equal distance from their block,
    // emitted from the outermost pair inward. Unpaired strips pass through.
    const auto left = static_cast<std::ptrdiff_t>(std::max(p1.left_count(), p2.left_count()));
    for (std::ptrdiff_t d = left; d >= 1; --d)
        detail::append(tr.sequence, interleave(detail::part_or_empty(p1, b1 - d), detail::part_or_empty(p2, b2 - d)));

    tr.block_begin = tr.sequence.size();
    detail::append(tr.sequence, interleave(detail::part_or_empty(p1, b1), detail::part_or_empty(p2, b2)));
    tr.block_end = tr.sequence.size();

    const auto right = static_cast<std::ptrdiff_t>(std::max(p1.right_count(), p2.right_count()));
    for (std::ptrdiff_t d = 1; d <= right; ++d)
        detail::append(tr.sequence, interleave(detail::part_or_empty(p1, b1 + d), detail::part_or_empty(p2, b2 + d)));

    // Extract the shared clique into its own class in the middle of the
    // central interleaving.
    std::vector<std::uint8_t> is_shared(static_cast<std::size_t>(tr.sum.graph.order()), 0);
    VertexSet shared_class;
    for (auto [a, b] : shared) {
        is_shared[static_cast<std::size_t>(a)] = 1;
        shared_class.push_back(a);
    }
    std::sort(shared_class.begin(), shared_class.end());

    tr.shared_position = tr.block_begin + (tr.block_end - tr.block_begin) / 2;
    for (std::size_t i = 0; i <= tr.sequence.size(); ++i) {
        if (i == tr.shared_position)
            tr.extracted.push_back(shared_class);
        if (i == tr.sequence.size())
            break;
        const auto& [source, index] = tr.sequence[i];
        const auto& members = source == Source::first ? c1.clique(index) : c2.clique(index);
        const auto& image = source == Source::first ? tr.sum.from_first : tr.sum.from_second;
        VertexSet cls;
        for (Vertex v : members) {
            Vertex w = image[static_cast<std::size_t>(v)];
            if (!is_shared[static_cast<std::size_t>(w)])
                cls.push_back(w);
        }
        std::sort(cls.begin(), cls.end());
        tr.extracted.push_back(std::move(cls));
    }
    return tr;
}

/// The composed cover with its width bookkeeping. The cover is kept as raw
/// classes so certificates read from disk can be checked without trusting them.
struct WidthCertificate {
    Graph graph;
    CoverClasses cover;
    int w1 = 0;
    int w2 = 0;
    int bound = 0;
    int achieved = 0;
    /// Set when both input widths are 0 and the bound was raised to 1.
    bool degenerate_bound = false;
};

/// ceil(3/2 * (w1 + w2)).
inline int three_halves_bound(int w1, int w2) { return (3 * (w1 + w2) + 1) / 2; }

/// Largest bound a certificate with input widths w1, w2 may claim.
inline int permitted_bound(int w1, int w2) { return w1 + w2 == 0 ? 1 : three_halves_bound(w1, w2); }

/// Builds an ordered clique cover of the clique sum from covers of both
/// summands. With an empty shared set the covers are concatenated.
inline WidthCertificate compose_covers(const Graph& g1, const OrderedCliqueCover& c1, const Graph& g2,
                                       const OrderedCliqueCover& c2, const SharedMap& shared)
{
    detail::require_cover_of(g1, c1, "first");
    detail::require_cover_of(g2, c2, "second");

    WidthCertificate cert;
    cert.w1 = cover_width(c1);
    cert.w2 = cover_width(c2);

    if (shared.empty()) {
        auto sum = clique_sum_mapped(g1, g2, shared);
        cert.graph = sum.graph;
        cert.cover = c1.cliques();
        for (const auto& cls : c2.cliques()) {
            VertexSet mapped;
            for (Vertex v : cls)
                mapped.push_back(sum.from_second[static_cast<std::size_t>(v)]);
            cert.cover.push_back(std::move(mapped));
        }
        cert.bound = std::max(cert.w1, cert.w2);
    } else {
        auto tr = trace_composition(g1, c1, g2, c2, shared);
        cert.graph = tr.sum.graph;
        for (auto& cls : tr.extracted)
            if (!cls.empty())
                cert.cover.push_back(std::move(cls));
        if (cert.w1 + cert.w2 == 0) {
            cert.bound = 1;
            cert.degenerate_bound = true;
        } else {
            cert.bound = three_halves_bound(cert.w1, cert.w2);
        }
    }
    cert.achieved = cover_width(OrderedCliqueCover(cert.graph, cert.cover));
    return cert;
}

/// Recomputes everything a certificate claims from its graph and cover.
inline CoverCheck verify_certificate(const WidthCertificate& cert)
{
    if (auto check = validate_cover(cert.graph, cert.cover); !check)
        return check;
    if (cert.w1 < 0 || cert.w2 < 0)
        return {false, "input widths must be nonnegative"};
    const int width = detail::sequence_width(cert.graph, cert.cover);
    if (width != cert.achieved)
        return {false, "achieved width is " + std::to_string(width) + ", certificate states " +
                           std::to_string(cert.achieved)};
    if (width > cert.bound)
        return {false, "bound violated: width " + std::to_string(width) + " exceeds claimed bound " +
                           std::to_string(cert.bound)};
    if (cert.bound > permitted_bound(cert.w1, cert.w2))
        return {false, "claimed bound " + std::to_string(cert.bound) + " exceeds ceil(3/2*(w1+w2)) = " +
                           std::to_string(permitted_bound(cert.w1, cert.w2))};
    return {};
}

enum class ClaimStatus { holds, vacuous, violated };

struct ClaimViolation {
    Source source;
    Edge edge;  // in the numbering of the source graph
    std::size_t r = 0;
    std::size_t t = 0;
};

struct ClaimCheck {
    ClaimStatus status = ClaimStatus::vacuous;
    int limit = 0;  // w1 + w2 - 1
    std::optional<ClaimViolation> violation;
};

/// Checks that in the interleaved sequence (before extraction) every edge of
/// either summand joins cliques of its own cover at most w1 + w2 - 1 apart.
/// Vacuous when both widths are 0 or nothing is shared.
inline ClaimCheck edge_span_claim_check(const Graph& g1, const OrderedCliqueCover& c1, const Graph& g2,
                                        const OrderedCliqueCover& c2, const SharedMap& shared)
{
    detail::require_cover_of(g1, c1, "first");
    detail::require_cover_of(g2, c2, "second");
    validate_shared_map(g1, g2, shared);
    ClaimCheck out;
    const int w1 = cover_width(c1);
    const int w2 = cover_width(c2);
    out.limit = w1 + w2 - 1;
    if (w1 + w2 == 0 || shared.empty())
        return out;

    auto tr = trace_composition(g1, c1, g2, c2, shared);
    std::vector<std::size_t> pos1(c1.size());
    std::vector<std::size_t> pos2(c2.size());
    for (std::size_t i = 0; i < tr.sequence.size(); ++i) {
        const auto& [source, index] = tr.sequence[i];
        (source == Source::first ? pos1 : pos2)[index] = i;
    }
    auto scan = [&](Source source, const Graph& g, const OrderedCliqueCover& c,
                    const std::vector<std::size_t>& pos) -> bool {
        for (auto e : g.edges()) {
            auto r = pos[c.clique_of(e.first)];
            auto t = pos[c.clique_of(e.second)];
            auto span = r > t ? r - t : t - r;
            if (static_cast<long long>(span) > out.limit) {
                out.violation = ClaimViolation{source, e, r, t};
                return false;
            }
        }
        return true;
    };
    out.status = scan(Source::first, g1, c1, pos1) && scan(Source::second, g2, c2, pos2) ? ClaimStatus::holds
                                                                                          : ClaimStatus::violated;
    return out;
}

/// Certificate file: composed edge list, cover block, then "w1 k", "w2 k",
/// "bound k", "achieved k".
inline void write_certificate(std::ostream& out, const WidthCertificate& cert)
{
    write_edge_list(out, cert.graph);
    write_cover(out, cert.cover);
    out << "w1 " << cert.w1 << '\n'
        << "w2 " << cert.w2 << '\n'
        << "bound " << cert.bound << '\n'
        << "achieved " << cert.achieved << '\n';
}

inline WidthCertificate read_certificate(std::istream& in)
{
    WidthCertificate cert;
    cert.graph = read_edge_list(in);
    cert.cover = read_cover_classes(in);
    auto field = [&](const char* name) {
        std::string line = detail::next_nonblank_line(in, name);
        std::istringstream ls(line);
        detail::expect_keyword(ls, name);
        auto v = detail::read_integer(ls, name);
        if (v < 0 || v > (1LL << 30))
            throw InvalidInput(std::string(name) + " out of range");
        return static_cast<int>(v);
    };
    cert.w1 = field("w1");
    cert.w2 = field("w2");
    cert.bound = field("bound");
    cert.achieved = field("achieved");
    cert.degenerate_bound = cert.w1 + cert.w2 == 0 && cert.bound == 1;
    return cert;
}

}  // namespace ccw

#endif
