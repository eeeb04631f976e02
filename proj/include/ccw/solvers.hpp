#ifndef CCW_SOLVERS_HPP
#define CCW_SOLVERS_HPP

#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccw/graph.hpp"
#include "ccw/layout.hpp"
#include "ccw/layout_io.hpp"

namespace ccw {

/// Vertex-count limits above which the exact solvers refuse to run.
struct SolverLimits {
    int bandwidth = 12;
    int ccw = 9;
};

struct BandwidthResult {
    int value = 0;
    LinearOrdering witness;
};

struct CcwResult {
    int value = 0;
    OrderedCliqueCover witness;
};

namespace detail {

// Decides whether `g` has an ordering of width <= k and, if so, finds the
// lexicographically smallest one. Vertices are placed left to right in
// increasing index order. Each unplaced vertex carries a deadline, the last
// position compatible with its placed neighbors; a prefix is abandoned when
// the deadlines cannot all be met (earliest-deadline-first counting).
class BandwidthSearch {
public:
    BandwidthSearch(const Graph& g, int k)
        : g_(g),
          k_(k),
          n_(g.order()),
          deadline_(static_cast<std::size_t>(n_), n_ - 1),
          placed_(static_cast<std::size_t>(n_), 0),
          counts_(static_cast<std::size_t>(n_), 0)
    {
        order_.reserve(static_cast<std::size_t>(n_));
    }

    std::optional<std::vector<Vertex>> run()
    {
        if (place(0))
            return order_;
        return std::nullopt;
    }

private:
    bool place(int pos)
    {
        if (pos == n_)
            return true;
        for (Vertex v = 0; v < n_; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (placed_[vi] || deadline_[vi] < pos)
                continue;
            placed_[vi] = 1;
            order_.push_back(v);
            const std::size_t mark = trail_.size();
            const int limit = pos + k_;
            for (Vertex u : g_.neighbors(v)) {
                auto ui = static_cast<std::size_t>(u);
                if (!placed_[ui] && deadline_[ui] > limit) {
                    trail_.emplace_back(u, deadline_[ui]);
                    deadline_[ui] = limit;
                }
            }
            if (deadlines_feasible(pos) && place(pos + 1))
                return true;
            while (trail_.size() > mark) {
                auto [u, d] = trail_.back();
                deadline_[static_cast<std::size_t>(u)] = d;
                trail_.pop_back();
            }
            order_.pop_back();
            placed_[vi] = 0;
        }
        return false;
    }

    // Positions 0..pos are filled.
    bool deadlines_feasible(int pos)
    {
        std::fill(counts_.begin(), counts_.end(), 0);
        for (Vertex u = 0; u < n_; ++u) {
            auto ui = static_cast<std::size_t>(u);
            if (placed_[ui])
                continue;
            if (deadline_[ui] <= pos)
                return false;
            ++counts_[static_cast<std::size_t>(deadline_[ui])];
        }
        int due = 0;
        for (int d = pos + 1; d < n_; ++d) {
            due += counts_[static_cast<std::size_t>(d)];
            if (due > d - pos)
                return false;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    int n_;
    std::vector<int> deadline_;
    std::vector<std::uint8_t> placed_;
    std::vector<int> counts_;
    std::vector<Vertex> order_;
    std::vector<std::pair<Vertex, int>> trail_;
};

inline int bandwidth_lower_bound(const Graph& g)
{
    int bound = (g.max_degree() + 1) / 2;
    // An ordering of width k on n vertices has at most k*n - k(k+1)/2 edges.
    const long long n = g.order();
    const auto m = static_cast<long long>(g.edge_count());
    while (static_cast<long long>(bound) * n - static_cast<long long>(bound) * (bound + 1) / 2 < m)
        ++bound;
    return bound;
}

// Minimum width and the lexicographically smallest optimal ordering, or
// nothing when the bandwidth exceeds `cap`.
inline std::optional<BandwidthResult> bandwidth_search(const Graph& g, int cap = INT_MAX)
{
    const int top = std::min(cap, std::max(0, g.order() - 1));
    for (int k = bandwidth_lower_bound(g); k <= top; ++k)
        if (auto order = BandwidthSearch(g, k).run())
            return BandwidthResult{k, LinearOrdering(std::move(*order))};
    return std::nullopt;
}

inline Graph quotient(const Graph& g, const CoverClasses& classes)
{
    std::vector<Vertex> owner(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i])
            owner[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = owner[static_cast<std::size_t>(u)];
        Vertex b = owner[static_cast<std::size_t>(v)];
        if (a != b)
            edges.emplace_back(a, b);
    }
    return Graph::from_edges(static_cast<int>(classes.size()), edges);
}

}  // namespace detail

/// Exact bandwidth with the lexicographically smallest optimal ordering.
inline BandwidthResult bandwidth_exact(const Graph& g, int limit = SolverLimits{}.bandwidth)
{
    if (g.order() == 0)
        throw InvalidInput("bandwidth requires at least one vertex");
    if (g.order() > limit)
        throw LimitExceeded("bandwidth search is limited to " + std::to_string(limit) + " vertices, graph has " +
                            std::to_string(g.order()) + " (raise the limit explicitly to proceed)");
    return *detail::bandwidth_search(g);
}

/// Calls `visit(classes)` once per partition of V(g) into cliques. Classes
/// are listed in order of their smallest vertex and each class is sorted.
/// Vertex v joins an existing class only when adjacent to all its members,
/// otherwise it may open one new class, so every partition appears once.
template <typename Visitor>
void for_each_clique_partition(const Graph& g, Visitor&& visit)
{
    CoverClasses classes;
    const int n = g.order();
    auto assign = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            visit(static_cast<const CoverClasses&>(classes));
            return;
        }
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto& cls = classes[i];
            bool fits = std::all_of(cls.begin(), cls.end(), [&](Vertex u) { return g.adjacent(u, v); });
            if (!fits)
                continue;
            cls.push_back(v);
            self(self, v + 1);
            classes[i].pop_back();
        }
        classes.push_back({v});
        self(self, v + 1);
        classes.pop_back();
    };
    assign(assign, 0);
}

/// Exact clique cover width: the minimum, over all clique partitions, of
/// the bandwidth of the quotient graph. The witness is the
/// lexicographically smallest optimal cover (compared as a sequence of
/// sorted classes).
inline CcwResult ccw_exact(const Graph& g, int limit = SolverLimits{}.ccw)
{
    if (g.order() == 0)
        throw InvalidInput("clique cover width requires at least one vertex");
    if (g.order() > limit)
        throw LimitExceeded("clique cover width search is limited to " + std::to_string(limit) +
                            " vertices, graph has " + std::to_string(g.order()) +
                            " (raise the limit explicitly to proceed)");

    int best = INT_MAX;
    CoverClasses best_cover;
    for_each_clique_partition(g, [&](const CoverClasses& classes) {
        Graph q = detail::quotient(g, classes);
        if (detail::bandwidth_lower_bound(q) > best)
            return;
        auto r = detail::bandwidth_search(q, best);
        if (!r)
            return;
        // Classes are indexed by smallest member, so the lexicographically
        // smallest quotient ordering gives the smallest cover for this partition.
        CoverClasses ordered;
        ordered.reserve(classes.size());
        for (Vertex q_vertex : r->witness.order())
            ordered.push_back(classes[static_cast<std::size_t>(q_vertex)]);
        if (r->value < best || ordered < best_cover) {
            best = r->value;
            best_cover = std::move(ordered);
        }
    });
    return CcwResult{best, OrderedCliqueCover(g, std::move(best_cover))};
}

enum class BoundStatus { holds, fails, vacuous };

inline const char* to_string(BoundStatus s)
{
    switch (s) {
    case BoundStatus::holds:
        return "holds";
    case BoundStatus::fails:
        return "fails";
    case BoundStatus::vacuous:
        return "vacuous";
    }
    return "?";
}

struct InequalityReport {
    int ccw = 0;
    int bandwidth = 0;
    int clique_number = 0;
    int star_number = 0;
    BoundStatus ccw_at_most_bandwidth = BoundStatus::holds;
    /// BW <= omega * CCW; vacuous when CCW = 0 (disjoint union of cliques).
    BoundStatus bandwidth_at_most_product = BoundStatus::holds;
    /// CCW >= ceil(s/2) - 1.
    BoundStatus star_lower_bound = BoundStatus::holds;

    bool passed() const
    {
        return ccw_at_most_bandwidth != BoundStatus::fails && bandwidth_at_most_product != BoundStatus::fails &&
               star_lower_bound != BoundStatus::fails;
    }
};

inline int star_lower_bound(int star) { return (star + 1) / 2 - 1; }

inline InequalityReport check_inequality_chain(const Graph& g, SolverLimits limits = {})
{
    InequalityReport r;
    r.ccw = ccw_exact(g, limits.ccw).value;
    r.bandwidth = bandwidth_exact(g, limits.bandwidth).value;
    r.clique_number = clique_number(g);
    r.star_number = star_number(g);
    auto status = [](bool ok) { return ok ? BoundStatus::holds : BoundStatus::fails; };
    r.ccw_at_most_bandwidth = status(r.ccw <= r.bandwidth);
    r.bandwidth_at_most_product =
        r.ccw == 0 ? BoundStatus::vacuous : status(r.bandwidth <= r.clique_number * r.ccw);
    r.star_lower_bound = status(r.ccw >= star_lower_bound(r.star_number));
    return r;
}

inline void write_report(std::ostream& out, const InequalityReport& r)
{
    out << "ccw " << r.ccw << '\n'
        << "bw " << r.bandwidth << '\n'
        << "omega " << r.clique_number << '\n'
        << "star " << r.star_number << '\n'
        << "ccw<=bw " << to_string(r.ccw_at_most_bandwidth) << '\n'
        << "bw<=omega*ccw " << to_string(r.bandwidth_at_most_product) << '\n'
        << "ccw>=ceil(s/2)-1 " << to_string(r.star_lower_bound) << '\n';
}

inline void write_result(std::ostream& out, const BandwidthResult& r)
{
    out << "value " << r.value << '\n';
    write_ordering(out, r.witness);
}

inline void write_result(std::ostream& out, const CcwResult& r)
{
    out << "value " << r.value << '\n';
    write_cover(out, r.witness);
}

}  // namespace ccw

#endif
