#ifndef CCW_EXPERIMENT_HPP
#define CCW_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "ccw/composition.hpp"
#include "ccw/generators.hpp"
#include "ccw/solvers.hpp"

namespace ccw {

enum class ExperimentKind { odd_path_sweep, random_clique_sum };

inline ExperimentKind parse_experiment_kind(const std::string& name)
{
    if (name == "path-sweep")
        return ExperimentKind::odd_path_sweep;
    if (name == "random-clique-sum")
        return ExperimentKind::random_clique_sum;
    throw InvalidInput("unknown experiment kind '" + name + "' (expected path-sweep or random-clique-sum)");
}

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::random_clique_sum;
    /// Number of instances; for the path sweep, t runs over 1..count.
    int count = 1;
    std::uint64_t seed = 0;
    SolverLimits limits;
    CliqueSumParams params;
    std::string out;  // empty: standard output
};

inline void validate(const ExperimentConfig& cfg)
{
    if (cfg.count < 1)
        throw InvalidInput("experiment needs at least one instance");
    if (cfg.kind == ExperimentKind::random_clique_sum)
        validate(cfg.params);
}

inline constexpr const char* experiment_csv_header = "n1,n2,shared,w1,w2,achieved,bound,ccw_exact,claim_check";

struct ExperimentRow {
    int n1 = 0;
    int n2 = 0;
    int shared = 0;
    bool skipped = false;
    int w1 = 0;
    int w2 = 0;
    int achieved = 0;
    int bound = 0;
    std::optional<int> ccw;
    ClaimStatus claim = ClaimStatus::vacuous;
};

inline ExperimentRow measure_instance(const CliqueSumInstance& inst, const SolverLimits& limits)
{
    ExperimentRow row;
    row.n1 = inst.g1.order();
    row.n2 = inst.g2.order();
    row.shared = static_cast<int>(inst.shared.size());
    auto cert = compose_covers(inst.g1, inst.c1, inst.g2, inst.c2, inst.shared);
    row.w1 = cert.w1;
    row.w2 = cert.w2;
    row.achieved = cert.achieved;
    row.bound = cert.bound;
    if (cert.graph.order() <= limits.ccw)
        row.ccw = ccw_exact(cert.graph, limits.ccw).value;
    row.claim = edge_span_claim_check(inst.g1, inst.c1, inst.g2, inst.c2, inst.shared).status;
    return row;
}

inline std::string format_row(const ExperimentRow& row)
{
    std::ostringstream out;
    out << row.n1 << ',' << row.n2 << ',' << row.shared << ',';
    if (row.skipped) {
        out << ",,,,,skipped";
        return out.str();
    }
    out << row.w1 << ',' << row.w2 << ',' << row.achieved << ',' << row.bound << ',';
    if (row.ccw)
        out << *row.ccw;
    out << ',';
    switch (row.claim) {
    case ClaimStatus::holds:
        out << "pass";
        break;
    case ClaimStatus::violated:
        out << "fail";
        break;
    case ClaimStatus::vacuous:
        out << "vacuous";
        break;
    }
    return out.str();
}

/// Runs the configured experiment and returns the CSV report (header plus
/// one row per instance, in instance order).
inline std::string run_experiment(const ExperimentConfig& cfg)
{
    validate(cfg);
    std::ostringstream csv;
    csv << experiment_csv_header << '\n';
    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.count; ++i) {
        ExperimentRow row;
        if (cfg.kind == ExperimentKind::odd_path_sweep) {
            row = measure_instance(odd_path_sum(i + 1), cfg.limits);
        } else {
            auto params = cfg.params;
            params.ccw_limit = cfg.limits.ccw;
            try {
                row = measure_instance(random_clique_sum(params, rng), cfg.limits);
            } catch (const LimitExceeded&) {
                row.skipped = true;
            }
        }
        csv << format_row(row) << '\n';
    }
    return csv.str();
}

}  // namespace ccw

#endif
