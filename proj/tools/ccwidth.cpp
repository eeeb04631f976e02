// ccwidth: command-line front end for the clique cover width toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "ccw/ccw.hpp"

namespace {

using namespace ccw;

class Input {
public:
    explicit Input(const std::string& path)
    {
        if (path.empty() || path == "-")
            return;
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_)
            throw InvalidInput("cannot open '" + path + "'");
    }

    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw InvalidInput("cannot write '" + out_path + "'");
    out << text;
}

Graph load_graph(const std::string& path)
{
    Input in(path);
    return read_edge_list(in.stream());
}

SharedMap parse_shared(const std::string& spec)
{
    SharedMap shared;
    std::stringstream in(spec);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("shared pair '" + item + "' is not of the form u:v");
        try {
            shared.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw InvalidInput("shared pair '" + item + "' is not numeric");
        }
    }
    return shared;
}

struct Options {
    std::string input = "-";
    std::string out;
    std::string kind;
    std::uint64_t seed = 0;
    int count = 1;
    int t = 1;
    int n = 5;
    int leaves = 3;
    double p = 0.5;
    int min_n = 2;
    int max_n = 8;
    SolverLimits limits;
    std::string input2;
    std::string cover1;
    std::string cover2;
    std::string shared;
    std::string instance;
};

int run_gen(const Options& o)
{
    std::ostringstream out;
    if (o.kind == "path") {
        write_edge_list(out, odd_path(o.t));
    } else if (o.kind == "complete") {
        write_edge_list(out, complete_graph(o.n));
    } else if (o.kind == "star") {
        write_edge_list(out, star_graph(o.leaves));
    } else if (o.kind == "random") {
        write_edge_list(out, random_graph(o.n, o.p, o.seed));
    } else if (o.kind == "random-clique-sum") {
        CliqueSumParams params;
        params.min_vertices = o.min_n;
        params.max_vertices = o.max_n;
        params.edge_probability = o.p;
        params.ccw_limit = o.limits.ccw;
        Rng rng(o.seed);
        write_instance(out, random_clique_sum(params, rng));
    } else {
        throw InvalidInput("unknown generator '" + o.kind + "'");
    }
    emit(o.out, out.str());
    return 0;
}

int run_compose(const Options& o)
{
    std::optional<CliqueSumInstance> inst;
    if (!o.instance.empty()) {
        Input in(o.instance);
        inst = read_instance(in.stream());
    } else {
        if (o.input.empty() || o.input == "-" || o.input2.empty())
            throw InvalidInput("compose needs two graph files or --instance");
        Graph g1 = load_graph(o.input);
        Graph g2 = load_graph(o.input2);
        auto cover_for = [&](const Graph& g, const std::string& path) {
            if (path.empty())
                return ccw_exact(g, o.limits.ccw).witness;
            Input in(path);
            return read_cover(in.stream(), g);
        };
        inst = CliqueSumInstance{g1, cover_for(g1, o.cover1), g2, cover_for(g2, o.cover2), parse_shared(o.shared)};
    }
    auto cert = compose_covers(inst->g1, inst->c1, inst->g2, inst->c2, inst->shared);
    std::ostringstream out;
    write_certificate(out, cert);
    emit(o.out, out.str());
    if (auto check = verify_certificate(cert); !check) {
        std::cerr << "certificate does not verify: " << check.reason << '\n';
        return 1;
    }
    return 0;
}

int run_verify(const Options& o)
{
    Input in(o.input);
    auto cert = read_certificate(in.stream());
    auto check = verify_certificate(cert);
    if (!check) {
        std::cerr << check.reason << '\n';
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact bandwidth, clique cover width and clique-sum cover certificates"};
    app.require_subcommand(1);
    Options o;

    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--limit-bw", o.limits.bandwidth, "largest graph for exact bandwidth")->capture_default_str();
        sub->add_option("--limit-ccw", o.limits.ccw, "largest graph for exact clique cover width")
            ->capture_default_str();
    };
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("graph", o.input, "edge-list file, '-' for standard input");
        sub->add_option("--out", o.out, "output file (default: standard output)");
    };

    auto* gen = app.add_subcommand("gen", "generate a graph or a clique-sum instance");
    gen->add_option("kind", o.kind, "path | complete | star | random | random-clique-sum")->required();
    gen->add_option("--t", o.t, "path parameter: the path has 2t+1 vertices");
    gen->add_option("--n", o.n, "vertex count (complete, random)");
    gen->add_option("--leaves", o.leaves, "leaf count (star)");
    gen->add_option("--p", o.p, "edge probability (random kinds)");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--min-n", o.min_n, "smallest side (random-clique-sum)");
    gen->add_option("--max-n", o.max_n, "largest side (random-clique-sum)");
    gen->add_option("--out", o.out, "output file (default: standard output)");
    add_limits(gen);

    auto* bw = app.add_subcommand("bw", "exact bandwidth with an optimal ordering");
    add_io(bw);
    add_limits(bw);

    auto* ccw_cmd = app.add_subcommand("ccw", "exact clique cover width with an optimal cover");
    add_io(ccw_cmd);
    add_limits(ccw_cmd);

    auto* star = app.add_subcommand("star", "induced star number");
    add_io(star);

    auto* chain = app.add_subcommand("check-chain", "check CCW <= BW, BW <= omega*CCW, CCW >= ceil(s/2)-1");
    add_io(chain);
    add_limits(chain);

    auto* compose = app.add_subcommand("compose", "build a cover certificate for a clique sum");
    compose->add_option("graph1", o.input, "first graph (edge list)");
    compose->add_option("graph2", o.input2, "second graph (edge list)");
    compose->add_option("--cover1", o.cover1, "cover of the first graph (default: exact optimum)");
    compose->add_option("--cover2", o.cover2, "cover of the second graph (default: exact optimum)");
    compose->add_option("--shared", o.shared, "identified vertices as u:v pairs, comma separated");
    compose->add_option("--instance", o.instance, "instance file instead of graphs, covers and --shared");
    compose->add_option("--out", o.out, "certificate file (default: standard output)");
    add_limits(compose);

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("certificate", o.input, "certificate file, '-' for standard input");

    auto* experiment = app.add_subcommand("experiment", "run a seeded composition experiment, CSV output");
    std::string experiment_kind = "random-clique-sum";
    experiment->add_option("--kind", experiment_kind, "path-sweep | random-clique-sum")->capture_default_str();
    experiment->add_option("--count", o.count, "number of instances")->capture_default_str();
    experiment->add_option("--seed", o.seed, "random seed")->capture_default_str();
    experiment->add_option("--p", o.p, "edge probability")->capture_default_str();
    experiment->add_option("--min-n", o.min_n, "smallest side")->capture_default_str();
    experiment->add_option("--max-n", o.max_n, "largest side")->capture_default_str();
    experiment->add_option("--out", o.out, "CSV file (default: standard output)");
    add_limits(experiment);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(o);
        if (bw->parsed()) {
            std::ostringstream out;
            write_result(out, bandwidth_exact(load_graph(o.input), o.limits.bandwidth));
            emit(o.out, out.str());
            return 0;
        }
        if (ccw_cmd->parsed()) {
            std::ostringstream out;
            write_result(out, ccw_exact(load_graph(o.input), o.limits.ccw));
            emit(o.out, out.str());
            return 0;
        }
        if (star->parsed()) {
            emit(o.out, "value " + std::to_string(star_number(load_graph(o.input))) + "\n");
            return 0;
        }
        if (chain->parsed()) {
            auto report = check_inequality_chain(load_graph(o.input), o.limits);
            std::ostringstream out;
            write_report(out, report);
            emit(o.out, out.str());
            if (!report.passed()) {
                std::cerr << "inequality chain violated\n";
                return 1;
            }
            return 0;
        }
        if (compose->parsed())
            return run_compose(o);
        if (verify->parsed())
            return run_verify(o);
        if (experiment->parsed()) {
            ExperimentConfig cfg;
            cfg.kind = parse_experiment_kind(experiment_kind);
            cfg.count = o.count;
            cfg.seed = o.seed;
            cfg.limits = o.limits;
            cfg.params.edge_probability = o.p;
            cfg.params.min_vertices = o.min_n;
            cfg.params.max_vertices = o.max_n;
            cfg.out = o.out;
            emit(cfg.out, run_experiment(cfg));
            return 0;
        }
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
