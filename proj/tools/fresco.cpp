// fresco: frequent simplet mining in simplicial complexes.
// Subcommands: mine (the pipeline), gen (seeded synthetic complexes),
// bench (decision vs exact timing sweep), oracle (hidden; brute-force
// reference values for regression fixtures).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fresco/canonizer.hpp"
#include "fresco/complex_store.hpp"
#include "fresco/generator.hpp"
#include "fresco/miner.hpp"
#include "fresco/oracle.hpp"
#include "fresco/simplet.hpp"

namespace {

using nlohmann::json;

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::size_t peak_rss_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmPeak:", 0) == 0) {
            std::stringstream ss(line.substr(7));
            std::size_t kb = 0;
            ss >> kb;
            return kb;
        }
    }
    return 0;
}

std::string stem_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

struct MineArgs {
    std::string input, output;
    std::size_t tau = 0;
    double tau_fraction = 0.0;
    fresco::MiningConfig cfg;
    std::string mode = "decision";
    long long timeout_ms = 500;
    std::uint32_t threads = 0;
};

void add_mine_flags(CLI::App* cmd, MineArgs& args) {
    cmd->add_option("--input", args.input, "complex file (one simplex per line)")->required();
    cmd->add_option("--output", args.output, "output prefix (default: input stem)");
    auto* tau = cmd->add_option("--tau", args.tau, "absolute support threshold");
    auto* frac = cmd->add_option("--tau-fraction", args.tau_fraction,
                                 "threshold as a fraction of the vertex count")
                     ->check(CLI::Range(0.0, 1.0));
    tau->excludes(frac);
    frac->excludes(tau);
    cmd->add_option("--max-size", args.cfg.max_size, "simplet vertex cap")->capture_default_str();
    cmd->add_option("--min-dim", args.cfg.min_dim, "minimum output dimension")
        ->capture_default_str();
    cmd->add_option("--mode", args.mode, "decision|exact")
        ->check(CLI::IsMember({"decision", "exact"}))
        ->capture_default_str();
    cmd->add_option("--timeout-ms", args.timeout_ms, "per-seed budget, decision mode")
        ->capture_default_str();
    cmd->add_option("--threads", args.threads, "worker threads (default: all cores)")
        ->envname("FRESCO_THREADS");
    cmd->add_flag("--inflate-at-cap,!--no-inflate-at-cap", args.cfg.inflate_at_cap,
                  "close joists of max-size simplets (on by default; the negated "
                  "form size-gates every expansion rule)");
}

fresco::MiningConfig resolve_config(const MineArgs& args, const fresco::ComplexStore& store) {
    fresco::MiningConfig cfg = args.cfg;
    if (args.tau > 0)
        cfg.tau = args.tau;
    else if (args.tau_fraction > 0.0)
        cfg.tau = static_cast<std::size_t>(
            std::ceil(args.tau_fraction * static_cast<double>(store.num_vertices())));
    else
        throw CLI::ValidationError("--tau", "one of --tau / --tau-fraction is required");
    if (cfg.tau < 1) cfg.tau = 1;
    cfg.mode = args.mode == "exact" ? fresco::MiningMode::Exact : fresco::MiningMode::Decision;
    cfg.budget = std::chrono::milliseconds(args.timeout_ms);
    cfg.workers = args.threads;
    return cfg;
}

json stats_json(const fresco::MiningResult& result) {
    json levels = json::array();
    for (const auto& level : result.stats.levels)
        levels.push_back({{"size", level.size},
                          {"examined", level.examined},
                          {"frequent", level.frequent},
                          {"millis", level.millis}});
    return {{"examined", result.stats.examined},
            {"frequent", result.stats.frequent},
            {"pruned", result.stats.pruned},
            {"registered_classes", result.stats.registered_classes},
            {"duplicate_children", result.stats.duplicate_children},
            {"canonization_calls", result.stats.canonization_calls},
            {"wall_ms", result.stats.wall_ms},
            {"levels", levels}};
}

int cmd_mine(const MineArgs& args) {
    fresco::ComplexStore store = fresco::load_complex_file(args.input);
    fresco::MiningConfig cfg = resolve_config(args, store);
    fresco::MiningResult result = fresco::mine(store, cfg);

    std::string prefix = args.output.empty() ? stem_of(args.input) : args.output;
    {
        std::ofstream tsv(prefix + ".tsv");
        if (!tsv) throw std::runtime_error("cannot write " + prefix + ".tsv");
        fresco::write_tsv(result, tsv);
    }

    const auto& stats = store.stats();
    json report = {
        {"schema", 1},
        {"config",
         {{"input", args.input},
          {"tau", cfg.tau},
          {"max_size", cfg.max_size},
          {"min_dim", cfg.min_dim},
          {"mode", args.mode},
          {"timeout_ms", args.timeout_ms},
          {"threads", cfg.workers},
          {"inflate_at_cap", cfg.inflate_at_cap}}},
        {"input_fnv1a", fnv1a_file(args.input)},
        {"dataset",
         {{"vertices", stats.vertices},
          {"edges", stats.edges},
          {"triangles", stats.triangles},
          {"maximal", stats.maximal},
          {"dimension", stats.dimension}}},
        {"frequent_simplets", result.rows.size()},
        {"stats", stats_json(result)},
        {"peak_rss_kb", peak_rss_kb()},
    };
    {
        std::ofstream rep(prefix + ".report.json");
        if (!rep) throw std::runtime_error("cannot write " + prefix + ".report.json");
        rep << report.dump(2) << '\n';
    }

    fresco::write_tsv(result, std::cout);
    std::cerr << result.rows.size() << " frequent simplet(s), " << result.stats.examined
              << " examined, " << result.stats.wall_ms << " ms\n";
    return 0;
}

int cmd_gen(const fresco::GenConfig& cfg, const std::string& output) {
    auto sets = fresco::generate_complex(cfg);
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    fresco::write_sets(sets, out);
    return 0;
}

int cmd_bench(const MineArgs& args, std::vector<std::size_t> taus) {
    fresco::ComplexStore store = fresco::load_complex_file(args.input);
    std::cout << "tau\tdecision_ms\texact_ms\tratio\tdecision_frequent\texact_frequent\n";
    for (std::size_t tau : taus) {
        MineArgs one = args;
        one.tau = tau;
        fresco::MiningConfig cfg = resolve_config(one, store);

        cfg.mode = fresco::MiningMode::Decision;
        fresco::MiningResult decision = fresco::mine(store, cfg);
        cfg.mode = fresco::MiningMode::Exact;
        fresco::MiningResult exact = fresco::mine(store, cfg);

        double ratio = decision.stats.wall_ms > 0.0
                           ? exact.stats.wall_ms / decision.stats.wall_ms
                           : 0.0;
        std::cout << tau << '\t' << decision.stats.wall_ms << '\t' << exact.stats.wall_ms << '\t'
                  << ratio << '\t' << decision.rows.size() << '\t' << exact.rows.size() << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& what, const std::string& input, const std::string& simplet,
               std::uint32_t max_size) {
    if (what == "enumerate") {
        for (const auto& p : fresco::oracle::oracle_enumerate_simplets(max_size))
            std::cout << fresco::serialize_canonical(*p) << '\n';
        return 0;
    }
    fresco::ComplexStore store = fresco::load_complex_file(input);
    auto p = fresco::parse_simplet(simplet);
    if (what == "sup") {
        std::cout << fresco::oracle::oracle_sup(store, *p) << '\n';
    } else if (what == "embeddings") {
        auto embeddings = fresco::oracle::oracle_embeddings(store, *p);
        for (const auto& e : embeddings) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << store.original_id(e[i]);
            }
            std::cout << '\n';
        }
        std::cerr << embeddings.size() << " embedding(s)\n";
    } else {
        throw std::runtime_error("oracle: unknown query '" + what + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequent simplet mining in simplicial complexes"};
    app.require_subcommand(1);

    MineArgs mine_args;
    CLI::App* mine_cmd = app.add_subcommand("mine", "mine frequent simplets");
    add_mine_flags(mine_cmd, mine_args);

    fresco::GenConfig gen_cfg;
    std::string gen_output;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded synthetic complex");
    gen_cmd->add_option("--vertices", gen_cfg.vertices, "background vertex count")->required();
    gen_cmd->add_option("--maximal", gen_cfg.maximal, "background simplex count")->required();
    gen_cmd->add_option("--max-dim", gen_cfg.max_dim, "background dimension cap")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_cfg.seed, "RNG seed")->required();
    gen_cmd->add_option("--plant", gen_cfg.plant, "simplet to plant, e.g. \"0,1,2;2,3\"");
    gen_cmd->add_option("--copies", gen_cfg.copies, "vertex-disjoint planted copies");
    gen_cmd->add_option("--output", gen_output, "output file")->required();

    MineArgs bench_args;
    std::vector<std::size_t> bench_taus;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time decision vs exact over a tau sweep");
    add_mine_flags(bench_cmd, bench_args);
    bench_cmd->add_option("--tau-list", bench_taus, "thresholds to sweep")
        ->required()
        ->delimiter(',');

    std::string oracle_what, oracle_input, oracle_simplet;
    std::uint32_t oracle_max_size = 4;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference values");
    oracle_cmd->group("");  // hidden
    oracle_cmd->add_option("query", oracle_what, "sup|embeddings|enumerate")->required();
    oracle_cmd->add_option("--input", oracle_input, "complex file");
    oracle_cmd->add_option("--simplet", oracle_simplet, "simplet, e.g. \"0,1,2;2,3\"");
    oracle_cmd->add_option("--max-size", oracle_max_size, "enumeration vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags -> 2; --help stays 0
    }

    try {
        if (mine_cmd->parsed()) return cmd_mine(mine_args);
        if (gen_cmd->parsed()) return cmd_gen(gen_cfg, gen_output);
        if (bench_cmd->parsed()) return cmd_bench(bench_args, bench_taus);
        if (oracle_cmd->parsed())
            return cmd_oracle(oracle_what, oracle_input, oracle_simplet, oracle_max_size);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
