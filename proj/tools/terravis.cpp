// terravis: build terrain visibility graphs, check their structural
// properties, answer shortest-path and dominating-set queries, and run
// randomized oracle cross-checks.

#include "terravis/fixtures.hpp"
#include "terravis/funnel.hpp"
#include "terravis/generate.hpp"
#include "terravis/io.hpp"
#include "terravis/properties.hpp"
#include "terravis/shortest_path.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

using namespace terravis;

namespace {

struct Input {
    std::optional<Terrain> terrain;
    OrderedGraph graph;
    std::string description;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Terrain text, graph JSON, or a fixture name; graphs are built from
/// terrains on the fly.
Input load_input(const std::string& path, const std::string& fixture) {
    if (!fixture.empty()) {
        Fixture f = get_fixture(fixture);
        return {std::move(f.terrain), std::move(f.graph), "fixture:" + fixture};
    }
    if (path.empty()) throw std::runtime_error("need an input file or --fixture");
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json doc = Json::parse(text);
        if (doc.contains("nL")) { // funnel JSON: expose the terrain order
            Funnel f = funnel_from_json(doc);
            return {std::nullopt, f.terrain_order_graph(), path};
        }
        return {std::nullopt, graph_from_json(doc), path};
    }
    Terrain t = parse_terrain(text);
    OrderedGraph g = build_visibility_graph(t);
    return {std::move(t), std::move(g), path};
}

void write_out(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << payload;
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

Json run_report(const std::string& command, const std::string& inputs, Json result, Json counters,
                const Stopwatch& watch) {
    return Json{{"command", command},
                {"inputs", inputs},
                {"result", std::move(result)},
                {"counters", std::move(counters)},
                {"elapsed_ms", watch.ms()}};
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TERRAVIS_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// ---- oracle suites ------------------------------------------------------

struct SuiteOutcome {
    bool pass = true;
    int trials = 0;
    std::string detail; // first counterexample
};

SuiteOutcome run_sp_suite(int trials, int max_n, std::uint64_t seed) {
    SuiteOutcome out;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        int n = static_cast<int>(draw(rng, 2, max_n));
        Terrain t = generate_terrain(n, rng());
        OrderedGraph g = build_visibility_graph(t);
        if (trial % 3 == 1 && g.size() > 3) { // every third trial: induced subgraph
            std::vector<int> keep;
            for (int v = 0; v < g.size(); ++v)
                if (draw(rng, 0, 3)) keep.push_back(v);
            if (keep.size() >= 2) g = induced_subgraph(g, keep);
        }
        ClosestProvider bin(g, ClosestMode::BinarySearch);
        ClosestProvider pre(g, ClosestMode::Precomputed);
        for (int q = 0; q < 10; ++q) {
            int s = static_cast<int>(draw(rng, 0, g.size() - 1));
            int u = static_cast<int>(draw(rng, 0, g.size() - 1));
            auto expected = bfs_distance(g, s, u);
            auto got_bin = shortest_distance(g, s, u, bin);
            auto got_pre = shortest_distance(g, s, u, pre);
            bool counters_ok = !expected || *expected == 0 ||
                               (got_bin.counters.iterations <= *expected + 1 &&
                                got_bin.counters.queue_pushes <= 2 * (*expected + 1));
            if (got_bin.distance != expected || got_pre.distance != expected || !counters_ok) {
                out.pass = false;
                out.trials = trial + 1;
                std::ostringstream msg;
                msg << "trial " << trial << " (seed " << seed + static_cast<std::uint64_t>(trial)
                    << "): s=" << s << " t=" << u << " expected "
                    << (expected ? std::to_string(*expected) : "inf") << " graph "
                    << graph_to_json(g).dump();
                out.detail = msg.str();
                return out;
            }
        }
        out.trials = trial + 1;
    }
    return out;
}

SuiteOutcome run_domset_suite(int trials, int max_n, std::uint64_t seed) {
    if (max_n > 20) throw TooLarge("domset oracle is limited to --max-n 20 (brute force)");
    SuiteOutcome out;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        int n = static_cast<int>(draw(rng, 3, std::max(3, max_n)));
        Terrain t = generate_funnel(n, rng());
        Funnel f = Funnel::from_terrain(t);
        auto dp = min_dominating_set(f);
        auto brute = brute_force_dominating_set(f.graph());
        if (dp.set.size() != brute.size() || !dominates(f, dp.set)) {
            out.pass = false;
            out.trials = trial + 1;
            std::ostringstream msg;
            msg << "trial " << trial << " (seed " << seed + static_cast<std::uint64_t>(trial)
                << "): dp size " << dp.set.size() << " brute size " << brute.size() << " terrain\n"
                << terrain_to_text(t);
            out.detail = msg.str();
            return out;
        }
        out.trials = trial + 1;
    }
    return out;
}

SuiteOutcome run_properties_suite(int trials, int max_n, std::uint64_t seed) {
    SuiteOutcome out;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        int n = static_cast<int>(draw(rng, 2, max_n));
        Terrain t = generate_terrain(n, rng());
        OrderedGraph g = build_visibility_graph(t);
        std::optional<std::string> complaint;
        if (!is_persistent(g).persistent) complaint = "graph is not persistent";
        if (!complaint && n <= 30) {
            for (int k : {6, 7})
                if (!complaint && find_antihole(g, k)) complaint = "found an antihole";
        }
        if (!complaint && n <= 14) {
            for (int k = 4; k <= 7 && !complaint; ++k) {
                enumerate_induced_cycles(g, k, [&](const std::vector<int>& cycle) {
                    if (!check_cycle_order(g, cycle)) {
                        complaint = "cycle order violated: " +
                                    witness_to_json(Witness{WitnessKind::CycleOrderViolation, cycle})
                                        .dump();
                        return false;
                    }
                    return true;
                });
            }
        }
        if (complaint) {
            out.pass = false;
            out.trials = trial + 1;
            std::ostringstream msg;
            msg << "trial " << trial << " (seed " << seed + static_cast<std::uint64_t>(trial)
                << "): " << *complaint << " terrain\n"
                << terrain_to_text(t);
            out.detail = msg.str();
            return out;
        }
        out.trials = trial + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"terrain visibility graphs: construction, checks, queries"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a visibility graph");
    std::string build_input, build_fixture, build_format = "json", build_out;
    build->add_option("input", build_input, "terrain file");
    build->add_option("--fixture", build_fixture, "named fixture");
    build->add_option("--format", build_format)->check(CLI::IsMember({"json", "dot"}));
    build->add_option("--out", build_out, "output path (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "check structural properties");
    std::string check_input, check_fixture, check_props = "x,bar,persistent", check_format = "text";
    check->add_option("input", check_input, "terrain file or graph JSON");
    check->add_option("--fixture", check_fixture, "named fixture");
    check->add_option("--properties", check_props, "comma list: x,bar,persistent,antihole=K");
    check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

    // sp
    auto* sp = app.add_subcommand("sp", "shortest path query");
    std::vector<std::string> sp_args; // [input] s t
    std::string sp_fixture, sp_mode = "binsearch", sp_format = "text";
    bool sp_path = false, sp_counters = false, sp_no_verify = false;
    sp->add_option("args", sp_args, "[input] s t")->expected(2, 3);
    sp->add_option("--fixture", sp_fixture, "named fixture");
    sp->add_option("--mode", sp_mode)->check(CLI::IsMember({"binsearch", "precompute"}));
    sp->add_flag("--path", sp_path, "also print one shortest path");
    sp->add_flag("--counters", sp_counters, "also print instrumentation counters");
    sp->add_flag("--no-verify", sp_no_verify, "skip the X-property pre-check");
    sp->add_option("--format", sp_format)->check(CLI::IsMember({"text", "json"}));

    // domset
    auto* domset = app.add_subcommand("domset", "minimum dominating set of a funnel");
    std::string dom_input, dom_fixture, dom_format = "text";
    domset->add_option("input", dom_input, "funnel terrain or funnel JSON");
    domset->add_option("--fixture", dom_fixture, "named fixture");
    domset->add_option("--format", dom_format)->check(CLI::IsMember({"text", "json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string gen_kind = "terrain", gen_out;
    int gen_n = 10;
    std::int64_t gen_range = 1000;
    std::uint64_t gen_seed = default_seed();
    gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"terrain", "funnel"}));
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--seed", gen_seed, "rng seed (default $TERRAVIS_SEED or 0)");
    gen->add_option("--coord-range", gen_range, "integer coordinates within +-C");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "randomized oracle cross-checks");
    std::string oracle_suite, oracle_format = "text";
    int oracle_trials = 100, oracle_max_n = 30;
    std::uint64_t oracle_seed = default_seed();
    oracle->add_option("--suite", oracle_suite, "sp | domset | properties")
        ->required()
        ->check(CLI::IsMember({"sp", "domset", "properties"}));
    oracle->add_option("--trials", oracle_trials);
    oracle->add_option("--max-n", oracle_max_n);
    oracle->add_option("--seed", oracle_seed, "rng seed (default $TERRAVIS_SEED or 0)");
    oracle->add_option("--format", oracle_format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);
    Stopwatch watch;

    try {
        if (app.got_subcommand(build)) {
            Input in = load_input(build_input, build_fixture);
            std::string payload = build_format == "dot" ? graph_to_dot(in.graph)
                                                        : graph_to_json(in.graph).dump(2) + "\n";
            write_out(build_out, payload);
            return 0;
        }

        if (app.got_subcommand(check)) {
            Input in = load_input(check_input, check_fixture);
            Json results = Json::object();
            bool all_pass = true;
            std::string text_report;
            std::stringstream props(check_props);
            std::string prop;
            while (std::getline(props, prop, ',')) {
                std::optional<Witness> witness;
                bool pass;
                if (prop == "x") {
                    witness = check_x_property(in.graph);
                    pass = !witness;
                } else if (prop == "bar") {
                    witness = check_bar_property(in.graph);
                    pass = !witness;
                } else if (prop == "persistent") {
                    auto res = is_persistent(in.graph);
                    pass = res.persistent;
                    witness = res.witness;
                } else if (prop.rfind("antihole=", 0) == 0) {
                    int k = std::stoi(prop.substr(9));
                    witness = find_antihole(in.graph, k);
                    pass = !witness; // pass means no antihole
                } else {
                    throw std::runtime_error("unknown property '" + prop + "'");
                }
                all_pass = all_pass && pass;
                Json entry{{"pass", pass}};
                if (witness) entry["witness"] = witness_to_json(*witness);
                results[prop] = entry;
                text_report += prop + ": " + (pass ? "pass" : "fail");
                if (witness) text_report += "  " + witness_to_json(*witness).dump();
                text_report += '\n';
            }
            if (check_format == "json")
                std::cout << run_report("check", in.description, results, Json::object(), watch).dump(2)
                          << '\n';
            else
                std::cout << text_report;
            return all_pass ? 0 : 1;
        }

        if (app.got_subcommand(sp)) {
            std::string sp_input;
            if (sp_args.size() == 3) {
                sp_input = sp_args.front();
                sp_args.erase(sp_args.begin());
            }
            int sp_s = std::stoi(sp_args.at(0));
            int sp_t = std::stoi(sp_args.at(1));
            Input in = load_input(sp_input, sp_fixture);
            if (!sp_no_verify) {
                if (auto w = check_x_property(in.graph)) {
                    std::cerr << "input is not terrain-like: " << witness_to_json(*w).dump() << '\n';
                    return 1;
                }
            }
            ClosestMode mode =
                sp_mode == "precompute" ? ClosestMode::Precomputed : ClosestMode::BinarySearch;
            ClosestProvider provider(in.graph, mode);
            DistanceRun run = shortest_distance(in.graph, sp_s, sp_t, provider);
            std::optional<std::vector<int>> path;
            if (sp_path) path = shortest_path(in.graph, sp_s, sp_t, provider);

            Json counters{{"iterations", run.counters.iterations},
                          {"queue_pushes", run.counters.queue_pushes},
                          {"queue_pops", run.counters.queue_pops},
                          {"closest_queries", run.counters.closest_queries}};
            if (sp_format == "json") {
                Json result{{"distance",
                             run.distance ? Json(*run.distance) : Json(nullptr)}};
                if (path) result["path"] = *path;
                std::cout << run_report("sp", in.description, result, counters, watch).dump(2)
                          << '\n';
            } else {
                std::cout << (run.distance ? std::to_string(*run.distance) : "inf") << '\n';
                if (path) {
                    std::cout << "path:";
                    for (int v : *path) std::cout << ' ' << v;
                    std::cout << '\n';
                }
                if (sp_counters) std::cout << counters.dump() << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(domset)) {
            std::optional<Funnel> funnel;
            std::string description;
            if (!dom_fixture.empty()) {
                Fixture f = get_fixture(dom_fixture);
                if (!f.terrain) throw NotAFunnel(NotAFunnel::Reason::NoConvex);
                funnel = Funnel::from_terrain(*f.terrain);
                description = "fixture:" + dom_fixture;
            } else {
                if (dom_input.empty()) throw std::runtime_error("need an input file or --fixture");
                std::string text = slurp(dom_input);
                auto first = text.find_first_not_of(" \t\r\n");
                if (first != std::string::npos && text[first] == '{')
                    funnel = funnel_from_json(Json::parse(text));
                else
                    funnel = Funnel::from_terrain(parse_terrain(text));
                description = dom_input;
            }
            auto res = min_dominating_set(*funnel);
            Json set = Json::array();
            for (int id : res.set) set.push_back(chain_vertex_to_json(funnel->label(id)));
            if (dom_format == "json") {
                Json result{{"size", res.set.size()}, {"set", set}};
                Json counters{{"pair_evaluations", res.pair_evaluations}};
                std::cout << run_report("domset", description, result, counters, watch).dump(2)
                          << '\n';
            } else {
                std::cout << "size " << res.set.size() << '\n' << "set " << set.dump() << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(gen)) {
            Terrain t = gen_kind == "funnel" ? generate_funnel(gen_n, gen_seed, gen_range)
                                             : generate_terrain(gen_n, gen_seed, gen_range);
            write_out(gen_out, terrain_to_text(t));
            return 0;
        }

        if (app.got_subcommand(oracle)) {
            SuiteOutcome out;
            if (oracle_suite == "sp")
                out = run_sp_suite(oracle_trials, oracle_max_n, oracle_seed);
            else if (oracle_suite == "domset")
                out = run_domset_suite(oracle_trials, oracle_max_n, oracle_seed);
            else
                out = run_properties_suite(oracle_trials, oracle_max_n, oracle_seed);

            if (oracle_format == "json") {
                Json result{{"suite", oracle_suite}, {"pass", out.pass}, {"trials", out.trials}};
                if (!out.pass) result["counterexample"] = out.detail;
                std::cout << run_report("oracle", oracle_suite, result, Json::object(), watch).dump(2)
                          << '\n';
            } else {
                std::cout << "suite " << oracle_suite << ": " << out.trials << " trials, "
                          << (out.pass ? "pass" : "FAIL") << '\n';
                if (!out.pass) std::cout << out.detail << '\n';
            }
            return out.pass ? 0 : 1;
        }
    } catch (const TerrainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
