// bonding: command-line front end.
//
// Exit status: 0 generated / passed, 1 not generated / failed, 2 input error,
// timeout or internal disagreement.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bonding/bonding.hpp"

namespace {

using namespace bonding;
using nlohmann::json;

enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

Level log_level() {
    static const Level level = [] {
        const char* env = std::getenv("BONDING_LOG");
        std::string v = env ? env : "warn";
        if (v == "quiet" || v == "off") return Level::Quiet;
        if (v == "info") return Level::Info;
        if (v == "debug") return Level::Debug;
        return Level::Warn;
    }();
    return level;
}

void log(Level level, const std::string& msg) {
    static const char* names[] = {"", "warning", "info", "debug"};
    if (level <= log_level()) std::cerr << "bonding: " << names[static_cast<int>(level)] << ": " << msg << "\n";
}

struct Globals {
    double timeout = 0;
    std::uint64_t seed = 1;
    std::string format = "text";
    bool oracle = false;

    SearchOptions search() const {
        SearchOptions o;
        if (timeout > 0)
            o.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(timeout));
        return o;
    }
};

// "pseudotori", "k-regular:K", "bounded-degree:K", "triangles", or a file.
BondingGrammar load_grammar(const std::string& name) {
    auto param = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            return static_cast<std::size_t>(std::stoul(name.substr(prefix.size())));
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "bad builtin parameter in '" + name + "'");
        }
    };
    if (name == "pseudotori") return pseudotori();
    if (name == "triangles") return triangle_grammar();
    if (auto k = param("k-regular:")) return k_regular(*k);
    if (auto k = param("bounded-degree:")) return bounded_degree(*k);
    return io::grammar_from_json(io::load(name));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
    out << text;
}

int cmd_check(const Globals& g, const std::string& grammar_path, const std::string& graph_path,
              bool language) {
    auto grammar = load_grammar(grammar_path);
    auto h = io::hypergraph_from_json(io::load(graph_path));
    grammar.check_labels(h);
    if (h.empty()) log(Level::Warn, "empty hypergraph: generated with m = 0");
    log(Level::Info, std::to_string(h.vertex_count()) + " vertices, " +
                         std::to_string(h.edge_count()) + " edges");
    std::optional<MembershipCertificate> cert;
    if (g.oracle) {
        cert = membership_oracle(grammar, h);
    } else {
        cert = is_generated(grammar, h, g.search());
    }
    bool yes = cert.has_value();
    if (yes && language && !grammar.terminal_only(h)) {
        log(Level::Info, "generated, but nonterminal edges remain");
        yes = false;
    }
    if (g.format == "json") {
        json out = {{"generated", yes}};
        if (yes) out["certificate"] = io::to_json(*cert);
        std::cout << io::dump(out);
    } else {
        std::cout << (yes ? "generated" : "not generated") << "\n";
        if (yes) std::cout << io::dump(io::to_json(*cert));
    }
    return yes ? 0 : 1;
}

int cmd_generate(const Globals& g, const std::string& grammar_path, const std::string& trace_path,
                 std::size_t steps, const std::string& out_path, const std::string& trace_out) {
    auto grammar = load_grammar(grammar_path);
    DerivationTrace trace;
    Hypergraph h;
    if (!trace_path.empty()) {
        trace = io::trace_from_json(io::load(trace_path));
        h = derive(grammar, trace);
    } else {
        Sampler rng(g.seed);
        auto r = random_connected_derivation(grammar, steps, rng);
        trace = std::move(r.trace);
        h = std::move(r.result);
    }
    std::string text;
    if (g.format == "dot") {
        text = to_dot(h);
    } else {
        text = io::dump(io::to_json(h));
    }
    write_output(out_path, text);
    if (!trace_out.empty()) write_output(trace_out, io::dump(io::to_json(trace)));
    return 0;
}

int cmd_export_dot(const std::string& path, const std::string& out_path) {
    auto h = io::hypergraph_from_json(io::load(path));
    write_output(out_path, to_dot(h));
    return 0;
}

StickerSystem load_system(const std::string& path) {
    return io::sticker_system_from_json(io::load(path));
}

int cmd_enumerate(const Globals& g, const std::string& path, std::size_t depth) {
    auto s = load_system(path);
    auto all = sticker_generates(s, depth);
    if (g.format == "json") {
        json out = json::array();
        for (const auto& d : all) out.push_back(io::to_json(d));
        std::cout << io::dump(out);
        return 0;
    }
    for (const auto& d : all) std::cout << to_string(d) << "\n" << render(d) << "\n\n";
    return 0;
}

int cmd_compile(const std::string& path, const std::string& out_path) {
    auto cs = compile(load_system(path));
    log(Level::Info, std::to_string(cs.grammar.size()) + " starts");
    write_output(out_path, io::dump(io::to_json(cs.grammar)));
    return 0;
}

int cmd_embed_check(const Globals& g, const std::string& path, std::size_t depth,
                    std::size_t samples) {
    auto s = load_system(path);
    auto r = embedding_check(s, depth, samples, g.seed, g.search());
    bool pass = r.pass();
    if (g.format == "json") {
        std::cout << io::dump({{"pass", pass},
                               {"generated", r.generated},
                               {"accepted", r.generated_accepted},
                               {"reconstructed", r.reconstructed},
                               {"samples", r.samples},
                               {"rejected", r.samples_rejected},
                               {"counterexamples", r.counterexamples}});
    } else {
        std::cout << "generated dominoes: " << r.generated << ", accepted " << r.generated_accepted
                  << ", rebuilt from certificate " << r.reconstructed << "\n"
                  << "non-generated samples: " << r.samples << ", rejected "
                  << r.samples_rejected << "\n";
        for (const auto& c : r.counterexamples) std::cout << "  " << c << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

SimpleGraph load_graph(const std::string& path) {
    std::string text = io::read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto h = io::hypergraph_from_json(io::parse(text, path));
        auto g = decode_graph(h);
        if (!g) throw Error(ErrorCode::InvalidInstance, "hypergraph is not the encoding of a simple graph");
        return *g;
    }
    std::istringstream in(text);
    return parse_edge_list(in);
}

int cmd_triangles(const Globals& g, const std::string& path, bool generic) {
    auto graph = load_graph(path);
    auto verdict = [](bool b) { return b ? "YES" : "NO"; };
    auto report_no = [&](const std::string& why) {
        if (g.format == "json") {
            std::cout << io::dump({{"oracle", false}, {"member", false}, {"agree", true}, {"reason", why}});
        } else {
            std::cout << "oracle: NO\nmembership: NO\nagree: yes\n(" << why << ")\n";
        }
        return 1;
    };
    if (graph.size() % 3 != 0) return report_no("vertex count not divisible by 3");
    if (graph.max_degree() > 5) throw Error(ErrorCode::InvalidInstance, "maximum degree exceeds 5");
    if (!graph.connected()) {
        if (graph.max_degree() > 4)
            throw Error(ErrorCode::InvalidInstance, "disconnected graph with maximum degree 5");
        for (const auto& c : graph.components())
            if (c.size() < 3) return report_no("a component has fewer than 3 vertices");
        graph = connectify(graph);
        log(Level::Info, "disconnected input chained into one component");
    }
    auto r = reduction_check(graph, generic || g.oracle, g.search());
    bool agree = r.agree();
    if (g.format == "json") {
        json out = {{"oracle", r.oracle}, {"member", r.member}, {"agree", agree}};
        if (r.generic) out["generic"] = *r.generic;
        if (r.partition) {
            json blocks = json::array();
            for (const auto& t : r.partition->blocks) blocks.push_back(t);
            out["partition"] = blocks;
        }
        if (r.certificate) out["certificate"] = io::to_json(*r.certificate);
        std::cout << io::dump(out);
    } else {
        std::cout << "oracle: " << verdict(r.oracle) << "\nmembership: " << verdict(r.member) << "\n";
        if (r.generic) std::cout << "generic search: " << verdict(*r.generic) << "\n";
        std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
        if (r.partition) {
            std::cout << "partition:";
            for (const auto& t : r.partition->blocks)
                std::cout << " {" << t[0] << "," << t[1] << "," << t[2] << "}";
            std::cout << "\n";
        }
        if (r.certificate) std::cout << io::dump(io::to_json(*r.certificate));
    }
    if (!agree) {
        log(Level::Warn, "oracle and membership disagree");
        return 2;
    }
    return r.member ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bonding grammars: membership, derivation, sticker systems, triangle partitions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--timeout", g.timeout, "Search time limit in seconds")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    app.add_flag("--oracle", g.oracle, "Use exhaustive subset enumeration for membership");

    std::string grammar, input, trace, trace_out, out;
    std::size_t steps = 4, depth = 3, samples = 20;
    bool language = false, generic = false;

    auto* check = app.add_subcommand("check", "Decide whether a grammar generates a hypergraph");
    check->add_option("grammar", grammar, "Grammar file or builtin name")->required();
    check->add_option("hypergraph", input, "Hypergraph JSON")->required()->check(CLI::ExistingFile);
    check->add_flag("--language", language, "Also require terminal labels only");

    auto* generate = app.add_subcommand("generate", "Derive a hypergraph from a trace or at random");
    generate->add_option("grammar", grammar, "Grammar file or builtin name")->required();
    generate->add_option("--trace", trace, "Derivation trace JSON")->check(CLI::ExistingFile);
    generate->add_option("--steps", steps, "Bonding steps for random derivations")->capture_default_str();
    generate->add_option("-o,--output", out, "Output file");
    generate->add_option("--save-trace", trace_out, "Also write the derivation trace here");

    auto* dot = app.add_subcommand("export-dot", "Render a hypergraph as Graphviz DOT");
    dot->add_option("hypergraph", input, "Hypergraph JSON")->required()->check(CLI::ExistingFile);
    dot->add_option("-o,--output", out, "Output file");

    auto* sticker = app.add_subcommand("sticker", "Regular sticker systems");
    sticker->require_subcommand(1);
    auto* enumerate = sticker->add_subcommand("enumerate", "List dominoes generated within a depth");
    enumerate->add_option("system", input, "Sticker system JSON")->required()->check(CLI::ExistingFile);
    enumerate->add_option("--depth", depth, "Rule applications")->capture_default_str();
    auto* compile_cmd = sticker->add_subcommand("compile", "Write the corresponding bonding grammar");
    compile_cmd->add_option("system", input, "Sticker system JSON")->required()->check(CLI::ExistingFile);
    compile_cmd->add_option("-o,--output", out, "Output file");
    auto* embed = sticker->add_subcommand("embed-check", "Check the embedding on generated and sampled dominoes");
    embed->add_option("system", input, "Sticker system JSON")->required()->check(CLI::ExistingFile);
    embed->add_option("--depth", depth, "Rule applications")->capture_default_str();
    embed->add_option("--samples", samples, "Non-generated dominoes to sample")->capture_default_str();

    auto* triangles = app.add_subcommand("triangles", "Partition into triangles versus triangle grammar membership");
    triangles->add_option("graph", input, "Edge list or hypergraph JSON")->required()->check(CLI::ExistingFile);
    triangles->add_flag("--generic", generic, "Also run the generic membership search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(g, grammar, input, language);
        if (*generate) return cmd_generate(g, grammar, trace, steps, out, trace_out);
        if (*dot) return cmd_export_dot(input, out);
        if (*enumerate) return cmd_enumerate(g, input, depth);
        if (*compile_cmd) return cmd_compile(input, out);
        if (*embed) return cmd_embed_check(g, input, depth, samples);
        if (*triangles) return cmd_triangles(g, input, generic);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SearchAborted) log(Level::Warn, "search stopped before a verdict");
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "E_INTERNAL: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
