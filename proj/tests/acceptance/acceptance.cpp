// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bonding/bonding.hpp"

using namespace bonding;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string data(const std::string& name) { return std::string(BONDING_DATA_DIR) + "/" + name; }

Hypergraph strands() {
    Hypergraph h;
    for (auto v : {"u1", "u2", "u3", "u4", "l1", "l2", "l3", "l4"}) h.add_vertex(v);
    h.add_edge_by_name("eu1", "G", {"u1", "u2"});
    h.add_edge_by_name("eu2", "A", {"u2", "u3"});
    h.add_edge_by_name("eu3", "C", {"u3", "u4"});
    h.add_edge_by_name("el1", "C", {"l1", "l2"});
    h.add_edge_by_name("el2", "T", {"l2", "l3"});
    h.add_edge_by_name("el3", "G", {"l3", "l4"});
    return h;
}

std::size_t breakable_edges(const BondingGrammar& g, const Hypergraph& h) {
    std::size_t n = 0;
    for (const auto& e : h.edges()) n += g.bond_function().in_range(e.label);
    return n;
}

// Moves one attachment of one edge, or drops an edge.
Hypergraph perturb(const Hypergraph& h, Sampler& rng) {
    if (h.edge_count() == 0) return h;
    auto e = h.edge(rng.below(h.edge_count()));
    auto rest = remove_edges(h, {e.id});
    if (rng.below(3) == 0) return rest;
    if (!e.att.empty()) e.att[rng.below(e.att.size())] = rng.below(h.vertex_count());
    rest.add_edge(e.id, e.label, e.att);
    return rest;
}

// Criterion 1
Outcome bonding_golden() {
    auto bf = BondFunction{};
    bf.add({"A", 2}, {"T", 2}, {"A*T", 4});
    bf.add({"C", 2}, {"G", 2}, {"C*G", 4});
    auto r = bond(strands(), "eu2", "el2", bf);
    Hypergraph expected;
    for (auto v : {"a", "b", "c", "d", "w", "x", "y", "z"}) expected.add_vertex(v);
    expected.add_edge_by_name("1", "G", {"a", "b"});
    expected.add_edge_by_name("2", "C", {"c", "d"});
    expected.add_edge_by_name("3", "C", {"w", "x"});
    expected.add_edge_by_name("4", "G", {"y", "z"});
    expected.add_edge_by_name("5", "A*T", {"b", "c", "x", "y"});
    bool ok = isomorphic(r, expected) && r.edge_count() == 5;
    return {ok, "5 hyperedges, arity-4 A*T attached (u2,u3,l2,l3)"};
}

// Criterion 2
Outcome pseudotori_replay() {
    auto g = io::grammar_from_json(io::load(data("pseudotori.json")));
    auto trace = io::trace_from_json(io::load(data("example3_trace.json")));
    auto h = derive(g, trace);
    auto expected = io::hypergraph_from_json(io::load(data("example3.json")));
    auto cert = is_generated(g, h);
    bool ok = h.vertex_count() == 2 && isomorphic(h, expected) && cert && verify_certificate(g, h, *cert) &&
              cert->bondset.size() == 4 && cert->multiplicity == MultiplicityVector{2};
    return {ok, "2 vertices, 2 loops, 2 arrows; certificate |B| = 4, m = (2)"};
}

// Criterion 3
Outcome oracle_equivalence() {
    std::vector<std::pair<std::string, BondingGrammar>> grammars{
        {"pseudotori", pseudotori()},           {"k_regular(2)", k_regular(2)},
        {"k_regular(3)", k_regular(3)},         {"bounded_degree(2)", bounded_degree(2)},
        {"bounded_degree(3)", bounded_degree(3)}, {"triangles", triangle_grammar()}};
    Sampler rng(2025);
    const std::size_t per_grammar = 100;
    std::size_t total = 0, agree = 0, positives = 0, certificates_ok = 0;
    std::ostringstream failures;
    for (const auto& [name, g] : grammars) {
        std::size_t made = 0;
        for (std::size_t attempt = 0; made < per_grammar && attempt < per_grammar * 50; ++attempt) {
            auto d = rng.coin() ? random_connected_derivation(g, rng.below(8), rng)
                                : random_derivation(g, 2, rng.below(6), rng);
            Hypergraph h = rng.coin() ? perturb(d.result, rng) : d.result;
            if (h.vertex_count() > 10 || breakable_edges(g, h) > 14) continue;
            ++made;
            ++total;
            auto fast = is_generated(g, h);
            auto slow = membership_oracle(g, h);
            if (fast.has_value() == slow.has_value()) {
                ++agree;
            } else if (failures.tellp() < 300) {
                failures << " disagreement on " << name << ";";
            }
            positives += slow.has_value();
            bool fast_ok = !fast || verify_certificate(g, h, *fast);
            bool slow_ok = !slow || verify_certificate(g, h, *slow);
            certificates_ok += fast_ok && slow_ok;
        }
    }
    std::ostringstream out;
    out << agree << "/" << total << " agree (" << positives << " generated), " << certificates_ok
        << " certificate checks clean" << failures.str();
    return {total >= 500 && agree == total && certificates_ok == total, out.str()};
}

// Random multigraph with every total degree equal to k on n vertices:
// stubs paired at random, each pair oriented at random.
Hypergraph random_regular_digraph(std::size_t n, std::size_t k, Sampler& rng) {
    std::vector<std::size_t> stubs;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < k; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng.engine());
    Hypergraph h;
    h.declare_label({"b", 2});
    for (std::size_t v = 0; v < n; ++v) h.add_vertex("x" + std::to_string(v));
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        auto a = stubs[i], b = stubs[i + 1];
        if (rng.coin()) std::swap(a, b);
        h.add_edge("e" + std::to_string(i / 2), "b", {a, b});
    }
    return h;
}

Hypergraph random_digraph(std::size_t n, std::size_t m, Sampler& rng) {
    Hypergraph h;
    h.declare_label({"b", 2});
    for (std::size_t v = 0; v < n; ++v) h.add_vertex("x" + std::to_string(v));
    for (std::size_t i = 0; i < m; ++i) h.add_edge("e" + std::to_string(i), "b", {rng.below(n), rng.below(n)});
    return h;
}

// Criterion 4
Outcome degree_spot_checks() {
    Sampler rng(4);
    auto reg = k_regular(3);
    auto deg = bounded_degree(3);
    std::size_t regular = 0, regular_ok = 0, heavy = 0, heavy_ok = 0, light = 0, light_ok = 0;
    for (int round = 0; round < 400; ++round) {
        std::size_t n = 2 * (1 + rng.below(3));
        auto h = random_regular_digraph(n, 3, rng);
        if (!is_connected(h)) continue;
        ++regular;
        regular_ok += is_generated(reg, h).has_value();
    }
    for (int round = 0; round < 400; ++round) {
        std::size_t n = 1 + rng.below(6);
        auto h = random_digraph(n, rng.below(10), rng);
        auto ds = degree_set(h);
        std::size_t top = ds.empty() ? 0 : *ds.rbegin();
        bool accepted = is_generated(deg, h).has_value();
        if (ds.count(4)) {
            ++heavy;
            heavy_ok += !accepted;
        }
        if (top <= 3) {
            ++light;
            light_ok += accepted;
        }
    }
    std::ostringstream out;
    out << "3-regular accepted " << regular_ok << "/" << regular << ", degree-4 rejected " << heavy_ok << "/"
        << heavy << ", degree<=3 accepted " << light_ok << "/" << light;
    bool ok = regular >= 100 && heavy >= 50 && regular_ok == regular && heavy_ok == heavy && light_ok == light;
    return {ok, out.str()};
}

std::vector<std::size_t> sorted_degrees(const Hypergraph& h) {
    auto d = degrees(h);
    std::sort(d.begin(), d.end());
    return d;
}

// Criterion 5
Outcome reversibility() {
    std::vector<BondingGrammar> grammars{pseudotori(), k_regular(2), k_regular(3), bounded_degree(3),
                                         triangle_grammar()};
    Sampler rng(5);
    std::size_t trips = 0, violations = 0;
    while (trips < 10000) {
        const auto& g = grammars[rng.below(grammars.size())];
        auto d = random_derivation(g, 2, rng.below(6), rng);
        const auto& h = d.result;
        const auto& bf = g.bond_function();
        auto pairs = detail::bondable_pairs(h, bf);
        if (!pairs.empty()) {
            auto [x, y] = pairs[rng.below(pairs.size())];
            auto bonded = bond(h, h.edge(x).id, h.edge(y).id, bf, std::string("fresh"));
            bool ok = bonded.vertices() == h.vertices() && degrees(bonded) == degrees(h) &&
                      bonded.edge_count() + 1 == h.edge_count() &&
                      isomorphic(break_bond(bonded, "fresh", bf), h);
            violations += !ok;
            ++trips;
        }
        std::vector<std::string> terminal;
        for (const auto& e : h.edges())
            if (bf.in_range(e.label)) terminal.push_back(e.id);
        if (!terminal.empty()) {
            auto id = terminal[rng.below(terminal.size())];
            auto split = break_bond(h, id, bf, std::make_pair(std::string("p"), std::string("q")));
            bool ok = sorted_degrees(split) == sorted_degrees(h) && isomorphic(bond(split, "p", "q", bf), h);
            violations += !ok;
            ++trips;
        }
    }
    return {violations == 0, std::to_string(trips) + " round trips, " + std::to_string(violations) + " violations"};
}

// Criterion 6
Outcome component_closure() {
    std::vector<BondingGrammar> grammars{pseudotori(), k_regular(2), k_regular(3), bounded_degree(2),
                                         bounded_degree(3), triangle_grammar()};
    Sampler rng(6);
    std::size_t derivations = 0, components = 0, failures = 0;
    for (; derivations < 200; ++derivations) {
        const auto& g = grammars[derivations % grammars.size()];
        auto d = random_derivation(g, 3, rng.below(10), rng);
        for (const auto& c : connected_components(d.result)) {
            ++components;
            auto cert = is_generated(g, c);
            failures += !(cert && verify_certificate(g, c, *cert));
        }
    }
    return {failures == 0, std::to_string(derivations) + " derivations, " + std::to_string(components) +
                               " components, " + std::to_string(failures) + " failures"};
}

// Random regular system. Rules are grown from pieces of the axioms' right
// ends so that most of them stick somewhere.
StickerSystem random_system(Sampler& rng) {
    StickerSystem s;
    const std::string letters = "abc";
    std::size_t sigma = 1 + rng.below(3);
    for (std::size_t i = 0; i < sigma; ++i) s.alphabet.insert(letters[i]);
    auto word = [&](std::size_t n) {
        std::string w;
        for (std::size_t i = 0; i < n; ++i) w += letters[rng.below(sigma)];
        return w;
    };
    auto piece = [&](bool left_blunt) -> std::optional<Domino> {
        std::string core = word(1 + rng.below(2));
        std::string up = core, lo = core;
        int off = 0;
        if (!left_blunt) {
            switch (rng.below(3)) {
                case 0: up = word(1) + up; off = 1; break;
                case 1: lo = word(1) + lo; off = -1; break;
                default: break;
            }
        }
        switch (rng.below(3)) {
            case 0: up += word(1); break;
            case 1: lo += word(1); break;
            default: break;
        }
        if (up.size() > 3 || lo.size() > 3) return std::nullopt;
        return Domino::make(up, lo, off);
    };
    std::size_t axioms = 1 + rng.below(3), rules = 1 + rng.below(4);
    while (s.axioms.size() < axioms)
        if (auto d = piece(true)) s.axioms.push_back(*d);
    while (s.rules.size() < rules) {
        if (rng.below(4) == 0) {
            std::string w = word(1 + rng.below(3));
            s.rules.push_back({std::nullopt, rng.coin() ? *Domino::make(w, "") : *Domino::make("", w)});
        } else if (auto d = piece(false)) {
            s.rules.push_back({std::nullopt, *d});
        }
    }
    return s;
}

// Criterion 7
Outcome embedding_theorem() {
    auto example = io::sticker_system_from_json(io::load(data("example5.json")));
    std::vector<StickerSystem> systems{example};
    Sampler rng(7);
    while (systems.size() < 21) {
        auto s = random_system(rng);
        if (sticker_generates(s, 4).size() > s.axioms.size()) systems.push_back(s);
    }
    std::size_t generated = 0, accepted = 0, rebuilt = 0, samples = 0, rejected = 0;
    std::string first_problem;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        auto report = embedding_check(systems[i], 4, i == 0 ? 20 : 5, 100 + i);
        generated += report.generated;
        accepted += report.generated_accepted;
        rebuilt += report.reconstructed;
        samples += report.samples;
        rejected += report.samples_rejected;
        if (first_problem.empty() && !report.counterexamples.empty())
            first_problem = "; system " + std::to_string(i) + ": " + report.counterexamples.front();
    }
    std::ostringstream out;
    out << systems.size() << " systems, generated accepted " << accepted << "/" << generated
        << " (rebuilt " << rebuilt << "), non-generated rejected " << rejected << "/" << samples << first_problem;
    bool ok = systems.size() >= 21 && accepted == generated && rebuilt == generated && samples >= 50 &&
              rejected == samples;
    return {ok, out.str()};
}

SimpleGraph graph(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Half the time a hidden triangle partition is planted first.
SimpleGraph random_instance(Sampler& rng) {
    int n = 3 * (1 + static_cast<int>(rng.below(4)));
    SimpleGraph g(n);
    auto try_add = [&](int u, int v) {
        if (u != v && !g.adjacent(u, v) && g.degree(u) < 5 && g.degree(v) < 5) g.add_edge(u, v);
    };
    if (rng.coin()) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.engine());
        for (int i = 0; i < n; i += 3) {
            auto at = [&](int k) { return perm[static_cast<std::size_t>(i + k)]; };
            try_add(at(0), at(1));
            try_add(at(1), at(2));
            try_add(at(0), at(2));
        }
    }
    int extra = static_cast<int>(rng.below(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < extra; ++i)
        try_add(static_cast<int>(rng.below(static_cast<std::size_t>(n))),
                static_cast<int>(rng.below(static_cast<std::size_t>(n))));
    return g;
}

// Criterion 8
Outcome triangle_equivalence() {
    std::vector<SimpleGraph> graphs{graph(3, {{0, 1}, {1, 2}, {0, 2}}),
                                    graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}),
                                    graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})};
    Sampler rng(8);
    while (graphs.size() < 103 + 100) {
        auto g = random_instance(rng);
        if (g.connected()) graphs.push_back(g);
    }
    auto tbg = triangle_grammar();
    std::size_t agree = 0, yes = 0, cert_total = 0, cert_ok = 0, largest = 0;
    for (const auto& g : graphs) {
        largest = std::max(largest, static_cast<std::size_t>(g.size()));
        auto partition = triangle_partition_oracle(g);
        auto h = encode_graph(g);
        // The generic search knows nothing about triangles.
        auto member = is_generated(tbg, h);
        agree += partition.has_value() == member.has_value();
        yes += partition.has_value();
        if (member) {
            ++cert_total;
            cert_ok += verify_certificate(tbg, h, *member);
        }
        if (partition) {
            ++cert_total;
            cert_ok += verify_certificate(tbg, h, certificate_from_partition(g, *partition));
        }
    }
    std::ostringstream out;
    out << agree << "/" << graphs.size() << " agree (" << yes << " partitionable, up to " << largest
        << " vertices), certificates verified " << cert_ok << "/" << cert_total;
    return {agree == graphs.size() && cert_ok == cert_total, out.str()};
}

// Criterion 9
Outcome torus() {
    const std::size_t n = 3;
    Hypergraph h;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h.add_vertex("g" + std::to_string(r) + std::to_string(c));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            h.add_edge("a" + std::to_string(r) + std::to_string(c), "a", {r * n + c, r * n + (c + 1) % n});
            h.add_edge("b" + std::to_string(r) + std::to_string(c), "b", {r * n + c, ((r + 1) % n) * n + c});
        }
    MembershipCertificate cert;
    for (const auto& e : h.edges()) cert.bondset.insert(e.id);
    for (const auto& v : h.vertices()) cert.components.push_back({{v}, 0});
    cert.multiplicity = {9};
    auto g = pseudotori();
    bool ok = h.edge_count() == 18 && verify_certificate(g, h, cert) && in_language(g, h);
    return {ok, "B = all 18 edges, m = (9)"};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "A/T bonding golden test", 1.0, bonding_golden},
        {2, "pseudotori derivation replay and recovery", 1.0, pseudotori_replay},
        {3, "search agrees with exhaustive oracle", 300.0, oracle_equivalence},
        {4, "degree spot checks", 300.0, degree_spot_checks},
        {5, "bond/break reversibility and degree preservation", 300.0, reversibility},
        {6, "component closure", 300.0, component_closure},
        {7, "sticker embedding at depth 4", 600.0, embedding_theorem},
        {8, "partition into triangles versus triangle grammar", 600.0, triangle_equivalence},
        {9, "3x3 torus certificate", 1.0, torus},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_time = secs < c.limit_seconds;
        bool pass = o.ok && in_time;
        failed += !pass;
        std::printf("criterion %d: %s - %s: %s [%.3fs, limit %.0fs%s]\n", c.number, pass ? "PASS" : "FAIL",
                    c.title.c_str(), o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", too slow");
        std::fflush(stdout);
    }
    return failed;
}
