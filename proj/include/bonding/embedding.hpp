#ifndef BONDING_EMBEDDING_HPP
#define BONDING_EMBEDDING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"
#include "bonding/isomorphism.hpp"
#include "bonding/membership.hpp"
#include "bonding/sticker.hpp"

namespace bonding {

// Label names of the compiled grammar. Prefixes keep alphabet letters apart
// from the strand-end and backbone labels.
namespace embedding_labels {
inline std::string base(char a) { return std::string("s:") + a; }     // a, arity 2
inline std::string bar(char a) { return std::string("bar:") + a; }    // ā, arity 2
inline std::string pair(char a) { return std::string("pair:") + a; } // ã, arity 4
inline const std::string alpha = "alpha";                              // arity 1
inline const std::string beta = "beta";                                // arity 1
inline const std::string phi = "phi";                                  // arity 2
}  // namespace embedding_labels

// Hypergraph of a nonempty domino. Every base owns a left and a right vertex
// ("U<c>.l"/"U<c>.r" upper, "L<c>.l"/"L<c>.r" lower, columns starting at 0).
//  - paired column c: pair:a attached (U.l, U.r, L.r, L.l)
//  - unpaired upper base: s:a attached (U.l, U.r)
//  - unpaired lower base: bar:a attached (L.r, L.l), i.e. right to left
//  - neighbouring bases: phi (U<c>.r, U<c+1>.l) above, (L<c+1>.l, L<c>.r) below
//  - strand ends: beta "nw" / alpha "ne" on the upper strand, alpha "sw" /
//    beta "se" on the lower strand
inline Hypergraph tau_d(const Domino& d) {
    namespace L = embedding_labels;
    Hypergraph h;
    h.declare_label({L::alpha, 1});
    h.declare_label({L::beta, 1});
    h.declare_label({L::phi, 2});
    const int shift = -d.first_column();
    const int up0 = shift;
    const int lo0 = (d.upper().empty() ? 0 : d.offset()) + shift;
    const int up1 = up0 + d.upper_len();
    const int lo1 = lo0 + d.lower_len();
    auto has_upper = [&](int c) { return c >= up0 && c < up1; };
    auto has_lower = [&](int c) { return !d.lower().empty() && c >= lo0 && c < lo1; };
    auto col = [](int c) { return std::to_string(c); };

    const int width = d.end_column() - d.first_column();
    for (int c = 0; c < width; ++c) {
        if (has_upper(c)) {
            h.add_vertex("U" + col(c) + ".l");
            h.add_vertex("U" + col(c) + ".r");
        }
        if (has_lower(c)) {
            h.add_vertex("L" + col(c) + ".l");
            h.add_vertex("L" + col(c) + ".r");
        }
    }
    for (int c = 0; c < width; ++c) {
        const std::string U = "U" + col(c), Lw = "L" + col(c);
        if (has_upper(c) && has_lower(c)) {
            char a = d.upper()[static_cast<std::size_t>(c - up0)];
            h.declare_label({L::pair(a), 4});
            h.add_edge_by_name("p" + col(c), L::pair(a), {U + ".l", U + ".r", Lw + ".r", Lw + ".l"});
        } else if (has_upper(c)) {
            char a = d.upper()[static_cast<std::size_t>(c - up0)];
            h.add_edge_by_name("u" + col(c), L::base(a), {U + ".l", U + ".r"});
        } else if (has_lower(c)) {
            char a = d.lower()[static_cast<std::size_t>(c - lo0)];
            h.add_edge_by_name("l" + col(c), L::bar(a), {Lw + ".r", Lw + ".l"});
        }
        if (has_upper(c) && has_upper(c + 1))
            h.add_edge_by_name("uf" + col(c), L::phi, {U + ".r", "U" + col(c + 1) + ".l"});
        if (has_lower(c) && has_lower(c + 1))
            h.add_edge_by_name("lf" + col(c), L::phi, {"L" + col(c + 1) + ".l", Lw + ".r"});
    }
    if (!d.upper().empty()) {
        h.add_edge_by_name("nw", L::beta, {"U" + col(up0) + ".l"});
        h.add_edge_by_name("ne", L::alpha, {"U" + col(up1 - 1) + ".r"});
    }
    if (!d.lower().empty()) {
        h.add_edge_by_name("sw", L::alpha, {"L" + col(lo0) + ".l"});
        h.add_edge_by_name("se", L::beta, {"L" + col(lo1 - 1) + ".r"});
    }
    return h;
}

// tau_d without the two left strand-end markers; defined on R_Σ.
inline Hypergraph tau_r(const Domino& d) {
    if (!d.is_r()) throw Error(ErrorCode::NotInR, to_string(d) + " is not in R");
    return remove_edges(tau_d(d), {"nw", "sw"});
}

struct StartOrigin {
    bool axiom = false;
    Domino domino;
};

struct CompiledSystem {
    BondingGrammar grammar;
    std::vector<StartOrigin> origins;  // parallel to grammar.starts()
};

// BG(S): starts {tau_r(a) : a axiom} ∪ {tau_d(d) : (λ, d) rule}, duplicates
// (up to isomorphism) collapsed.
inline CompiledSystem compile(const StickerSystem& s) {
    namespace L = embedding_labels;
    s.require_regular();
    Alphabet n{{L::alpha, 1}, {L::beta, 1}};
    Alphabet t{{L::phi, 2}};
    BondFunction bf;
    for (char a : s.alphabet) {
        n.emplace(L::base(a), 2);
        n.emplace(L::bar(a), 2);
        t.emplace(L::pair(a), 4);
        bf.add({L::base(a), 2}, {L::bar(a), 2}, {L::pair(a), 4});
    }
    bf.add({L::alpha, 1}, {L::beta, 1}, {L::phi, 2});

    std::vector<Hypergraph> starts;
    std::vector<StartOrigin> origins;
    auto add = [&](Hypergraph z, StartOrigin origin) {
        for (const auto& existing : starts)
            if (isomorphic(existing, z)) return;
        starts.push_back(std::move(z));
        origins.push_back(std::move(origin));
    };
    for (const auto& a : s.axioms) add(tau_r(a), {true, a});
    for (const auto& r : s.rules) add(tau_d(r.right), {false, r.right});
    return {BondingGrammar(std::move(starts), std::move(n), std::move(t), std::move(bf)),
            std::move(origins)};
}

// Rebuilds r from the pieces named by a certificate for tau_r(r): the single
// axiom piece followed by the rule pieces in some order that sticks to r.
inline bool reconstruct_from_certificate(const CompiledSystem& cs, const Domino& r,
                                         const MembershipCertificate& cert) {
    std::optional<Domino> axiom;
    std::vector<Domino> pieces;
    for (const auto& comp : cert.components) {
        const auto& origin = cs.origins.at(comp.start);
        if (origin.axiom) {
            if (axiom) return false;
            axiom = origin.domino;
        } else {
            pieces.push_back(origin.domino);
        }
    }
    if (!axiom) return false;
    std::vector<bool> used(pieces.size(), false);
    auto prefix = [&](const Domino& d) {
        return d.upper().size() <= r.upper().size() && d.lower().size() <= r.lower().size() &&
               r.upper().compare(0, d.upper().size(), d.upper()) == 0 &&
               r.lower().compare(0, d.lower().size(), d.lower()) == 0;
    };
    auto dfs = [&](auto&& self, const Domino& cur, std::size_t left) -> bool {
        if (left == 0) return cur == r;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (used[i]) continue;
            auto next = stick(cur, pieces[i]);
            if (!next || !prefix(*next)) continue;
            used[i] = true;
            if (self(self, *next, left - 1)) return true;
            used[i] = false;
        }
        return false;
    };
    return prefix(*axiom) && dfs(dfs, *axiom, pieces.size());
}

struct EmbeddingReport {
    std::size_t generated = 0;
    std::size_t generated_accepted = 0;
    std::size_t reconstructed = 0;
    std::size_t samples = 0;
    std::size_t samples_rejected = 0;
    std::vector<std::string> counterexamples;

    bool pass() const {
        return generated_accepted == generated && reconstructed == generated &&
               samples_rejected == samples;
    }
};

// Random R_Σ dominoes that s does not generate: fresh random ones and
// single-symbol mutations/extensions of generated ones.
inline std::vector<Domino> sample_non_generated(const StickerSystem& s,
                                                const std::set<Domino>& generated,
                                                std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<char> sigma(s.alphabet.begin(), s.alphabet.end());
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto word = [&](std::size_t len) {
        std::string w;
        for (std::size_t i = 0; i < len; ++i) w += sigma[pick(sigma.size())];
        return w;
    };
    std::vector<Domino> base(generated.begin(), generated.end());
    std::set<Domino> out;
    for (std::size_t attempt = 0; out.size() < count && attempt < count * 200; ++attempt) {
        std::optional<Domino> cand;
        if (!base.empty() && attempt % 2 == 0) {
            const Domino& g = base[pick(base.size())];
            std::string up = g.upper(), lo = g.lower();
            switch (pick(3)) {
                case 0: {  // change one symbol in both strands at a paired column
                    auto c = pick(std::min(up.size(), lo.size()));
                    char a = sigma[pick(sigma.size())];
                    up[c] = lo[c] = a;
                    break;
                }
                case 1: {  // extend the paired part
                    std::string w = word(1);
                    if (up.size() <= lo.size()) up += w;
                    if (lo.size() <= up.size() - (up.size() > lo.size() ? 1 : 0)) lo += w;
                    break;
                }
                default:  // grow a sticky end
                    if (pick(2)) up += word(1);
                    else lo += word(1);
            }
            cand = Domino::make(up, lo, 0);
        } else {
            std::string w = word(1 + pick(4));
            std::string up = w, lo = w;
            auto overhang = pick(3);
            if (overhang == 1) up += word(1 + pick(2));
            if (overhang == 2) lo += word(1 + pick(2));
            cand = Domino::make(up, lo, 0);
        }
        if (!cand || !cand->is_r() || generated.count(*cand) || out.count(*cand)) continue;
        if (sticker_derives(s, *cand)) continue;
        out.insert(*cand);
    }
    return {out.begin(), out.end()};
}

// Both directions of the embedding at desk scale: every domino generated
// within `depth` steps must map to a hypergraph of BG(S) (with a certificate
// whose pieces stick back to the domino), and sampled non-generated R_Σ
// dominoes must map to hypergraphs BG(S) does not generate.
inline EmbeddingReport embedding_check(const StickerSystem& s, std::size_t depth,
                                       std::size_t samples = 10, std::uint64_t seed = 1,
                                       const SearchOptions& options = {}) {
    EmbeddingReport report;
    auto cs = compile(s);
    auto generated = sticker_generates(s, depth);
    for (const auto& r : generated) {
        ++report.generated;
        auto cert = is_generated(cs.grammar, tau_r(r), options);
        if (!cert || !verify_certificate(cs.grammar, tau_r(r), *cert)) {
            report.counterexamples.push_back("generated but rejected: " + to_string(r));
            continue;
        }
        ++report.generated_accepted;
        if (reconstruct_from_certificate(cs, r, *cert)) {
            ++report.reconstructed;
        } else {
            report.counterexamples.push_back("certificate does not rebuild " + to_string(r));
        }
    }
    for (const auto& d : sample_non_generated(s, generated, samples, seed)) {
        ++report.samples;
        if (is_generated(cs.grammar, tau_r(d), options)) {
            report.counterexamples.push_back("not generated but accepted: " + to_string(d));
        } else {
            ++report.samples_rejected;
        }
    }
    return report;
}

}  // namespace bonding

#endif  // BONDING_EMBEDDING_HPP
