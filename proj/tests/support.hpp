// Builders and brute-force reference checks shared by the test binaries. The
// references here are deliberately naive and share no code with the library's
// search routines.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bonding/bonding.hpp"

namespace testing_support {

using namespace bonding;

// Strand u1 -l1-> u2 -l2-> u3 -l3-> u4 with the given prefix for vertex ids.
inline void add_strand(Hypergraph& h, const std::string& prefix, const std::vector<std::string>& labels,
                       const std::string& edge_prefix) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i <= labels.size(); ++i) v.push_back(h.add_vertex(prefix + std::to_string(i + 1)));
    for (std::size_t i = 0; i < labels.size(); ++i)
        h.add_edge(edge_prefix + std::to_string(i + 1), labels[i], {v[i], v[i + 1]});
}

// GAC over CTG, before any bonding.
inline Hypergraph dna_strands() {
    Hypergraph h;
    add_strand(h, "u", {"G", "A", "C"}, "eu");
    add_strand(h, "l", {"C", "T", "G"}, "el");
    return h;
}

inline BondFunction dna_bonds() {
    BondFunction bf;
    bf.add({"A", 2}, {"T", 2}, {"A*T", 4});
    bf.add({"C", 2}, {"G", 2}, {"C*G", 4});
    return bf;
}

// Directed graph with b-edges "e<i>" for the given arrows.
inline Hypergraph digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                          const std::string& label = "b") {
    Hypergraph h;
    h.declare_label({label, 2});
    for (std::size_t i = 0; i < n; ++i) h.add_vertex("x" + std::to_string(i));
    for (std::size_t i = 0; i < arrows.size(); ++i)
        h.add_edge("e" + std::to_string(i), label, {arrows[i].first, arrows[i].second});
    return h;
}

// n x n wraparound grid: a-edges to the right, b-edges upward.
inline Hypergraph torus(std::size_t n) {
    Hypergraph h;
    h.declare_label({"a", 2});
    h.declare_label({"b", 2});
    auto id = [&](std::size_t r, std::size_t c) { return r * n + c; };
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h.add_vertex("g" + std::to_string(r) + "_" + std::to_string(c));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            h.add_edge("a" + std::to_string(r) + "_" + std::to_string(c), "a", {id(r, c), id(r, (c + 1) % n)});
            h.add_edge("b" + std::to_string(r) + "_" + std::to_string(c), "b", {id(r, c), id((r + 1) % n, c)});
        }
    return h;
}

// Exhaustive isomorphism: every vertex bijection, then multiset equality of
// (label, mapped attachment).
inline bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    using Key = std::pair<std::string, std::vector<std::size_t>>;
    std::multiset<Key> target;
    for (const auto& e : b.edges()) target.insert({e.label, e.att});
    std::vector<std::size_t> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        std::multiset<Key> image;
        for (const auto& e : a.edges()) {
            std::vector<std::size_t> att;
            for (auto v : e.att) att.push_back(perm[v]);
            image.insert({e.label, att});
        }
        if (image == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Checks that a witness maps labels and attachments exactly.
inline bool valid_witness(const Hypergraph& a, const Hypergraph& b, const IsoMapping& m) {
    if (m.vertices.size() != a.vertex_count() || m.edges.size() != a.edge_count()) return false;
    std::set<std::string> vimg, eimg;
    for (const auto& [x, y] : m.vertices) vimg.insert(y);
    for (const auto& [x, y] : m.edges) eimg.insert(y);
    if (vimg.size() != b.vertex_count() || eimg.size() != b.edge_count()) return false;
    for (const auto& e : a.edges()) {
        const auto& f = b.edge(b.edge_at(m.edges.at(e.id)));
        if (f.label != e.label || f.att.size() != e.att.size()) return false;
        for (std::size_t i = 0; i < e.att.size(); ++i)
            if (b.vertex(f.att[i]) != m.vertices.at(a.vertex(e.att[i]))) return false;
    }
    return true;
}

// Bond-set enumeration with brute-force isomorphism; independent of
// membership_oracle. Only for very small inputs.
inline bool brute_generated(const BondingGrammar& g, const Hypergraph& h) {
    std::vector<std::string> breakable;
    for (const auto& e : h.edges())
        if (g.bond_function().in_range(e.label)) breakable.push_back(e.id);
    for (std::size_t mask = 0; mask < (std::size_t{1} << breakable.size()); ++mask) {
        std::set<std::string> b;
        for (std::size_t i = 0; i < breakable.size(); ++i)
            if (mask >> i & 1) b.insert(breakable[i]);
        Hypergraph broken = break_bonds(h, b, g.bond_function());
        bool ok = true;
        for (const auto& c : connected_components(broken)) {
            bool any = false;
            for (const auto& z : g.starts())
                if (brute_isomorphic(c, z)) {
                    any = true;
                    break;
                }
            if (!any) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Random hypergraph over labels p/1, q/2, r/2, s/3 with up to `max_v`
// vertices and `max_e` edges.
inline Hypergraph random_hypergraph(Sampler& rng, std::size_t max_v, std::size_t max_e) {
    static const std::vector<Label> labels{{"p", 1}, {"q", 2}, {"r", 2}, {"s", 3}};
    Hypergraph h;
    std::size_t n = 1 + rng.below(max_v);
    std::size_t m = rng.below(max_e + 1);
    for (std::size_t i = 0; i < n; ++i) h.add_vertex("n" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& l = labels[rng.below(labels.size())];
        std::vector<std::size_t> att;
        for (std::size_t k = 0; k < l.arity; ++k) att.push_back(rng.below(n));
        h.add_edge("f" + std::to_string(i), l.name, att);
    }
    return h;
}

// Same structure, vertices and edges shuffled and renamed.
inline Hypergraph shuffled(const Hypergraph& h, Sampler& rng) {
    std::vector<std::size_t> perm(h.vertex_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<std::size_t> eorder(h.edge_count());
    std::iota(eorder.begin(), eorder.end(), std::size_t{0});
    std::shuffle(eorder.begin(), eorder.end(), rng.engine());
    Hypergraph out;
    std::vector<std::size_t> where(h.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = out.add_vertex("s" + std::to_string(i));
    for (std::size_t i = 0; i < eorder.size(); ++i) {
        const auto& e = h.edge(eorder[i]);
        std::vector<std::size_t> att;
        for (auto v : e.att) att.push_back(where[v]);
        out.add_edge("t" + std::to_string(i), e.label, att);
    }
    return out;
}

}  // namespace testing_support
