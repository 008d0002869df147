#ifndef BONDING_TRIANGLES_HPP
#define BONDING_TRIANGLES_HPP

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bonding/error.hpp"
#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"
#include "bonding/membership.hpp"

namespace bonding {

// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
    }

    int size() const { return static_cast<int>(adj_.size()); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    const std::set<int>& neighbours(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(int u, int v) const { return neighbours(u).count(v) != 0; }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < size(); ++v) d = std::max(d, degree(v));
        return d;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw Error(ErrorCode::InvalidGraph,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!edges_.emplace(u, v).second)
            throw Error(ErrorCode::InvalidGraph,
                        "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    // Components as sorted vertex lists, ordered by least vertex.
    std::vector<std::vector<int>> components() const {
        std::vector<int> comp(adj_.size(), -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < size(); ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0) continue;
            std::vector<int> members, stack{s};
            comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (int w : neighbours(v))
                    if (comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                        stack.push_back(w);
                    }
            }
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        return out;
    }

    bool connected() const { return components().size() <= 1; }

private:
    std::vector<std::set<int>> adj_;
    std::set<std::pair<int, int>> edges_;
};

// Edge-list text: first line the vertex count, then one "u v" per line.
// Blank lines and '#' comments are ignored.
inline SimpleGraph parse_edge_list(std::istream& in) {
    std::optional<SimpleGraph> g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> nums;
        long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof())
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected integers");
        if (nums.empty()) continue;
        if (!g) {
            if (nums.size() != 1)
                throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) +
                                                  ": expected the vertex count");
            g.emplace(static_cast<int>(nums[0]));
            continue;
        }
        if (nums.size() != 2)
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'u v'");
        g->add_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    if (!g) throw Error(ErrorCode::Parse, "missing vertex count");
    return *g;
}

inline std::string write_edge_list(const SimpleGraph& g) {
    std::string out = std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

using Triangle = std::array<int, 3>;

struct TrianglePartition {
    std::vector<Triangle> blocks;  // each sorted, blocks ordered by least vertex
};

inline bool is_triangle_partition(const SimpleGraph& g, const TrianglePartition& p) {
    std::vector<int> seen(static_cast<std::size_t>(g.size()), 0);
    for (const auto& t : p.blocks) {
        for (int v : t) {
            if (v < 0 || v >= g.size() || seen[static_cast<std::size_t>(v)]++) return false;
        }
        if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[0], t[2]) || !g.adjacent(t[1], t[2]))
            return false;
    }
    return p.blocks.size() * 3 == static_cast<std::size_t>(g.size());
}

namespace detail {

// Backtracking over blocks: the least uncovered vertex must share a triangle
// with two uncovered neighbours. `allowed` filters candidate vertices.
template <typename Allowed>
std::optional<TrianglePartition> find_partition(const SimpleGraph& g, Allowed allowed) {
    if (g.size() % 3 != 0) return std::nullopt;
    for (int v = 0; v < g.size(); ++v)
        if (!allowed(v)) return std::nullopt;
    std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
    TrianglePartition p;
    auto rec = [&](auto&& self, int from) -> bool {
        int v = from;
        while (v < g.size() && used[static_cast<std::size_t>(v)]) ++v;
        if (v == g.size()) return true;
        used[static_cast<std::size_t>(v)] = true;
        const auto& nb = g.neighbours(v);
        for (auto i = nb.begin(); i != nb.end(); ++i) {
            if (used[static_cast<std::size_t>(*i)]) continue;
            for (auto j = std::next(i); j != nb.end(); ++j) {
                if (used[static_cast<std::size_t>(*j)] || !g.adjacent(*i, *j)) continue;
                used[static_cast<std::size_t>(*i)] = used[static_cast<std::size_t>(*j)] = true;
                p.blocks.push_back({v, *i, *j});
                if (self(self, v + 1)) return true;
                p.blocks.pop_back();
                used[static_cast<std::size_t>(*i)] = used[static_cast<std::size_t>(*j)] = false;
            }
        }
        used[static_cast<std::size_t>(v)] = false;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return p;
}

}  // namespace detail

inline std::optional<TrianglePartition> triangle_partition_oracle(const SimpleGraph& g) {
    return detail::find_partition(g, [](int) { return true; });
}

inline std::string graph_vertex_id(int v) { return std::to_string(v); }

inline std::string graph_edge_id(int from, int to) {
    return std::to_string(from) + ">" + std::to_string(to);
}

// Each undirected edge {u, v} becomes the b-edges "u>v" and "v>u".
inline Hypergraph encode_graph(const SimpleGraph& g) {
    Hypergraph h;
    h.declare_label({"b", 2});
    for (int v = 0; v < g.size(); ++v) h.add_vertex(graph_vertex_id(v));
    for (auto [u, v] : g.edges()) {
        h.add_edge(graph_edge_id(u, v), "b", {static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
        h.add_edge(graph_edge_id(v, u), "b", {static_cast<std::size_t>(v), static_cast<std::size_t>(u)});
    }
    return h;
}

// Inverse of encode_graph up to vertex renaming: succeeds iff h consists of
// b-edges only, pairing up into opposite directions without loops or
// parallels. Vertex i of the result is h.vertex(i).
inline std::optional<SimpleGraph> decode_graph(const Hypergraph& h) {
    SimpleGraph g(static_cast<int>(h.vertex_count()));
    std::map<std::pair<std::size_t, std::size_t>, int> arrows;
    for (const auto& e : h.edges()) {
        if (e.label != "b" || e.att.size() != 2 || e.att[0] == e.att[1]) return std::nullopt;
        if (arrows[{e.att[0], e.att[1]}]++) return std::nullopt;
    }
    for (const auto& [arrow, _] : arrows) {
        auto [u, v] = arrow;
        if (!arrows.count({v, u})) return std::nullopt;
        if (u < v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

// Triangle core on tv1, tv2, tv3 with b-edges both ways, plus k_i I-edges and
// k_i O-edges on tv_i.
inline Hypergraph triangle_hypergraph(int k1, int k2, int k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0)
        throw Error(ErrorCode::InvalidGraph, "negative unary edge count");
    Hypergraph h;
    h.declare_label({"I", 1});
    h.declare_label({"O", 1});
    h.declare_label({"b", 2});
    const std::array<std::string, 3> tv{"tv1", "tv2", "tv3"};
    for (const auto& v : tv) h.add_vertex(v);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) h.add_edge("b" + std::to_string(i + 1) + std::to_string(j + 1), "b", {i, j});
    const std::array<int, 3> k{k1, k2, k3};
    for (std::size_t i = 0; i < 3; ++i)
        for (int n = 0; n < k[i]; ++n) {
            h.add_edge("i" + std::to_string(i + 1) + "." + std::to_string(n + 1), "I", {i});
            h.add_edge("o" + std::to_string(i + 1) + "." + std::to_string(n + 1), "O", {i});
        }
    return h;
}

// Start index of TH(k1, k2, k3) in triangle_grammar(): starts are listed with
// k1 <= k2 <= k3 in lexicographic order.
inline std::size_t triangle_start_index(std::array<int, 3> k) {
    std::sort(k.begin(), k.end());
    std::size_t index = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) {
                if (a == k[0] && b == k[1] && c == k[2]) return index;
                ++index;
            }
    throw Error(ErrorCode::InvalidInstance, "unary edge count above 3");
}

// I ⊗ O = b over the 20 triangle graphs.
inline BondingGrammar triangle_grammar() {
    std::vector<Hypergraph> starts;
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) starts.push_back(triangle_hypergraph(a, b, c));
    BondFunction bf;
    bf.add({"I", 1}, {"O", 1}, {"b", 2});
    return BondingGrammar(std::move(starts), {{"I", 1}, {"O", 1}}, {{"b", 2}}, bf);
}

// Chains the components C_1, ..., C_n (ordered by least vertex) by new edges
// {v_i^2, v_{i+1}^1}, v_i^1 < v_i^2 being the two least vertices of C_i.
inline SimpleGraph connectify(const SimpleGraph& g) {
    if (g.max_degree() > 4)
        throw Error(ErrorCode::InvalidInstance, "connectify needs maximum degree at most 4");
    auto comps = g.components();
    for (const auto& c : comps)
        if (c.size() < 3)
            throw Error(ErrorCode::InvalidInstance,
                        "component of vertex " + std::to_string(c.front()) +
                            " has fewer than 3 vertices");
    SimpleGraph out = g;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) out.add_edge(comps[i][1], comps[i + 1][0]);
    return out;
}

// B = every b-edge not inside a block; block vertices of degree d are matched
// to a triangle vertex with d - 2 I/O pairs.
inline MembershipCertificate certificate_from_partition(const SimpleGraph& g,
                                                        const TrianglePartition& p) {
    MembershipCertificate cert;
    cert.multiplicity.assign(20, 0);
    std::vector<int> block(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto& t = p.blocks[i];
        for (int v : t) block[static_cast<std::size_t>(v)] = static_cast<int>(i);
        ComponentAssignment a;
        for (int v : t) a.vertices.push_back(graph_vertex_id(v));
        a.start = triangle_start_index({g.degree(t[0]) - 2, g.degree(t[1]) - 2, g.degree(t[2]) - 2});
        ++cert.multiplicity[a.start];
        cert.components.push_back(std::move(a));
    }
    for (auto [u, v] : g.edges())
        if (block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(v)]) {
            cert.bondset.insert(graph_edge_id(u, v));
            cert.bondset.insert(graph_edge_id(v, u));
        }
    return cert;
}

// TBG membership. On an encoded simple graph the bonds to keep are exactly the
// triangle blocks, so a partition into triangles whose vertices have degree at
// most 5 decides it; anything else goes to the generic search.
inline std::optional<MembershipCertificate> triangle_membership(const BondingGrammar& tbg,
                                                                const Hypergraph& h,
                                                                const SearchOptions& options = {}) {
    tbg.check_labels(h);
    auto g = decode_graph(h);
    if (!g) return is_generated(tbg, h, options);
    auto p = detail::find_partition(*g, [&](int v) { return g->degree(v) <= 5; });
    if (!p) return std::nullopt;
    auto cert = certificate_from_partition(*g, *p);
    // Rename from decoded indices back to h's identifiers.
    std::set<std::string> bondset;
    for (const auto& id : cert.bondset) {
        auto gt = id.find('>');
        auto u = static_cast<std::size_t>(std::stoi(id.substr(0, gt)));
        auto v = static_cast<std::size_t>(std::stoi(id.substr(gt + 1)));
        for (const auto& e : h.edges())
            if (e.att[0] == u && e.att[1] == v) bondset.insert(e.id);
    }
    cert.bondset = std::move(bondset);
    for (auto& a : cert.components)
        for (auto& v : a.vertices) v = h.vertex(static_cast<std::size_t>(std::stoi(v)));
    return cert;
}

struct ReductionReport {
    bool oracle = false;                  // a partition into triangles exists
    bool member = false;                  // ⌜G⌝ generated by TBG (fast path)
    std::optional<bool> generic;          // generic search verdict, when run
    bool certificate_verified = false;    // certificate from the partition verifies
    std::optional<TrianglePartition> partition;
    std::optional<MembershipCertificate> certificate;

    bool agree() const {
        return oracle == member && (!generic || *generic == member) &&
               (!oracle || certificate_verified);
    }
};

inline void require_instance(const SimpleGraph& g) {
    if (!g.connected()) throw Error(ErrorCode::InvalidInstance, "graph is not connected");
    if (g.max_degree() > 5) throw Error(ErrorCode::InvalidInstance, "maximum degree exceeds 5");
}

// Oracle versus membership on a connected graph of maximum degree <= 5.
// With `generic`, the generic search is run as well.
inline ReductionReport reduction_check(const SimpleGraph& g, bool generic = false,
                                     const SearchOptions& options = {}) {
    require_instance(g);
    static const BondingGrammar tbg = triangle_grammar();
    ReductionReport r;
    Hypergraph h = encode_graph(g);
    r.partition = triangle_partition_oracle(g);
    r.oracle = r.partition.has_value();
    if (r.partition) {
        r.certificate = certificate_from_partition(g, *r.partition);
        r.certificate_verified = verify_certificate(tbg, h, *r.certificate);
    }
    auto member = triangle_membership(tbg, h, options);
    r.member = member.has_value();
    if (member && !r.certificate) r.certificate = member;
    if (generic) r.generic = is_generated(tbg, h, options).has_value();
    return r;
}

}  // namespace bonding

#endif  // BONDING_TRIANGLES_HPP
