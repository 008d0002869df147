#ifndef BONDING_MEMBERSHIP_HPP
#define BONDING_MEMBERSHIP_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"
#include "bonding/isomorphism.hpp"

namespace bonding {

// One connected component of the hypergraph obtained by breaking the bond set,
// identified by its vertex identifiers, and the start it is a copy of
// (0-based index into Z).
struct ComponentAssignment {
    std::vector<std::string> vertices;
    std::size_t start = 0;
};

struct MembershipCertificate {
    std::set<std::string> bondset;
    std::vector<ComponentAssignment> components;
    MultiplicityVector multiplicity;
};

// Polynomial check: break every edge of B, then every component must be a
// copy of its assigned start and the multiplicities must match the assignment.
inline bool verify_certificate(const BondingGrammar& g, const Hypergraph& h,
                               const MembershipCertificate& c) {
    try {
        g.check_labels(h);
        for (const auto& id : c.bondset)
            if (!h.find_edge(id) || !g.bond_function().in_range(h.edge(h.edge_at(id)).label))
                return false;
        if (c.multiplicity.size() != g.size()) return false;
        MultiplicityVector counted(g.size(), 0);
        for (const auto& a : c.components) {
            if (a.start >= g.size()) return false;
            ++counted[a.start];
        }
        if (counted != c.multiplicity) return false;

        Hypergraph broken = break_bonds(h, c.bondset, g.bond_function());
        auto comps = component_index(broken);
        if (comps.size() != c.components.size()) return false;
        std::vector<bool> used(c.components.size(), false);
        for (const auto& comp : comps) {
            std::set<std::string> ids;
            for (auto v : comp.vertices) ids.insert(broken.vertex(v));
            Hypergraph piece = induced(broken, comp.vertices, comp.edges);
            // Components are keyed by vertex set; vertex-less ones (nullary
            // edges) are matched greedily, which is exact since isomorphism is
            // an equivalence.
            bool matched = false;
            for (std::size_t i = 0; i < c.components.size() && !matched; ++i) {
                if (used[i]) continue;
                const auto& a = c.components[i];
                if (std::set<std::string>(a.vertices.begin(), a.vertices.end()) != ids) continue;
                if (!isomorphic(piece, g.start(a.start))) {
                    if (!ids.empty()) return false;
                    continue;
                }
                used[i] = true;
                matched = true;
            }
            if (!matched) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace detail {

// Shared label interning of a grammar's starts.
struct CompactGrammar {
    LabelTable labels;
    std::vector<CompactGraph> starts;
    std::vector<int> split;  // per label id: arity of the left half, -1 if unbreakable
    std::vector<int> left;
    std::vector<int> right;

    explicit CompactGrammar(const BondingGrammar& g) {
        for (const auto& [name, _] : g.nonterminals()) labels.intern(name);
        for (const auto& [name, _] : g.terminals()) labels.intern(name);
        for (const auto& z : g.starts()) starts.push_back(compact(z, labels));
        split.assign(labels.size(), -1);
        left.assign(labels.size(), -1);
        right.assign(labels.size(), -1);
        for (const auto& entry : g.bond_function().entries()) {
            auto id = static_cast<std::size_t>(*labels.find(entry.result.name));
            split[id] = static_cast<int>(entry.left.arity);
            left[id] = *labels.find(entry.left.name);
            right[id] = *labels.find(entry.right.name);
        }
    }

    bool breakable(int label) const { return split[static_cast<std::size_t>(label)] >= 0; }

    // Index of a start isomorphic to `piece`, if any.
    std::optional<std::size_t> match(const CompactGraph& piece) const {
        for (std::size_t i = 0; i < starts.size(); ++i) {
            const auto& z = starts[i];
            if (z.vertices != piece.vertices || z.edge_count() != piece.edge_count()) continue;
            if (find_isomorphism(piece, z)) return i;
        }
        return std::nullopt;
    }
};

inline MembershipCertificate make_certificate(const BondingGrammar& g, const Hypergraph& h,
                                              std::set<std::string> bondset) {
    MembershipCertificate cert;
    cert.bondset = std::move(bondset);
    cert.multiplicity.assign(g.size(), 0);
    Hypergraph broken = break_bonds(h, cert.bondset, g.bond_function());
    for (const auto& comp : component_index(broken)) {
        Hypergraph piece = induced(broken, comp.vertices, comp.edges);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (isomorphic(piece, g.start(i))) {
                ComponentAssignment a;
                for (auto v : comp.vertices) a.vertices.push_back(broken.vertex(v));
                a.start = i;
                cert.components.push_back(std::move(a));
                ++cert.multiplicity[i];
                break;
            }
        }
    }
    return cert;
}

}  // namespace detail

// Reference decider: tries every subset of breakable edges (edges ordered by
// identifier, subsets in increasing binary order). Exponential; bounded.
inline std::optional<MembershipCertificate> membership_oracle(const BondingGrammar& g,
                                                              const Hypergraph& h,
                                                              std::size_t bound = 20) {
    g.check_labels(h);
    const auto& bf = g.bond_function();
    std::vector<std::size_t> breakable;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (bf.in_range(h.edge(e).label)) breakable.push_back(e);
    std::sort(breakable.begin(), breakable.end(),
              [&](auto a, auto b) { return h.edge(a).id < h.edge(b).id; });
    if (breakable.size() > bound)
        throw Error(ErrorCode::BoundExceeded, std::to_string(breakable.size()) +
                                                  " breakable edges exceed the oracle bound " +
                                                  std::to_string(bound));
    detail::CompactGrammar cg(g);
    auto host = compact(h, cg.labels);
    const std::uint64_t subsets = std::uint64_t{1} << breakable.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        // Hypergraph after breaking the chosen edges.
        CompactGraph broken;
        broken.vertices = host.vertices;
        std::vector<bool> chosen(h.edge_count(), false);
        for (std::size_t k = 0; k < breakable.size(); ++k)
            if (mask >> k & 1) chosen[breakable[k]] = true;
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            int lab = host.label[e];
            const auto& att = host.att[e];
            if (!chosen[e]) {
                broken.label.push_back(lab);
                broken.att.push_back(att);
                continue;
            }
            auto split = static_cast<long>(cg.split[static_cast<std::size_t>(lab)]);
            broken.label.push_back(cg.left[static_cast<std::size_t>(lab)]);
            broken.att.emplace_back(att.begin(), att.begin() + split);
            broken.label.push_back(cg.right[static_cast<std::size_t>(lab)]);
            broken.att.emplace_back(att.begin() + split, att.end());
        }
        // Components via union-find, then each must match some start.
        detail::DisjointSets sets(static_cast<std::size_t>(broken.vertices));
        for (const auto& att : broken.att)
            for (std::size_t i = 1; i < att.size(); ++i)
                sets.unite(static_cast<std::size_t>(att[0]), static_cast<std::size_t>(att[i]));
        std::map<std::size_t, std::vector<int>> members;
        for (int v = 0; v < broken.vertices; ++v)
            members[sets.find(static_cast<std::size_t>(v))].push_back(v);
        std::map<std::size_t, std::vector<std::size_t>> edges_of;
        std::vector<std::size_t> nullary;
        for (std::size_t e = 0; e < broken.edge_count(); ++e) {
            if (broken.att[e].empty()) nullary.push_back(e);
            else edges_of[sets.find(static_cast<std::size_t>(broken.att[e][0]))].push_back(e);
        }
        bool ok = true;
        auto check_piece = [&](const std::vector<int>& verts, const std::vector<std::size_t>& es) {
            std::vector<int> local(static_cast<std::size_t>(broken.vertices), -1);
            CompactGraph piece;
            piece.vertices = static_cast<int>(verts.size());
            for (std::size_t i = 0; i < verts.size(); ++i)
                local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
            for (auto e : es) {
                piece.label.push_back(broken.label[e]);
                std::vector<int> att;
                for (auto v : broken.att[e]) att.push_back(local[static_cast<std::size_t>(v)]);
                piece.att.push_back(std::move(att));
            }
            return cg.match(piece).has_value();
        };
        for (const auto& [root, verts] : members) {
            if (!check_piece(verts, edges_of[root])) { ok = false; break; }
        }
        for (std::size_t i = 0; ok && i < nullary.size(); ++i)
            ok = check_piece({}, {nullary[i]});
        if (!ok) continue;
        std::set<std::string> bondset;
        for (std::size_t k = 0; k < breakable.size(); ++k)
            if (mask >> k & 1) bondset.insert(h.edge(breakable[k]).id);
        return detail::make_certificate(g, h, std::move(bondset));
    }
    return std::nullopt;
}

// Necessary conditions for the existence of a bond set: (a) the degree set of
// h lies within the union of the start degree sets, (b) some m and some number
// x_t of broken edges per terminal t reproduce the label counts and the vertex
// count of m . Z. Given m, every x_t is determined, so only m is enumerated.
inline bool prune_feasibility(const BondingGrammar& g, const Hypergraph& h,
                              std::size_t node_cap = 2'000'000) {
    g.check_labels(h);
    std::set<std::size_t> allowed;
    for (const auto& z : g.starts()) {
        auto d = degree_set(z);
        allowed.insert(d.begin(), d.end());
    }
    for (auto d : degree_set(h))
        if (!allowed.count(d)) return false;

    const auto& bf = g.bond_function();
    std::vector<std::string> names;
    for (const auto& [n, _] : g.nonterminals()) names.push_back(n);
    for (const auto& [n, _] : g.terminals()) names.push_back(n);
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < names.size(); ++i) slot[names[i]] = i;
    const std::size_t L = names.size();

    std::vector<long> have(L, 0);
    for (const auto& e : h.edges()) ++have[slot.at(e.label)];
    // Upper bound on the count of each label after breaking.
    std::vector<long> upper = have;
    for (const auto& entry : bf.entries()) {
        long c = have[slot.at(entry.result.name)];
        upper[slot.at(entry.left.name)] += c;
        upper[slot.at(entry.right.name)] += c;
    }
    std::vector<std::vector<long>> per_start;
    std::vector<long> start_vertices;
    for (const auto& z : g.starts()) {
        std::vector<long> cnt(L, 0);
        for (const auto& e : z.edges()) ++cnt[slot.at(e.label)];
        per_start.push_back(std::move(cnt));
        start_vertices.push_back(static_cast<long>(z.vertex_count()));
    }
    const long total_vertices = static_cast<long>(h.vertex_count());

    auto feasible_leaf = [&](const std::vector<long>& target) {
        std::vector<long> x(L, 0);
        for (const auto& [name, _] : g.terminals()) {
            auto t = slot.at(name);
            if (bf.in_range(name)) {
                x[t] = have[t] - target[t];
                if (x[t] < 0 || x[t] > have[t]) return false;
            } else if (target[t] != have[t]) {
                return false;
            }
        }
        std::vector<long> expect(L, 0);
        for (const auto& [name, _] : g.nonterminals()) expect[slot.at(name)] = have[slot.at(name)];
        for (const auto& entry : bf.entries()) {
            long c = x[slot.at(entry.result.name)];
            expect[slot.at(entry.left.name)] += c;
            expect[slot.at(entry.right.name)] += c;
        }
        for (const auto& [name, _] : g.nonterminals())
            if (expect[slot.at(name)] != target[slot.at(name)]) return false;
        return true;
    };

    std::size_t nodes = 0;
    bool capped = false;
    std::vector<long> target(L, 0);
    auto dfs = [&](auto&& self, std::size_t i, long vertices_left) -> bool {
        if (++nodes > node_cap) { capped = true; return true; }
        if (i == per_start.size()) return vertices_left == 0 && feasible_leaf(target);
        const auto& cnt = per_start[i];
        long max_m = -1;
        if (start_vertices[i] > 0) max_m = vertices_left / start_vertices[i];
        for (std::size_t l = 0; l < L; ++l) {
            if (cnt[l] == 0) continue;
            long room = (upper[l] - target[l]) / cnt[l];
            max_m = max_m < 0 ? room : std::min(max_m, room);
        }
        if (max_m < 0) max_m = 0;  // the empty hypergraph as a start contributes nothing
        for (long m = 0; m <= max_m; ++m) {
            for (std::size_t l = 0; l < L; ++l) target[l] += m * cnt[l];
            bool found = self(self, i + 1, vertices_left - m * start_vertices[i]);
            for (std::size_t l = 0; l < L; ++l) target[l] -= m * cnt[l];
            if (found) return true;
        }
        return false;
    };
    bool ok = dfs(dfs, 0, total_vertices);
    return ok || capped;
}

struct SearchOptions {
    bool prefilter = true;          // run prune_feasibility first
    std::size_t node_limit = 0;     // 0 = unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

// Depth-first keep/break decision over the breakable edges, visited in
// breadth-first order of the host (vertices by identifier), which lets
// components close early. Two prunings: the (label, position) incidence
// multiset of every vertex must still be completable to that of some start
// vertex, and any component that no undecided edge touches must be isomorphic
// to a start. A third bounds every partial component from below: the
// vertices it must contain and the edges already fixed in it have to fit
// into some start.
class MembershipSearch {
public:
    MembershipSearch(const BondingGrammar& g, const Hypergraph& h, const SearchOptions& options)
        : grammar_(g), host_graph_(h), options_(options), cg_(g) {
        host_ = compact(h, cg_.labels);
        inc_.assign(static_cast<std::size_t>(host_.vertices), {});
        for (std::size_t e = 0; e < host_.edge_count(); ++e)
            for (std::size_t p = 0; p < host_.att[e].size(); ++p)
                inc_[static_cast<std::size_t>(host_.att[e][p])].push_back(
                    {static_cast<int>(e), static_cast<int>(p)});
        state_.assign(host_.edge_count(), Kept);
        for (std::size_t e = 0; e < host_.edge_count(); ++e)
            if (cg_.breakable(host_.label[e])) state_[e] = Undecided;
        for (const auto& z : cg_.starts) {
            std::vector<std::vector<Code>> sigs(static_cast<std::size_t>(z.vertices));
            for (std::size_t e = 0; e < z.edge_count(); ++e)
                for (std::size_t p = 0; p < z.att[e].size(); ++p)
                    sigs[static_cast<std::size_t>(z.att[e][p])].push_back(code(z.label[e], static_cast<int>(p)));
            for (auto& s : sigs) {
                std::sort(s.begin(), s.end());
                auto& bucket = by_degree_[s.size()];
                if (std::find(bucket.begin(), bucket.end(), s) == bucket.end()) bucket.push_back(s);
            }
        }
        for (const auto& z : cg_.starts) {
            std::vector<int> counts(cg_.labels.size(), 0);
            for (int l : z.label) ++counts[static_cast<std::size_t>(l)];
            start_counts_.push_back(std::move(counts));
        }
        plan_order();
    }

    std::optional<MembershipCertificate> run() {
        for (int v = 0; v < host_.vertices; ++v)
            if (!vertex_ok(v) || !component_ok(v)) return std::nullopt;
        return dfs(0);
    }

    std::size_t nodes() const { return nodes_; }

private:
    enum State : char { Undecided, Kept, Broken };
    using Code = std::uint64_t;

    static Code code(int label, int pos) {
        return (static_cast<Code>(label) << 20) | static_cast<Code>(pos);
    }

    Code incidence(int e, int p) const {
        auto ue = static_cast<std::size_t>(e);
        int lab = host_.label[ue];
        if (state_[ue] != Broken) return code(lab, p);
        int split = cg_.split[static_cast<std::size_t>(lab)];
        if (p < split) return code(cg_.left[static_cast<std::size_t>(lab)], p);
        return code(cg_.right[static_cast<std::size_t>(lab)], p - split);
    }

    void plan_order() {
        std::vector<int> by_id(static_cast<std::size_t>(host_.vertices));
        std::iota(by_id.begin(), by_id.end(), 0);
        std::sort(by_id.begin(), by_id.end(), [&](int a, int b) {
            return host_graph_.vertex(static_cast<std::size_t>(a)) <
                   host_graph_.vertex(static_cast<std::size_t>(b));
        });
        std::vector<bool> seen(static_cast<std::size_t>(host_.vertices), false);
        std::vector<bool> queued(host_.edge_count(), false);
        for (int root : by_id) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            std::vector<int> queue{root};
            seen[static_cast<std::size_t>(root)] = true;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                auto incident = inc_[static_cast<std::size_t>(v)];
                std::sort(incident.begin(), incident.end(), [&](auto a, auto b) {
                    return host_graph_.edge(static_cast<std::size_t>(a.first)).id <
                           host_graph_.edge(static_cast<std::size_t>(b.first)).id;
                });
                for (auto [e, p] : incident) {
                    auto ue = static_cast<std::size_t>(e);
                    if (state_[ue] == Undecided && !queued[ue]) {
                        queued[ue] = true;
                        order_.push_back(e);
                    }
                    for (int u : host_.att[ue])
                        if (!seen[static_cast<std::size_t>(u)]) {
                            seen[static_cast<std::size_t>(u)] = true;
                            queue.push_back(u);
                        }
                }
            }
        }
        std::vector<int> rest;
        for (std::size_t e = 0; e < host_.edge_count(); ++e)
            if (state_[e] == Undecided && !queued[e]) rest.push_back(static_cast<int>(e));
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            return host_graph_.edge(static_cast<std::size_t>(a)).id <
                   host_graph_.edge(static_cast<std::size_t>(b)).id;
        });
        order_.insert(order_.end(), rest.begin(), rest.end());
    }

    bool vertex_ok(int v) const {
        const auto& incident = inc_[static_cast<std::size_t>(v)];
        auto bucket = by_degree_.find(incident.size());
        if (bucket == by_degree_.end()) return false;
        std::vector<Code> fixed;
        std::vector<int> open;  // undecided edges at v, each once
        for (auto [e, p] : incident) {
            if (state_[static_cast<std::size_t>(e)] == Undecided) {
                if (std::find(open.begin(), open.end(), e) == open.end()) open.push_back(e);
            } else {
                fixed.push_back(incidence(e, p));
            }
        }
        std::sort(fixed.begin(), fixed.end());
        constexpr std::size_t kExhaustive = 12;
        for (const auto& sig : bucket->second) {
            std::vector<Code> rest;
            if (!multiset_minus(sig, fixed, rest)) continue;
            if (open.empty() || open.size() > kExhaustive) return true;
            if (completable(v, open, rest)) return true;
        }
        return false;
    }

    static bool multiset_minus(const std::vector<Code>& big, const std::vector<Code>& small,
                               std::vector<Code>& out) {
        std::size_t j = 0;
        for (auto c : big) {
            if (j < small.size() && small[j] == c) {
                ++j;
            } else if (j < small.size() && small[j] < c) {
                return false;
            } else {
                out.push_back(c);
            }
        }
        return j == small.size();
    }

    // Can the undecided edges at v be kept/broken so that they contribute
    // exactly `need`?
    bool completable(int v, const std::vector<int>& open, const std::vector<Code>& need) const {
        const std::size_t n = open.size();
        std::vector<std::vector<Code>> keep(n), brk(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto ue = static_cast<std::size_t>(open[i]);
            int lab = host_.label[ue];
            int split = cg_.split[static_cast<std::size_t>(lab)];
            const auto& att = host_.att[ue];
            for (std::size_t p = 0; p < att.size(); ++p) {
                if (att[p] != v) continue;
                int ip = static_cast<int>(p);
                keep[i].push_back(code(lab, ip));
                brk[i].push_back(ip < split ? code(cg_.left[static_cast<std::size_t>(lab)], ip)
                                            : code(cg_.right[static_cast<std::size_t>(lab)], ip - split));
            }
        }
        std::vector<Code> got;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            got.clear();
            for (std::size_t i = 0; i < n; ++i) {
                const auto& part = (mask >> i & 1) ? brk[i] : keep[i];
                got.insert(got.end(), part.begin(), part.end());
            }
            if (got.size() != need.size()) continue;
            std::sort(got.begin(), got.end());
            if (got == need) return true;
        }
        return false;
    }

    // If the component of v is closed (no undecided edge can still change it),
    // it must be isomorphic to some start.
    bool component_ok(int v) const {
        std::vector<int> verts{v};
        std::vector<char> seen(static_cast<std::size_t>(host_.vertices), 0);
        seen[static_cast<std::size_t>(v)] = 1;
        // (edge, half) pieces; half = -1 for an unbroken edge.
        std::vector<std::pair<int, int>> pieces;
        std::set<std::pair<int, int>> piece_seen;
        for (std::size_t head = 0; head < verts.size(); ++head) {
            int u = verts[head];
            for (auto [e, p] : inc_[static_cast<std::size_t>(u)]) {
                auto ue = static_cast<std::size_t>(e);
                if (state_[ue] == Undecided) return true;
                const auto& att = host_.att[ue];
                std::size_t lo = 0, hi = att.size();
                int half = -1;
                if (state_[ue] == Broken) {
                    auto split = static_cast<std::size_t>(cg_.split[static_cast<std::size_t>(host_.label[ue])]);
                    half = static_cast<std::size_t>(p) < split ? 0 : 1;
                    if (half == 0) hi = split;
                    else lo = split;
                }
                if (piece_seen.insert({e, half}).second) pieces.push_back({e, half});
                for (std::size_t i = lo; i < hi; ++i) {
                    int w = att[i];
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        verts.push_back(w);
                    }
                }
            }
        }
        std::map<int, int> local;
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        CompactGraph piece;
        piece.vertices = static_cast<int>(verts.size());
        for (auto [e, half] : pieces) {
            auto ue = static_cast<std::size_t>(e);
            int lab = host_.label[ue];
            const auto& att = host_.att[ue];
            std::size_t lo = 0, hi = att.size();
            if (half >= 0) {
                auto split = static_cast<std::size_t>(cg_.split[static_cast<std::size_t>(lab)]);
                if (half == 0) { hi = split; lab = cg_.left[static_cast<std::size_t>(lab)]; }
                else { lo = split; lab = cg_.right[static_cast<std::size_t>(lab)]; }
            }
            std::vector<int> local_att;
            for (std::size_t i = lo; i < hi; ++i) local_att.push_back(local.at(att[i]));
            piece.label.push_back(lab);
            piece.att.push_back(std::move(local_att));
        }
        return cg_.match(piece).has_value();
    }

    // Kept edges join all their attachments; broken and undecided edges at
    // least join the attachments within each half.
    bool size_ok(int v) const {
        std::vector<int> verts{v};
        std::vector<char> seen(static_cast<std::size_t>(host_.vertices), 0);
        seen[static_cast<std::size_t>(v)] = 1;
        std::set<std::pair<int, int>> pieces;
        std::vector<int> counts(cg_.labels.size(), 0);
        for (std::size_t head = 0; head < verts.size(); ++head) {
            int u = verts[head];
            for (auto [e, p] : inc_[static_cast<std::size_t>(u)]) {
                auto ue = static_cast<std::size_t>(e);
                int lab = host_.label[ue];
                const auto& att = host_.att[ue];
                std::size_t lo = 0, hi = att.size();
                int half = -1;
                if (state_[ue] != Kept) {
                    auto split = static_cast<std::size_t>(cg_.split[static_cast<std::size_t>(lab)]);
                    half = static_cast<std::size_t>(p) < split ? 0 : 1;
                    if (half == 0) hi = split;
                    else lo = split;
                    if (state_[ue] == Broken)
                        lab = half == 0 ? cg_.left[static_cast<std::size_t>(lab)]
                                        : cg_.right[static_cast<std::size_t>(lab)];
                }
                if (state_[ue] != Undecided && pieces.insert({e, half}).second)
                    ++counts[static_cast<std::size_t>(lab)];
                for (std::size_t i = lo; i < hi; ++i) {
                    int w = att[i];
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        verts.push_back(w);
                    }
                }
            }
        }
        for (std::size_t i = 0; i < cg_.starts.size(); ++i) {
            const auto& z = cg_.starts[i];
            if (static_cast<std::size_t>(z.vertices) < verts.size() || z.edge_count() < pieces.size())
                continue;
            bool fits = true;
            for (std::size_t l = 0; l < counts.size() && fits; ++l)
                fits = counts[l] <= start_counts_[i][l];
            if (fits) return true;
        }
        return false;
    }

    void tick() {
        ++nodes_;
        if (options_.node_limit && nodes_ > options_.node_limit)
            throw Error(ErrorCode::SearchAborted,
                        "node limit " + std::to_string(options_.node_limit) + " reached");
        if (options_.deadline && (nodes_ & 0xff) == 0 &&
            std::chrono::steady_clock::now() > *options_.deadline)
            throw Error(ErrorCode::SearchAborted, "deadline reached");
    }

    bool consistent_after(int e) const {
        std::vector<int> touched(host_.att[static_cast<std::size_t>(e)]);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int v : touched)
            if (!vertex_ok(v) || !size_ok(v) || !component_ok(v)) return false;
        return true;
    }

    std::optional<MembershipCertificate> dfs(std::size_t k) {
        tick();
        if (k == order_.size()) return leaf();
        int e = order_[k];
        auto ue = static_cast<std::size_t>(e);
        for (State choice : {Kept, Broken}) {
            state_[ue] = choice;
            if (consistent_after(e))
                if (auto found = dfs(k + 1)) return found;
        }
        state_[ue] = Undecided;
        return std::nullopt;
    }

    std::optional<MembershipCertificate> leaf() const {
        std::set<std::string> bondset;
        for (std::size_t e = 0; e < host_.edge_count(); ++e)
            if (state_[e] == Broken) bondset.insert(host_graph_.edge(e).id);
        auto cert = make_certificate(grammar_, host_graph_, std::move(bondset));
        if (!verify_certificate(grammar_, host_graph_, cert)) return std::nullopt;
        return cert;
    }

    const BondingGrammar& grammar_;
    const Hypergraph& host_graph_;
    SearchOptions options_;
    CompactGrammar cg_;
    CompactGraph host_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
    std::vector<State> state_;
    std::vector<int> order_;
    std::map<std::size_t, std::vector<std::vector<Code>>> by_degree_;
    std::vector<std::vector<int>> start_counts_;
    std::size_t nodes_ = 0;
};

}  // namespace detail

inline std::optional<MembershipCertificate> is_generated(const BondingGrammar& g,
                                                         const Hypergraph& h,
                                                         const SearchOptions& options = {}) {
    g.check_labels(h);
    if (h.empty()) return MembershipCertificate{{}, {}, MultiplicityVector(g.size(), 0)};
    if (options.prefilter && !prune_feasibility(g, h)) return std::nullopt;
    return detail::MembershipSearch(g, h, options).run();
}

// Member of L(BG): terminal labels only, and generated.
inline bool in_language(const BondingGrammar& g, const Hypergraph& h,
                        const SearchOptions& options = {}) {
    try {
        g.check_labels(h);
    } catch (const Error&) {
        return false;
    }
    return g.terminal_only(h) && is_generated(g, h, options).has_value();
}

}  // namespace bonding

#endif  // BONDING_MEMBERSHIP_HPP
