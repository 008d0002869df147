#ifndef BONDING_HYPERGRAPH_HPP
#define BONDING_HYPERGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bonding/error.hpp"

namespace bonding {

struct Label {
    std::string name;
    std::size_t arity = 0;

    friend auto operator<=>(const Label&, const Label&) = default;
};

// Name -> arity. Names are unique, so a map is the natural typed alphabet.
using Alphabet = std::map<std::string, std::size_t>;

inline void add_label(Alphabet& alphabet, const Label& label) {
    auto [it, inserted] = alphabet.emplace(label.name, label.arity);
    if (!inserted && it->second != label.arity)
        throw Error(ErrorCode::LabelConflict, "label '" + label.name + "' declared with arities " +
                                                  std::to_string(it->second) + " and " +
                                                  std::to_string(label.arity));
}

// Directed, labeled hypergraph with ordered attachment sequences. Vertices and
// edges carry opaque string identifiers; internally they are addressed by
// position. Attachments may repeat vertices.
class Hypergraph {
public:
    struct Edge {
        std::string id;
        std::string label;
        std::vector<std::size_t> att;
    };

    Hypergraph() = default;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty() && edges_.empty(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
    const Alphabet& labels() const { return labels_; }

    std::optional<std::size_t> find_vertex(std::string_view id) const {
        auto it = vertex_index_.find(std::string(id));
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find_edge(std::string_view id) const {
        auto it = edge_index_.find(std::string(id));
        if (it == edge_index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t vertex_at(std::string_view id) const {
        if (auto v = find_vertex(id)) return *v;
        throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(id) + "'");
    }

    std::size_t edge_at(std::string_view id) const {
        if (auto e = find_edge(id)) return *e;
        throw Error(ErrorCode::UnknownEdge, "no edge '" + std::string(id) + "'");
    }

    std::size_t arity(const std::string& label) const {
        auto it = labels_.find(label);
        if (it == labels_.end()) throw Error(ErrorCode::UnknownLabel, "no label '" + label + "'");
        return it->second;
    }

    void declare_label(const Label& label) { add_label(labels_, label); }

    std::size_t add_vertex(std::string id) {
        if (vertex_index_.count(id))
            throw Error(ErrorCode::DuplicateId, "vertex '" + id + "' already exists");
        vertex_index_.emplace(id, vertices_.size());
        vertices_.push_back(std::move(id));
        return vertices_.size() - 1;
    }

    std::size_t add_vertex() { return add_vertex(fresh_vertex_id()); }

    std::size_t add_edge(std::string id, std::string label, std::vector<std::size_t> att) {
        if (edge_index_.count(id))
            throw Error(ErrorCode::DuplicateId, "edge '" + id + "' already exists");
        for (auto v : att)
            if (v >= vertices_.size())
                throw Error(ErrorCode::UnknownVertex,
                            "edge '" + id + "' attaches to vertex #" + std::to_string(v));
        auto it = labels_.find(label);
        if (it == labels_.end()) {
            labels_.emplace(label, att.size());
        } else if (it->second != att.size()) {
            throw Error(ErrorCode::ArityMismatch, "edge '" + id + "' has " +
                                                      std::to_string(att.size()) +
                                                      " attachments but label '" + label +
                                                      "' has arity " + std::to_string(it->second));
        }
        edge_index_.emplace(id, edges_.size());
        edges_.push_back(Edge{std::move(id), std::move(label), std::move(att)});
        return edges_.size() - 1;
    }

    std::size_t add_edge(std::string label, std::vector<std::size_t> att) {
        return add_edge(fresh_edge_id(), std::move(label), std::move(att));
    }

    // Convenience for tests and builders: attachments by vertex identifier.
    std::size_t add_edge_by_name(std::string id, std::string label,
                                 const std::vector<std::string>& att) {
        std::vector<std::size_t> idx;
        idx.reserve(att.size());
        for (const auto& v : att) idx.push_back(vertex_at(v));
        return add_edge(std::move(id), std::move(label), std::move(idx));
    }

    std::string fresh_vertex_id() { return fresh_id('v', vertex_index_); }
    std::string fresh_edge_id() { return fresh_id('e', edge_index_); }

    bool has_label(const std::string& name) const { return labels_.count(name) != 0; }

    // Labels actually carried by some edge.
    std::set<std::string> used_labels() const {
        std::set<std::string> out;
        for (const auto& e : edges_) out.insert(e.label);
        return out;
    }

    // Identifier-level equality (serialization round trips); structural
    // equality up to renaming is `isomorphic`.
    friend bool identical(const Hypergraph& a, const Hypergraph& b) {
        if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
        for (std::size_t i = 0; i < a.edges_.size(); ++i) {
            const auto& x = a.edges_[i];
            const auto& y = b.edges_[i];
            if (x.id != y.id || x.label != y.label || x.att != y.att) return false;
        }
        return true;
    }

private:
    std::string fresh_id(char prefix,
                         const std::unordered_map<std::string, std::size_t>& taken) {
        for (;;) {
            std::string id = std::string(1, prefix) + std::to_string(fresh_counter_++);
            if (!taken.count(id)) return id;
        }
    }

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    Alphabet labels_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
    std::size_t fresh_counter_ = 0;
};

// A path is a sequence of (in-position, edge, out-position) steps, positions
// 1-based as in the attachment strings.
struct PathStep {
    std::size_t in = 1;
    std::string edge;
    std::size_t out = 1;
};
using Path = std::vector<PathStep>;

inline bool is_path(const Hypergraph& h, const Path& path, std::string_view from,
                    std::string_view to) {
    if (path.empty()) return false;
    auto at = [&](const PathStep& s, std::size_t pos) -> std::optional<std::size_t> {
        auto e = h.find_edge(s.edge);
        if (!e) return std::nullopt;
        const auto& att = h.edge(*e).att;
        if (pos == 0 || pos > att.size()) return std::nullopt;
        return att[pos - 1];
    };
    auto first = at(path.front(), path.front().in);
    auto last = at(path.back(), path.back().out);
    auto src = h.find_vertex(from);
    auto dst = h.find_vertex(to);
    if (!first || !last || !src || !dst || *first != *src || *last != *dst) return false;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        auto out = at(path[k], path[k].out);
        auto in = at(path[k + 1], path[k + 1].in);
        if (!out || !in || *out != *in) return false;
    }
    return true;
}

namespace detail {

inline void append_copy(Hypergraph& dst, const Hypergraph& src,
                        const std::string& prefix, bool keep_ids) {
    for (const auto& [name, arity] : src.labels()) dst.declare_label({name, arity});
    std::vector<std::size_t> remap(src.vertex_count());
    for (std::size_t v = 0; v < src.vertex_count(); ++v) {
        std::string id = prefix + src.vertex(v);
        if (keep_ids && dst.find_vertex(id)) id = dst.fresh_vertex_id();
        remap[v] = dst.add_vertex(std::move(id));
    }
    for (const auto& e : src.edges()) {
        std::vector<std::size_t> att;
        att.reserve(e.att.size());
        for (auto v : e.att) att.push_back(remap[v]);
        std::string id = prefix + e.id;
        if (keep_ids && dst.find_edge(id)) id = dst.fresh_edge_id();
        dst.add_edge(std::move(id), e.label, std::move(att));
    }
}

}  // namespace detail

// H1 + H2. Identifiers of h1 are kept; identifiers of h2 are kept unless they
// collide, in which case fresh ones are generated.
inline Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
    Hypergraph out = h1;
    detail::append_copy(out, h2, "", true);
    return out;
}

// Identifier of a copy inside m . Z: element `id` of the j-th copy (1-based) of
// start i (1-based) becomes "i.j.id". Stable under adding further copies, so
// derivation traces can refer to it.
inline std::string copy_prefix(std::size_t start, std::size_t copy) {
    return std::to_string(start) + "." + std::to_string(copy) + ".";
}

inline void append_start_copy(Hypergraph& dst, const Hypergraph& z, std::size_t start,
                              std::size_t copy) {
    detail::append_copy(dst, z, copy_prefix(start, copy), false);
}

inline Hypergraph replicate(const Hypergraph& h, std::size_t k) {
    Hypergraph out;
    for (const auto& [name, arity] : h.labels()) out.declare_label({name, arity});
    for (std::size_t j = 1; j <= k; ++j) append_start_copy(out, h, 1, j);
    return out;
}

using MultiplicityVector = std::vector<std::size_t>;

// m . Z
inline Hypergraph combine(std::span<const std::size_t> m, std::span<const Hypergraph> zs) {
    if (m.size() != zs.size())
        throw Error(ErrorCode::LengthMismatch, "multiplicity vector has length " +
                                                   std::to_string(m.size()) + ", tuple has " +
                                                   std::to_string(zs.size()));
    Hypergraph out;
    for (const auto& z : zs)
        for (const auto& [name, arity] : z.labels()) out.declare_label({name, arity});
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = 1; j <= m[i]; ++j) append_start_copy(out, zs[i], i + 1, j);
    return out;
}

inline Hypergraph remove_edges(const Hypergraph& h, const std::set<std::string>& ids) {
    for (const auto& id : ids) h.edge_at(id);
    Hypergraph out;
    for (const auto& [name, arity] : h.labels()) out.declare_label({name, arity});
    for (const auto& v : h.vertices()) out.add_vertex(v);
    for (const auto& e : h.edges())
        if (!ids.count(e.id)) out.add_edge(e.id, e.label, e.att);
    return out;
}

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // The smaller index stays the representative.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace detail

// H / ≡ for the smallest equivalence containing `pairs`. Each class is
// represented by its earliest vertex, which keeps its identifier.
inline Hypergraph quotient(const Hypergraph& h,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    detail::DisjointSets sets(h.vertex_count());
    for (const auto& [a, b] : pairs) sets.unite(h.vertex_at(a), h.vertex_at(b));
    Hypergraph out;
    for (const auto& [name, arity] : h.labels()) out.declare_label({name, arity});
    std::vector<std::size_t> remap(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (sets.find(v) == v) remap[v] = out.add_vertex(h.vertex(v));
    for (std::size_t v = 0; v < h.vertex_count(); ++v) remap[v] = remap[sets.find(v)];
    for (const auto& e : h.edges()) {
        std::vector<std::size_t> att;
        for (auto v : e.att) att.push_back(remap[v]);
        out.add_edge(e.id, e.label, std::move(att));
    }
    return out;
}

// Sub-hypergraph on the given vertex and edge positions (edges must only attach
// to the chosen vertices). Identifiers are preserved.
inline Hypergraph induced(const Hypergraph& h, const std::vector<std::size_t>& vertices,
                          const std::vector<std::size_t>& edges) {
    Hypergraph out;
    for (const auto& [name, arity] : h.labels()) out.declare_label({name, arity});
    std::vector<std::size_t> remap(h.vertex_count(), static_cast<std::size_t>(-1));
    for (auto v : vertices) remap[v] = out.add_vertex(h.vertex(v));
    for (auto ei : edges) {
        const auto& e = h.edge(ei);
        std::vector<std::size_t> att;
        for (auto v : e.att) att.push_back(remap[v]);
        out.add_edge(e.id, e.label, std::move(att));
    }
    return out;
}

// Component partition as index sets: vertices in original order, edges in
// original order. A nullary edge has no vertex to hang on and forms its own
// vertex-less component; those come last.
struct ComponentIndex {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
};

inline std::vector<ComponentIndex> component_index(const Hypergraph& h) {
    detail::DisjointSets sets(h.vertex_count());
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.att.size(); ++i) sets.unite(e.att[0], e.att[i]);
    std::map<std::size_t, std::size_t> slot;
    std::vector<ComponentIndex> comps;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        auto root = sets.find(v);
        auto [it, inserted] = slot.emplace(root, comps.size());
        if (inserted) comps.emplace_back();
        comps[it->second].vertices.push_back(v);
    }
    std::vector<ComponentIndex> nullary;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        if (e.att.empty()) {
            nullary.push_back({{}, {i}});
        } else {
            comps[slot.at(sets.find(e.att[0]))].edges.push_back(i);
        }
    }
    // Deterministic order: by least vertex identifier.
    auto least = [&](const ComponentIndex& c) {
        const std::string* best = &h.vertex(c.vertices.front());
        for (auto v : c.vertices)
            if (h.vertex(v) < *best) best = &h.vertex(v);
        return *best;
    };
    std::vector<std::pair<std::string, std::size_t>> keys;
    for (std::size_t i = 0; i < comps.size(); ++i) keys.emplace_back(least(comps[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<ComponentIndex> ordered;
    for (const auto& [_, i] : keys) ordered.push_back(std::move(comps[i]));
    for (auto& c : nullary) ordered.push_back(std::move(c));
    return ordered;
}

inline std::vector<Hypergraph> connected_components(const Hypergraph& h) {
    std::vector<Hypergraph> out;
    for (const auto& c : component_index(h)) out.push_back(induced(h, c.vertices, c.edges));
    return out;
}

inline bool is_connected(const Hypergraph& h) { return component_index(h).size() <= 1; }

inline std::size_t degree(const Hypergraph& h, std::size_t v) {
    if (v >= h.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "vertex #" + std::to_string(v));
    std::size_t d = 0;
    for (const auto& e : h.edges()) d += std::count(e.att.begin(), e.att.end(), v);
    return d;
}

inline std::size_t degree(const Hypergraph& h, std::string_view v) {
    return degree(h, h.vertex_at(v));
}

inline std::vector<std::size_t> degrees(const Hypergraph& h) {
    std::vector<std::size_t> d(h.vertex_count(), 0);
    for (const auto& e : h.edges())
        for (auto v : e.att) ++d[v];
    return d;
}

inline std::set<std::size_t> degree_set(const Hypergraph& h) {
    auto d = degrees(h);
    return {d.begin(), d.end()};
}

// &(S): one vertex "v" and hyperedges "1".."k" attached to it.
inline Hypergraph star(const std::vector<Label>& labels) {
    Hypergraph g;
    for (const auto& l : labels) {
        if (l.arity != 1)
            throw Error(ErrorCode::ArityMismatch,
                        "star needs unary labels, '" + l.name + "' has arity " +
                            std::to_string(l.arity));
        g.declare_label(l);
    }
    auto v = g.add_vertex("v");
    for (std::size_t i = 0; i < labels.size(); ++i)
        g.add_edge(std::to_string(i + 1), labels[i].name, {v});
    return g;
}

inline Hypergraph star(std::initializer_list<std::string> names) {
    std::vector<Label> labels;
    for (const auto& n : names) labels.push_back({n, 1});
    return star(labels);
}

}  // namespace bonding

#endif  // BONDING_HYPERGRAPH_HPP
