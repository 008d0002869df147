#ifndef BONDING_ISOMORPHISM_HPP
#define BONDING_ISOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bonding/hypergraph.hpp"

namespace bonding {

// Interns label names to small integers so that several compact hypergraphs
// can be compared against each other.
class LabelTable {
public:
    int intern(const std::string& name) {
        auto [it, inserted] = ids_.emplace(name, static_cast<int>(names_.size()));
        if (inserted) names_.push_back(name);
        return it->second;
    }
    std::optional<int> find(const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }
    const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return names_.size(); }

private:
    std::map<std::string, int> ids_;
    std::vector<std::string> names_;
};

// Index-only hypergraph used on hot paths.
struct CompactGraph {
    int vertices = 0;
    std::vector<int> label;
    std::vector<std::vector<int>> att;

    std::size_t edge_count() const { return label.size(); }
};

inline CompactGraph compact(const Hypergraph& h, LabelTable& table) {
    CompactGraph g;
    g.vertices = static_cast<int>(h.vertex_count());
    for (const auto& e : h.edges()) {
        g.label.push_back(table.intern(e.label));
        g.att.emplace_back(e.att.begin(), e.att.end());
    }
    return g;
}

struct IsoWitness {
    std::vector<int> vertex_map;  // g1 vertex -> g2 vertex
    std::vector<int> edge_map;    // g1 edge -> g2 edge
};

namespace detail {

class IsoSearch {
public:
    IsoSearch(const CompactGraph& g1, const CompactGraph& g2) : g1_(g1), g2_(g2) {}

    std::optional<IsoWitness> run() {
        if (g1_.vertices != g2_.vertices || g1_.edge_count() != g2_.edge_count())
            return std::nullopt;
        index(g1_, sig1_, inc1_);
        index(g2_, sig2_, inc2_);
        // Edge multisets must agree on label and arity; nullary edges are fully
        // decided here.
        if (label_histogram(g1_) != label_histogram(g2_)) return std::nullopt;
        for (const auto& [key, count] : sig1_)
            if (key.second.empty() && sig2_[key] != count) return std::nullopt;
        if (!refine()) return std::nullopt;
        order_vertices();
        map12_.assign(static_cast<std::size_t>(g1_.vertices), -1);
        used2_.assign(static_cast<std::size_t>(g2_.vertices), false);
        if (!extend(0)) return std::nullopt;
        return witness();
    }

private:
    using Signature = std::pair<int, std::vector<int>>;
    using Incidence = std::vector<std::vector<std::pair<int, int>>>;  // vertex -> (edge, pos)

    static std::map<std::pair<int, std::size_t>, int> label_histogram(const CompactGraph& g) {
        std::map<std::pair<int, std::size_t>, int> h;
        for (std::size_t e = 0; e < g.edge_count(); ++e) ++h[{g.label[e], g.att[e].size()}];
        return h;
    }

    static void index(const CompactGraph& g, std::map<Signature, int>& sig, Incidence& inc) {
        inc.assign(static_cast<std::size_t>(g.vertices), {});
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            ++sig[{g.label[e], g.att[e]}];
            for (std::size_t p = 0; p < g.att[e].size(); ++p)
                inc[static_cast<std::size_t>(g.att[e][p])].emplace_back(static_cast<int>(e),
                                                                        static_cast<int>(p));
        }
    }

    // Joint colour refinement on both graphs, so colours are comparable.
    bool refine() {
        using Key = std::vector<std::int64_t>;
        auto initial = [](const CompactGraph& g, const Incidence& inc, int v) {
            Key k;
            for (auto [e, p] : inc[static_cast<std::size_t>(v)])
                k.push_back(static_cast<std::int64_t>(g.label[static_cast<std::size_t>(e)]) * 4096 + p);
            std::sort(k.begin(), k.end());
            return k;
        };
        std::vector<Key> k1, k2;
        for (int v = 0; v < g1_.vertices; ++v) k1.push_back(initial(g1_, inc1_, v));
        for (int v = 0; v < g2_.vertices; ++v) k2.push_back(initial(g2_, inc2_, v));
        std::size_t classes = 0;
        for (int round = 0;; ++round) {
            std::map<Key, int> palette;
            for (const auto& k : k1) palette.emplace(k, 0);
            for (const auto& k : k2) palette.emplace(k, 0);
            int next = 0;
            for (auto& [_, c] : palette) c = next++;
            color1_.clear();
            color2_.clear();
            for (const auto& k : k1) color1_.push_back(palette.at(k));
            for (const auto& k : k2) color2_.push_back(palette.at(k));
            auto h1 = color1_, h2 = color2_;
            std::sort(h1.begin(), h1.end());
            std::sort(h2.begin(), h2.end());
            if (h1 != h2) return false;
            if (palette.size() == classes || round > g1_.vertices) break;
            classes = palette.size();
            auto step = [](const CompactGraph& g, const Incidence& inc, const std::vector<int>& col,
                           int v) {
                std::vector<Key> parts;
                for (auto [e, p] : inc[static_cast<std::size_t>(v)]) {
                    Key part{g.label[static_cast<std::size_t>(e)], p};
                    for (auto u : g.att[static_cast<std::size_t>(e)])
                        part.push_back(col[static_cast<std::size_t>(u)]);
                    parts.push_back(std::move(part));
                }
                std::sort(parts.begin(), parts.end());
                Key k{col[static_cast<std::size_t>(v)]};
                for (const auto& part : parts) {
                    k.push_back(-1);
                    k.insert(k.end(), part.begin(), part.end());
                }
                return k;
            };
            for (int v = 0; v < g1_.vertices; ++v) k1[static_cast<std::size_t>(v)] = step(g1_, inc1_, color1_, v);
            for (int v = 0; v < g2_.vertices; ++v) k2[static_cast<std::size_t>(v)] = step(g2_, inc2_, color2_, v);
        }
        return true;
    }

    // Greedy order: prefer vertices adjacent to already ordered ones, then
    // those in small colour classes.
    void order_vertices() {
        std::map<int, int> class_size;
        for (auto c : color1_) ++class_size[c];
        std::vector<bool> placed(static_cast<std::size_t>(g1_.vertices), false);
        std::vector<int> links(static_cast<std::size_t>(g1_.vertices), 0);
        order_.clear();
        for (int step = 0; step < g1_.vertices; ++step) {
            int best = -1;
            for (int v = 0; v < g1_.vertices; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (best < 0) { best = v; continue; }
                auto lv = links[static_cast<std::size_t>(v)], lb = links[static_cast<std::size_t>(best)];
                auto sv = class_size[color1_[static_cast<std::size_t>(v)]];
                auto sb = class_size[color1_[static_cast<std::size_t>(best)]];
                if (lv > lb || (lv == lb && sv < sb)) best = v;
            }
            placed[static_cast<std::size_t>(best)] = true;
            order_.push_back(best);
            for (auto [e, p] : inc1_[static_cast<std::size_t>(best)])
                for (auto u : g1_.att[static_cast<std::size_t>(e)]) ++links[static_cast<std::size_t>(u)];
        }
    }

    bool consistent(int v) {
        for (auto [e, p] : inc1_[static_cast<std::size_t>(v)]) {
            const auto& att = g1_.att[static_cast<std::size_t>(e)];
            std::vector<int> image;
            image.reserve(att.size());
            bool complete = true;
            for (auto u : att) {
                int w = map12_[static_cast<std::size_t>(u)];
                if (w < 0) { complete = false; break; }
                image.push_back(w);
            }
            if (!complete) continue;
            int lab = g1_.label[static_cast<std::size_t>(e)];
            auto it = sig2_.find({lab, image});
            int have = it == sig2_.end() ? 0 : it->second;
            if (have != sig1_.at({lab, att})) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        int v = order_[depth];
        for (int w = 0; w < g2_.vertices; ++w) {
            if (used2_[static_cast<std::size_t>(w)] ||
                color2_[static_cast<std::size_t>(w)] != color1_[static_cast<std::size_t>(v)])
                continue;
            map12_[static_cast<std::size_t>(v)] = w;
            used2_[static_cast<std::size_t>(w)] = true;
            if (consistent(v) && extend(depth + 1)) return true;
            used2_[static_cast<std::size_t>(w)] = false;
            map12_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    IsoWitness witness() const {
        IsoWitness w;
        w.vertex_map = map12_;
        std::map<Signature, std::vector<int>> pool;
        for (std::size_t e = g2_.edge_count(); e-- > 0;)
            pool[{g2_.label[e], g2_.att[e]}].push_back(static_cast<int>(e));
        for (std::size_t e = 0; e < g1_.edge_count(); ++e) {
            std::vector<int> image;
            for (auto u : g1_.att[e]) image.push_back(map12_[static_cast<std::size_t>(u)]);
            auto& bucket = pool[{g1_.label[e], image}];
            w.edge_map.push_back(bucket.back());
            bucket.pop_back();
        }
        return w;
    }

    const CompactGraph& g1_;
    const CompactGraph& g2_;
    std::map<Signature, int> sig1_, sig2_;
    Incidence inc1_, inc2_;
    std::vector<int> color1_, color2_;
    std::vector<int> order_;
    std::vector<int> map12_;
    std::vector<bool> used2_;
};

}  // namespace detail

inline std::optional<IsoWitness> find_isomorphism(const CompactGraph& g1, const CompactGraph& g2) {
    return detail::IsoSearch(g1, g2).run();
}

// Witness expressed with identifiers of h1 -> identifiers of h2.
struct IsoMapping {
    std::map<std::string, std::string> vertices;
    std::map<std::string, std::string> edges;
};

inline std::optional<IsoMapping> find_isomorphism(const Hypergraph& h1, const Hypergraph& h2) {
    LabelTable table;
    auto g1 = compact(h1, table);
    auto g2 = compact(h2, table);
    auto w = find_isomorphism(g1, g2);
    if (!w) return std::nullopt;
    IsoMapping m;
    for (std::size_t v = 0; v < h1.vertex_count(); ++v)
        m.vertices.emplace(h1.vertex(v), h2.vertex(static_cast<std::size_t>(w->vertex_map[v])));
    for (std::size_t e = 0; e < h1.edge_count(); ++e)
        m.edges.emplace(h1.edge(e).id, h2.edge(static_cast<std::size_t>(w->edge_map[e])).id);
    return m;
}

inline bool isomorphic(const Hypergraph& h1, const Hypergraph& h2) {
    return find_isomorphism(h1, h2).has_value();
}

}  // namespace bonding

#endif  // BONDING_ISOMORPHISM_HPP
