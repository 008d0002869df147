#ifndef BONDING_FUSION_HPP
#define BONDING_FUSION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bonding/error.hpp"
#include "bonding/hypergraph.hpp"

namespace bonding {

// Fusion grammar without markers: connected starts over T ∪ F ∪ F̄. Each
// fusion label carries the name of its complement.
class FusionGrammar {
public:
    struct FusionLabel {
        std::string name;
        std::size_t arity = 0;
        std::string complement;
    };

    FusionGrammar(std::vector<Hypergraph> starts, Alphabet terminals,
                  std::vector<FusionLabel> fusion)
        : starts_(std::move(starts)), terminals_(std::move(terminals)), fusion_(std::move(fusion)) {
        Alphabet seen = terminals_;
        for (const auto& f : fusion_) {
            for (const auto& name : {f.name, f.complement}) {
                if (seen.count(name))
                    throw Error(ErrorCode::AlphabetOverlap, "'" + name + "' used twice");
                seen.emplace(name, f.arity);
            }
            partner_.emplace(f.name, f.complement);
        }
        for (std::size_t i = 0; i < starts_.size(); ++i) {
            for (const auto& e : starts_[i].edges()) {
                auto it = seen.find(e.label);
                if (it == seen.end())
                    throw Error(ErrorCode::UnknownLabel, "start " + std::to_string(i + 1) +
                                                             ": label '" + e.label +
                                                             "' is not in T ∪ F ∪ F̄");
                if (it->second != e.att.size())
                    throw Error(ErrorCode::ArityMismatch, "start " + std::to_string(i + 1) +
                                                              ": edge '" + e.id + "'");
            }
            if (!is_connected(starts_[i]))
                throw Error(ErrorCode::StartDisconnected,
                            "start " + std::to_string(i + 1) + " is not connected");
        }
    }

    const std::vector<Hypergraph>& starts() const { return starts_; }
    const Alphabet& terminals() const { return terminals_; }
    const std::vector<FusionLabel>& fusion_labels() const { return fusion_; }

    bool complementary(const std::string& a, const std::string& abar) const {
        auto it = partner_.find(a);
        return it != partner_.end() && it->second == abar;
    }

private:
    std::vector<Hypergraph> starts_;
    Alphabet terminals_;
    std::vector<FusionLabel> fusion_;
    std::map<std::string, std::string> partner_;
};

// Removes e and ē and identifies their attachment vertices positionwise.
inline Hypergraph fuse(const Hypergraph& h, const std::string& e, const std::string& ebar,
                       const FusionGrammar& fg) {
    if (e == ebar) throw Error(ErrorCode::SameEdge, "cannot fuse edge '" + e + "' with itself");
    const auto& x = h.edge(h.edge_at(e));
    const auto& y = h.edge(h.edge_at(ebar));
    if (!fg.complementary(x.label, y.label))
        throw Error(ErrorCode::NotComplementary,
                    "'" + x.label + "' and '" + y.label + "' are not complementary");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < x.att.size(); ++i)
        pairs.emplace_back(h.vertex(x.att[i]), h.vertex(y.att[i]));
    return quotient(remove_edges(h, {e, ebar}), pairs);
}

struct FusionStep {
    std::string edge;
    std::string complement;
};

struct FusionTrace {
    MultiplicityVector multiplicity;
    std::vector<FusionStep> steps;
};

inline Hypergraph fusion_derive(const FusionGrammar& fg, const FusionTrace& trace) {
    Hypergraph h = combine(trace.multiplicity, fg.starts());
    for (const auto& s : trace.steps) h = fuse(h, s.edge, s.complement, fg);
    return h;
}

// Every connected component of the replayed hypergraph counts as generated.
inline std::vector<Hypergraph> fusion_generates(const FusionGrammar& fg, const FusionTrace& trace) {
    return connected_components(fusion_derive(fg, trace));
}

}  // namespace bonding

#endif  // BONDING_FUSION_HPP
