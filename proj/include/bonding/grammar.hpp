#ifndef BONDING_GRAMMAR_HPP
#define BONDING_GRAMMAR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bonding/error.hpp"
#include "bonding/hypergraph.hpp"

namespace bonding {

// Partial injective map N x N -> T on ordered pairs, with
// arity(left ⊗ right) = arity(left) + arity(right).
class BondFunction {
public:
    struct Entry {
        Label left;
        Label right;
        Label result;
    };

    void add(const Label& left, const Label& right, const Label& result) {
        if (result.arity != left.arity + right.arity)
            throw Error(ErrorCode::BondArity, left.name + " ⊗ " + right.name + " = " + result.name +
                                                  " needs arity " +
                                                  std::to_string(left.arity + right.arity) +
                                                  ", got " + std::to_string(result.arity));
        auto key = std::make_pair(left.name, right.name);
        if (forward_.count(key))
            throw Error(ErrorCode::BondNotInjective,
                        "pair (" + left.name + ", " + right.name + ") defined twice");
        if (backward_.count(result.name))
            throw Error(ErrorCode::BondNotInjective,
                        "'" + result.name + "' is the bond of two different pairs");
        add_label(arity_, left);
        add_label(arity_, right);
        add_label(arity_, result);
        forward_.emplace(key, result.name);
        backward_.emplace(result.name, key);
        entries_.push_back({left, right, result});
    }

    std::optional<std::string> apply(const std::string& left, const std::string& right) const {
        auto it = forward_.find({left, right});
        if (it == forward_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::pair<std::string, std::string>> preimage(const std::string& result) const {
        auto it = backward_.find(result);
        if (it == backward_.end()) return std::nullopt;
        return it->second;
    }

    bool in_range(const std::string& label) const { return backward_.count(label) != 0; }
    std::size_t arity(const std::string& label) const { return arity_.at(label); }
    const std::vector<Entry>& entries() const { return entries_; }
    const Alphabet& labels() const { return arity_; }

private:
    std::map<std::pair<std::string, std::string>, std::string> forward_;
    std::map<std::string, std::pair<std::string, std::string>> backward_;
    Alphabet arity_;
    std::vector<Entry> entries_;
};

// (Z, N, T, ⊗). The constructor enforces every structural invariant and throws
// on the first violation.
class BondingGrammar {
public:
    BondingGrammar(std::vector<Hypergraph> starts, Alphabet nonterminals, Alphabet terminals,
                   BondFunction bond)
        : starts_(std::move(starts)),
          nonterminals_(std::move(nonterminals)),
          terminals_(std::move(terminals)),
          bond_(std::move(bond)) {
        for (const auto& [name, _] : nonterminals_)
            if (terminals_.count(name))
                throw Error(ErrorCode::AlphabetOverlap, "'" + name + "' is both N and T");
        for (const auto& entry : bond_.entries()) {
            for (const auto* l : {&entry.left, &entry.right}) {
                auto it = nonterminals_.find(l->name);
                if (it == nonterminals_.end())
                    throw Error(ErrorCode::BondDomain, "'" + l->name + "' is not a nonterminal");
                if (it->second != l->arity)
                    throw Error(ErrorCode::LabelConflict, "arity of '" + l->name + "' differs");
            }
            auto it = terminals_.find(entry.result.name);
            if (it == terminals_.end())
                throw Error(ErrorCode::BondRange, "'" + entry.result.name + "' is not a terminal");
            if (it->second != entry.result.arity)
                throw Error(ErrorCode::LabelConflict,
                            "arity of '" + entry.result.name + "' differs");
        }
        for (std::size_t i = 0; i < starts_.size(); ++i) {
            check_labels(starts_[i], "start " + std::to_string(i + 1));
            if (!is_connected(starts_[i]))
                throw Error(ErrorCode::StartDisconnected,
                            "start " + std::to_string(i + 1) + " is not connected");
        }
    }

    const std::vector<Hypergraph>& starts() const { return starts_; }
    const Hypergraph& start(std::size_t i) const { return starts_.at(i); }
    std::size_t size() const { return starts_.size(); }
    const Alphabet& nonterminals() const { return nonterminals_; }
    const Alphabet& terminals() const { return terminals_; }
    const BondFunction& bond_function() const { return bond_; }

    bool is_nonterminal(const std::string& l) const { return nonterminals_.count(l) != 0; }
    bool is_terminal(const std::string& l) const { return terminals_.count(l) != 0; }

    // H must be labeled over N ∪ T with the declared arities.
    void check_labels(const Hypergraph& h, const std::string& what = "hypergraph") const {
        for (const auto& e : h.edges()) {
            const Alphabet* alphabet = nullptr;
            if (nonterminals_.count(e.label)) alphabet = &nonterminals_;
            if (terminals_.count(e.label)) alphabet = &terminals_;
            if (!alphabet)
                throw Error(ErrorCode::UnknownLabel,
                            what + ": label '" + e.label + "' is not in N ∪ T");
            if (alphabet->at(e.label) != e.att.size())
                throw Error(ErrorCode::ArityMismatch,
                            what + ": edge '" + e.id + "' does not match arity of '" + e.label + "'");
        }
    }

    bool terminal_only(const Hypergraph& h) const {
        for (const auto& e : h.edges())
            if (!is_terminal(e.label)) return false;
        return true;
    }

private:
    std::vector<Hypergraph> starts_;
    Alphabet nonterminals_;
    Alphabet terminals_;
    BondFunction bond_;
};

// Bonding: e1, e2 are replaced by one edge labeled lab(e1) ⊗ lab(e2) with
// attachment att(e1) att(e2). The new edge takes `result_id` or a fresh id and
// is appended last.
inline Hypergraph bond(const Hypergraph& h, const std::string& e1, const std::string& e2,
                       const BondFunction& bf, std::optional<std::string> result_id = {}) {
    if (e1 == e2) throw Error(ErrorCode::SameEdge, "cannot bond edge '" + e1 + "' with itself");
    const auto& a = h.edge(h.edge_at(e1));
    const auto& b = h.edge(h.edge_at(e2));
    auto result = bf.apply(a.label, b.label);
    if (!result)
        throw Error(ErrorCode::BondUndefined, a.label + " ⊗ " + b.label + " is undefined");
    std::vector<std::size_t> att = a.att;
    att.insert(att.end(), b.att.begin(), b.att.end());
    Hypergraph out = remove_edges(h, {e1, e2});
    out.declare_label({*result, att.size()});
    if (result_id) {
        out.add_edge(*result_id, *result, std::move(att));
    } else {
        out.add_edge(*result, std::move(att));
    }
    return out;
}

// Inverse of bond. The two halves get `ids` or fresh ids and are appended last.
inline Hypergraph break_bond(const Hypergraph& h, const std::string& e, const BondFunction& bf,
                             std::optional<std::pair<std::string, std::string>> ids = {}) {
    const auto& edge = h.edge(h.edge_at(e));
    auto pre = bf.preimage(edge.label);
    if (!pre)
        throw Error(ErrorCode::NotBreakable, "label '" + edge.label + "' is not in the range of ⊗");
    auto split = bf.arity(pre->first);
    std::vector<std::size_t> left(edge.att.begin(), edge.att.begin() + static_cast<long>(split));
    std::vector<std::size_t> right(edge.att.begin() + static_cast<long>(split), edge.att.end());
    Hypergraph out = remove_edges(h, {e});
    out.declare_label({pre->first, left.size()});
    out.declare_label({pre->second, right.size()});
    if (ids) {
        out.add_edge(ids->first, pre->first, std::move(left));
        out.add_edge(ids->second, pre->second, std::move(right));
    } else {
        out.add_edge(pre->first, std::move(left));
        out.add_edge(pre->second, std::move(right));
    }
    return out;
}

// Breaks every edge of `ids`; the halves of edge x are named "x/1" and "x/2".
inline Hypergraph break_bonds(const Hypergraph& h, const std::set<std::string>& ids,
                              const BondFunction& bf) {
    Hypergraph out = h;
    for (const auto& id : ids) out = break_bond(out, id, bf, std::make_pair(id + "/1", id + "/2"));
    return out;
}

struct BondStep {
    std::string first;
    std::string second;
    std::optional<std::string> result;
};

struct DerivationTrace {
    MultiplicityVector multiplicity;
    std::vector<BondStep> steps;
};

// Replays the trace from m . Z (identifiers as produced by `combine`).
inline Hypergraph derive(const BondingGrammar& g, const DerivationTrace& trace) {
    Hypergraph h = combine(trace.multiplicity, g.starts());
    for (const auto& step : trace.steps)
        h = bond(h, step.first, step.second, g.bond_function(), step.result);
    return h;
}

}  // namespace bonding

#endif  // BONDING_GRAMMAR_HPP
