#ifndef BONDING_IO_HPP
#define BONDING_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bonding/error.hpp"
#include "bonding/fusion.hpp"
#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"
#include "bonding/membership.hpp"
#include "bonding/sticker.hpp"

namespace bonding::io {

using nlohmann::json;

namespace detail {

template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, what + ": " + e.what());
    }
}

inline Alphabet read_alphabet(const json& j) {
    Alphabet out;
    for (const auto& l : j) {
        auto name = l.at("name").get<std::string>();
        auto arity = l.at("arity").get<std::size_t>();
        add_label(out, {name, arity});
    }
    return out;
}

inline json write_alphabet(const Alphabet& a) {
    json out = json::array();
    for (const auto& [name, arity] : a) out.push_back({{"name", name}, {"arity", arity}});
    return out;
}

}  // namespace detail

inline json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const auto& e : h.edges()) {
        json att = json::array();
        for (auto v : e.att) att.push_back(h.vertex(v));
        edges.push_back({{"id", e.id}, {"label", e.label}, {"att", att}});
    }
    return {{"labels", detail::write_alphabet(h.labels())}, {"vertices", h.vertices()}, {"edges", edges}};
}

inline Hypergraph hypergraph_from_json(const json& j) {
    return detail::guarded("hypergraph", [&] {
        Hypergraph h;
        if (j.contains("labels"))
            for (const auto& [name, arity] : detail::read_alphabet(j.at("labels")))
                h.declare_label({name, arity});
        for (const auto& v : j.at("vertices")) h.add_vertex(v.get<std::string>());
        for (const auto& e : j.at("edges"))
            h.add_edge_by_name(e.at("id").get<std::string>(), e.at("label").get<std::string>(),
                               e.at("att").get<std::vector<std::string>>());
        return h;
    });
}

inline json to_json(const BondingGrammar& g) {
    json bond = json::array();
    for (const auto& e : g.bond_function().entries())
        bond.push_back({{"left", e.left.name}, {"right", e.right.name}, {"result", e.result.name}});
    json starts = json::array();
    for (const auto& z : g.starts()) starts.push_back(to_json(z));
    return {{"nonterminals", detail::write_alphabet(g.nonterminals())},
            {"terminals", detail::write_alphabet(g.terminals())},
            {"bond", bond},
            {"starts", starts}};
}

// Arities of bond entries come from the N and T declarations; a name missing
// there is reported as a domain/range violation.
inline BondingGrammar grammar_from_json(const json& j) {
    return detail::guarded("grammar", [&] {
        Alphabet n = detail::read_alphabet(j.at("nonterminals"));
        Alphabet t = detail::read_alphabet(j.at("terminals"));
        BondFunction bf;
        for (const auto& b : j.at("bond")) {
            auto left = b.at("left").get<std::string>();
            auto right = b.at("right").get<std::string>();
            auto result = b.at("result").get<std::string>();
            for (const auto& l : {left, right})
                if (!n.count(l)) throw Error(ErrorCode::BondDomain, "'" + l + "' is not a nonterminal");
            if (!t.count(result))
                throw Error(ErrorCode::BondRange, "'" + result + "' is not a terminal");
            bf.add({left, n.at(left)}, {right, n.at(right)}, {result, t.at(result)});
        }
        std::vector<Hypergraph> starts;
        for (const auto& z : j.at("starts")) starts.push_back(hypergraph_from_json(z));
        return BondingGrammar(std::move(starts), std::move(n), std::move(t), std::move(bf));
    });
}

inline json to_json(const FusionGrammar& fg) {
    json labels = json::array();
    for (const auto& f : fg.fusion_labels())
        labels.push_back({{"name", f.name}, {"arity", f.arity}, {"complement", f.complement}});
    json starts = json::array();
    for (const auto& z : fg.starts()) starts.push_back(to_json(z));
    return {{"terminals", detail::write_alphabet(fg.terminals())},
            {"fusion_labels", labels},
            {"starts", starts}};
}

inline FusionGrammar fusion_grammar_from_json(const json& j) {
    return detail::guarded("fusion grammar", [&] {
        std::vector<FusionGrammar::FusionLabel> labels;
        for (const auto& f : j.at("fusion_labels"))
            labels.push_back({f.at("name").get<std::string>(), f.at("arity").get<std::size_t>(),
                              f.at("complement").get<std::string>()});
        std::vector<Hypergraph> starts;
        for (const auto& z : j.at("starts")) starts.push_back(hypergraph_from_json(z));
        return FusionGrammar(std::move(starts), detail::read_alphabet(j.at("terminals")),
                             std::move(labels));
    });
}

inline json to_json(const MembershipCertificate& c) {
    json comps = json::array();
    for (const auto& a : c.components) comps.push_back({{"vertices", a.vertices}, {"start", a.start}});
    return {{"bondset", c.bondset}, {"components", comps}, {"multiplicity", c.multiplicity}};
}

inline MembershipCertificate certificate_from_json(const json& j) {
    return detail::guarded("certificate", [&] {
        MembershipCertificate c;
        c.bondset = j.at("bondset").get<std::set<std::string>>();
        for (const auto& a : j.at("components"))
            c.components.push_back(
                {a.at("vertices").get<std::vector<std::string>>(), a.at("start").get<std::size_t>()});
        c.multiplicity = j.at("multiplicity").get<MultiplicityVector>();
        return c;
    });
}

inline json to_json(const DerivationTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json step = {{"first", s.first}, {"second", s.second}};
        if (s.result) step["result"] = *s.result;
        steps.push_back(step);
    }
    return {{"multiplicity", t.multiplicity}, {"steps", steps}};
}

inline DerivationTrace trace_from_json(const json& j) {
    return detail::guarded("trace", [&] {
        DerivationTrace t;
        t.multiplicity = j.at("multiplicity").get<MultiplicityVector>();
        for (const auto& s : j.at("steps")) {
            BondStep step{s.at("first").get<std::string>(), s.at("second").get<std::string>(), {}};
            if (s.contains("result")) step.result = s.at("result").get<std::string>();
            t.steps.push_back(std::move(step));
        }
        return t;
    });
}

inline json to_json(const Domino& d) {
    return {{"upper", d.upper()}, {"lower", d.lower()}, {"offset", d.offset()}};
}

inline Domino domino_from_json(const json& j) {
    return detail::guarded("domino", [&] {
        return Domino::of(j.at("upper").get<std::string>(), j.at("lower").get<std::string>(),
                          j.value("offset", 0));
    });
}

inline json to_json(const StickerSystem& s) {
    json alphabet = json::array();
    for (char c : s.alphabet) alphabet.push_back(std::string(1, c));
    json axioms = json::array();
    for (const auto& a : s.axioms) axioms.push_back(to_json(a));
    json rules = json::array();
    for (const auto& r : s.rules)
        rules.push_back(json::array({r.left ? to_json(*r.left) : json(nullptr), to_json(r.right)}));
    return {{"alphabet", alphabet}, {"axioms", axioms}, {"rules", rules}};
}

inline StickerSystem sticker_system_from_json(const json& j) {
    return detail::guarded("sticker system", [&] {
        StickerSystem s;
        for (const auto& c : j.at("alphabet")) {
            auto sym = c.get<std::string>();
            if (sym.size() != 1)
                throw Error(ErrorCode::Parse, "alphabet symbols are single characters, got '" + sym + "'");
            s.alphabet.insert(sym[0]);
        }
        for (const auto& a : j.at("axioms")) s.axioms.push_back(domino_from_json(a));
        for (const auto& r : j.at("rules")) {
            if (!r.is_array() || r.size() != 2)
                throw Error(ErrorCode::Parse, "a rule is a pair [left or null, right]");
            std::optional<Domino> left;
            if (!r[0].is_null()) left = domino_from_json(r[0]);
            s.rules.push_back({left, domino_from_json(r[1])});
        }
        s.validate();
        return s;
    });
}

inline json parse(const std::string& text, const std::string& what = "input") {
    return detail::guarded(what, [&] { return json::parse(text); });
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json load(const std::string& path) { return parse(read_file(path), path); }

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bonding::io

#endif  // BONDING_IO_HPP
