#ifndef BONDING_STICKER_HPP
#define BONDING_STICKER_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bonding/error.hpp"

namespace bonding {

// Double strand fragment over an alphabet of single characters, identity
// complementarity. The upper strand occupies columns [0, |upper|), the lower
// strand [offset, offset + |lower|). A domino with one empty strand is a
// sticky end and has offset 0.
class Domino {
public:
    // Returns nullopt unless the strands form a domino: at least one strand is
    // nonempty, and if both are, they overlap in a nonempty run of columns
    // carrying equal symbols.
    static std::optional<Domino> make(std::string upper, std::string lower, int offset = 0) {
        if (upper.empty() && lower.empty()) return std::nullopt;
        if (upper.empty() || lower.empty()) offset = 0;
        Domino d(std::move(upper), std::move(lower), offset);
        if (!d.upper_.empty() && !d.lower_.empty()) {
            int lo = std::max(0, offset);
            int hi = std::min(d.upper_len(), offset + d.lower_len());
            if (lo >= hi) return std::nullopt;
            for (int c = lo; c < hi; ++c)
                if (d.upper_[static_cast<std::size_t>(c)] != d.lower_[static_cast<std::size_t>(c - offset)])
                    return std::nullopt;
        }
        return d;
    }

    static Domino of(std::string upper, std::string lower, int offset = 0) {
        auto d = make(upper, lower, offset);
        if (!d)
            throw Error(ErrorCode::InvalidDomino,
                        "not a domino: upper '" + upper + "', lower '" + lower + "', offset " +
                            std::to_string(offset));
        return *d;
    }

    // [w / w]
    static Domino complete(const std::string& w) { return of(w, w, 0); }

    const std::string& upper() const { return upper_; }
    const std::string& lower() const { return lower_; }
    int offset() const { return offset_; }

    int upper_len() const { return static_cast<int>(upper_.size()); }
    int lower_len() const { return static_cast<int>(lower_.size()); }

    // E_Σ
    bool is_sticky_end() const { return upper_.empty() || lower_.empty(); }
    // LR_Σ = E · D= · E
    bool is_lr() const { return !is_sticky_end(); }
    // R_Σ = D= · E: left end blunt.
    bool is_r() const { return is_lr() && offset_ == 0; }
    // D=_Σ
    bool is_complete() const { return offset_ == 0 && upper_ == lower_; }

    int first_column() const { return lower_.empty() ? 0 : std::min(0, offset_); }
    int end_column() const {
        if (lower_.empty()) return upper_len();
        if (upper_.empty()) return lower_len();
        return std::max(upper_len(), offset_ + lower_len());
    }

    std::size_t symbols() const { return upper_.size() + lower_.size(); }

    friend auto operator<=>(const Domino&, const Domino&) = default;
    friend bool operator==(const Domino&, const Domino&) = default;

private:
    Domino(std::string upper, std::string lower, int offset)
        : upper_(std::move(upper)), lower_(std::move(lower)), offset_(offset) {}

    std::string upper_;
    std::string lower_;
    int offset_ = 0;
};

// "(upper/lower@offset)"
inline std::string to_string(const Domino& d) {
    return "(" + d.upper() + "/" + d.lower() + "@" + std::to_string(d.offset()) + ")";
}

// Two rows aligned by column, '.' where a strand has no symbol.
inline std::string render(const Domino& d) {
    int lo = d.first_column(), hi = d.end_column();
    std::string top, bottom;
    int lower_start = d.upper().empty() ? 0 : d.offset();
    for (int c = lo; c < hi; ++c) {
        bool has_upper = c >= 0 && c < d.upper_len();
        bool has_lower = !d.lower().empty() && c >= lower_start && c < lower_start + d.lower_len();
        top += has_upper ? d.upper()[static_cast<std::size_t>(c)] : '.';
        bottom += has_lower ? d.lower()[static_cast<std::size_t>(c - lower_start)] : '.';
    }
    if (d.upper().empty()) top = std::string(bottom.size(), '.');
    return top + "\n" + bottom;
}

// x · y for x ∈ LR_Σ: y is placed to the right so that each of its nonempty
// strands continues the corresponding strand of x. Defined iff that placement
// is consistent with y's own alignment and the concatenated strands form a
// domino (overhangs on opposite strands with matching symbols, no gaps).
inline std::optional<Domino> stick(const Domino& x, const Domino& y) {
    if (!x.is_lr())
        throw Error(ErrorCode::InvalidDomino, "left operand " + to_string(x) + " is not in LR");
    if (!y.upper().empty() && !y.lower().empty() &&
        x.offset() + x.lower_len() - x.upper_len() != y.offset())
        return std::nullopt;
    return Domino::make(x.upper() + y.upper(), x.lower() + y.lower(), x.offset());
}

struct StickingRule {
    std::optional<Domino> left;  // nullopt = λ
    Domino right;
};

struct StickerSystem {
    std::set<char> alphabet;
    std::vector<Domino> axioms;
    std::vector<StickingRule> rules;

    bool regular() const {
        for (const auto& r : rules)
            if (r.left) return false;
        for (const auto& a : axioms)
            if (!a.is_r()) return false;
        return true;
    }

    void validate() const {
        auto check = [&](const Domino& d) {
            for (char c : d.upper() + d.lower())
                if (!alphabet.count(c))
                    throw Error(ErrorCode::InvalidDomino,
                                std::string("symbol '") + c + "' of " + to_string(d) +
                                    " is not in the alphabet");
        };
        for (const auto& a : axioms) {
            check(a);
            if (!a.is_lr())
                throw Error(ErrorCode::InvalidDomino, "axiom " + to_string(a) + " is not in LR");
        }
        for (const auto& r : rules) {
            if (r.left) check(*r.left);
            check(r.right);
        }
    }

    void require_regular() const {
        validate();
        if (!regular())
            throw Error(ErrorCode::NotRegular,
                        "only regular sticker systems (rules (λ, d), axioms in R) are executable");
    }
};

// Everything reachable from an axiom by at most `depth` rule applications.
inline std::set<Domino> sticker_generates(const StickerSystem& s, std::size_t depth) {
    s.require_regular();
    std::set<Domino> all(s.axioms.begin(), s.axioms.end());
    std::set<Domino> frontier = all;
    for (std::size_t step = 0; step < depth && !frontier.empty(); ++step) {
        std::set<Domino> next;
        for (const auto& u : frontier)
            for (const auto& rule : s.rules)
                if (auto v = stick(u, rule.right))
                    if (all.insert(*v).second) next.insert(*v);
        frontier = std::move(next);
    }
    return all;
}

// Exact decision whether s generates r. Sticking to the right only appends to
// both strands, so every intermediate domino is a prefix of r.
inline bool sticker_derives(const StickerSystem& s, const Domino& r) {
    s.require_regular();
    auto prefix = [&](const Domino& d) {
        return d.offset() == r.offset() && r.upper().compare(0, d.upper().size(), d.upper()) == 0 &&
               r.lower().compare(0, d.lower().size(), d.lower()) == 0 &&
               d.upper().size() <= r.upper().size() && d.lower().size() <= r.lower().size();
    };
    std::set<Domino> seen;
    std::vector<Domino> stack;
    for (const auto& a : s.axioms)
        if (prefix(a) && seen.insert(a).second) stack.push_back(a);
    while (!stack.empty()) {
        Domino u = stack.back();
        stack.pop_back();
        if (u == r) return true;
        for (const auto& rule : s.rules)
            if (auto v = stick(u, rule.right))
                if (prefix(*v) && seen.insert(*v).second) stack.push_back(*v);
    }
    return false;
}

}  // namespace bonding

#endif  // BONDING_STICKER_HPP
