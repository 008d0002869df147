#ifndef BONDING_RANDOM_HPP
#define BONDING_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"

namespace bonding {

// Draws are rng() % n so that output only depends on the mt19937_64 stream,
// not on the standard library's distribution implementation.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    bool coin() { return below(2) == 1; }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

namespace detail {

// Ordered pairs (x, y) of distinct edges of h with lab(x) ⊗ lab(y) defined.
inline std::vector<std::pair<std::size_t, std::size_t>> bondable_pairs(const Hypergraph& h,
                                                                       const BondFunction& bf) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < h.edge_count(); ++x)
        for (std::size_t y = 0; y < h.edge_count(); ++y)
            if (x != y && bf.apply(h.edge(x).label, h.edge(y).label)) out.emplace_back(x, y);
    return out;
}

}  // namespace detail

struct RandomDerivation {
    DerivationTrace trace;
    Hypergraph result;
};

// Grows a connected hypergraph: one start copy, then each step bonds either
// two edges already present or an edge present with an edge of a fresh start
// copy, uniformly over all such choices. Bonds are named "b1", "b2", ...
// Stops early when nothing can be bonded.
inline RandomDerivation random_connected_derivation(const BondingGrammar& g, std::size_t steps,
                                                    Sampler& rng) {
    RandomDerivation out;
    out.trace.multiplicity.assign(g.size(), 0);
    if (g.size() == 0) return out;
    Hypergraph h;
    auto add_copy = [&](std::size_t i) {
        ++out.trace.multiplicity[i];
        append_start_copy(h, g.start(i), i + 1, out.trace.multiplicity[i]);
    };
    add_copy(rng.below(g.size()));
    const auto& bf = g.bond_function();
    for (std::size_t step = 0; step < steps; ++step) {
        // (start, edge of start, edge of h, start edge goes first)
        struct External {
            std::size_t start, fresh, present;
            bool fresh_first;
        };
        std::vector<External> external;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t f = 0; f < g.start(i).edge_count(); ++f)
                for (std::size_t x = 0; x < h.edge_count(); ++x) {
                    const auto& fl = g.start(i).edge(f).label;
                    const auto& xl = h.edge(x).label;
                    if (bf.apply(fl, xl)) external.push_back({i, f, x, true});
                    if (bf.apply(xl, fl)) external.push_back({i, f, x, false});
                }
        auto internal = detail::bondable_pairs(h, bf);
        std::size_t total = internal.size() + external.size();
        if (total == 0) break;
        std::size_t pick = rng.below(total);
        std::string first, second;
        if (pick < internal.size()) {
            first = h.edge(internal[pick].first).id;
            second = h.edge(internal[pick].second).id;
        } else {
            const auto& c = external[pick - internal.size()];
            std::string present = h.edge(c.present).id;
            add_copy(c.start);
            std::string fresh = copy_prefix(c.start + 1, out.trace.multiplicity[c.start]) +
                                g.start(c.start).edge(c.fresh).id;
            first = c.fresh_first ? fresh : present;
            second = c.fresh_first ? present : fresh;
        }
        std::string id = "b" + std::to_string(out.trace.steps.size() + 1);
        h = bond(h, first, second, bf, id);
        out.trace.steps.push_back({first, second, id});
    }
    out.result = derive(g, out.trace);
    return out;
}

// m . Z with m drawn from [0, max_copies] per start (at least one copy in
// total), followed by up to `steps` uniformly chosen bondings. The result may
// be disconnected.
inline RandomDerivation random_derivation(const BondingGrammar& g, std::size_t max_copies,
                                          std::size_t steps, Sampler& rng) {
    RandomDerivation out;
    out.trace.multiplicity.assign(g.size(), 0);
    if (g.size() == 0) return out;
    for (auto& m : out.trace.multiplicity) m = rng.below(max_copies + 1);
    if (std::all_of(out.trace.multiplicity.begin(), out.trace.multiplicity.end(),
                    [](std::size_t m) { return m == 0; }))
        out.trace.multiplicity[rng.below(g.size())] = 1;
    Hypergraph h = combine(out.trace.multiplicity, g.starts());
    for (std::size_t step = 0; step < steps; ++step) {
        auto pairs = detail::bondable_pairs(h, g.bond_function());
        if (pairs.empty()) break;
        auto [x, y] = pairs[rng.below(pairs.size())];
        std::string first = h.edge(x).id, second = h.edge(y).id;
        std::string id = "b" + std::to_string(out.trace.steps.size() + 1);
        h = bond(h, first, second, g.bond_function(), id);
        out.trace.steps.push_back({first, second, id});
    }
    out.result = std::move(h);
    return out;
}

}  // namespace bonding

#endif  // BONDING_RANDOM_HPP
