#ifndef BONDING_BUILTIN_HPP
#define BONDING_BUILTIN_HPP

#include <string>
#include <vector>

#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"

namespace bonding {

// Pseudotori: one start &(A,B,C,D), A ⊗ C = a, B ⊗ D = b.
inline BondingGrammar pseudotori() {
    BondFunction bf;
    bf.add({"A", 1}, {"C", 1}, {"a", 2});
    bf.add({"B", 1}, {"D", 1}, {"b", 2});
    return BondingGrammar({star({"A", "B", "C", "D"})},
                          {{"A", 1}, {"B", 1}, {"C", 1}, {"D", 1}}, {{"a", 2}, {"b", 2}}, bf);
}

// &(I^j, O^(i-j))
inline Hypergraph in_out_star(std::size_t i, std::size_t j) {
    std::vector<Label> labels(j, Label{"I", 1});
    labels.insert(labels.end(), i - j, Label{"O", 1});
    Hypergraph z = star(labels);
    z.declare_label({"I", 1});
    z.declare_label({"O", 1});
    return z;
}

namespace detail {

inline BondingGrammar in_out_grammar(std::vector<Hypergraph> starts) {
    BondFunction bf;
    bf.add({"O", 1}, {"I", 1}, {"b", 2});
    return BondingGrammar(std::move(starts), {{"I", 1}, {"O", 1}}, {{"b", 2}}, bf);
}

}  // namespace detail

// Connected k-regular directed graphs: starts &(I^j, O^(k-j)) for j = 0..k,
// O ⊗ I = b.
inline BondingGrammar k_regular(std::size_t k) {
    std::vector<Hypergraph> starts;
    for (std::size_t j = 0; j <= k; ++j) starts.push_back(in_out_star(k, j));
    return detail::in_out_grammar(std::move(starts));
}

// Connected directed graphs of maximum degree <= k: the start tuples of
// k_regular(0), ..., k_regular(k) concatenated.
inline BondingGrammar bounded_degree(std::size_t k) {
    std::vector<Hypergraph> starts;
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j <= i; ++j) starts.push_back(in_out_star(i, j));
    return detail::in_out_grammar(std::move(starts));
}

}  // namespace bonding

#endif  // BONDING_BUILTIN_HPP
