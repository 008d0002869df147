#ifndef BONDING_DOT_HPP
#define BONDING_DOT_HPP

#include <string>

#include "bonding/hypergraph.hpp"

namespace bonding {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

// Binary edges become labeled arrows from the first to the second attachment.
// Every other edge becomes a box node joined to its attachments by edges
// numbered with the attachment position. Output follows insertion order.
inline std::string to_dot(const Hypergraph& h, const std::string& name = "H") {
    using detail::dot_quote;
    std::string out = "digraph " + dot_quote(name) + " {\n";
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        out += "  " + dot_quote("v:" + h.vertex(v)) + " [shape=point, xlabel=" +
               dot_quote(h.vertex(v)) + "];\n";
    for (const auto& e : h.edges()) {
        if (e.att.size() == 2) {
            out += "  " + dot_quote("v:" + h.vertex(e.att[0])) + " -> " +
                   dot_quote("v:" + h.vertex(e.att[1])) + " [label=" + dot_quote(e.label) + "];\n";
            continue;
        }
        const std::string box = dot_quote("e:" + e.id);
        out += "  " + box + " [shape=box, label=" + dot_quote(e.label) + "];\n";
        for (std::size_t i = 0; i < e.att.size(); ++i)
            out += "  " + box + " -> " + dot_quote("v:" + h.vertex(e.att[i])) +
                   " [arrowhead=none, label=\"" + std::to_string(i + 1) + "\"];\n";
    }
    return out + "}\n";
}

}  // namespace bonding

#endif  // BONDING_DOT_HPP
