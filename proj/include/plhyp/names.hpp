#pragma once

#include <string>
#include <vector>

namespace plhyp {

// Deterministic, collision-free id minting for derived constructions.
// Components are escaped so nested ids never become ambiguous.
inline std::string escape_name(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\\' || c == '|' || c == ';' || c == '[' || c == ']' ||
            c == '(' || c == ')') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

inline std::string mint_tuple(const std::vector<std::string>& parts, char open,
                              char sep, char close) {
    std::string out;
    out.push_back(open);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += escape_name(parts[i]);
    }
    out.push_back(close);
    return out;
}

inline std::string mint_barycenter(const std::vector<std::string>& vertex_names) {
    return mint_tuple(vertex_names, '[', '|', ']');
}

inline std::string mint_pair(const std::string& a, const std::string& b) {
    std::string out;
    out.push_back('(');
    out += escape_name(a);
    out.push_back(';');
    out += escape_name(b);
    out.push_back(')');
    return out;
}

}  // namespace plhyp
