#ifndef KPG_EXPR_HPP
#define KPG_EXPR_HPP

#include <sstream>
#include <string>
#include <vector>

#include "kpg/module.hpp"

namespace kpg {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline bool looks_rational(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) return false;
    bool slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash)
            slash = true;
        else if (!isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

}  // namespace detail

/// Walk expression: whitespace-separated edge ids, optional `*` suffix;
/// the rightmost letter acts first. `1_v` denotes the empty walk at v.
inline Walk parse_walk(const KGraph& g, const std::string& s) {
    std::vector<std::string> toks = detail::split_ws(s);
    if (toks.empty()) throw error("ParseError", "empty walk expression");
    Walk w;
    for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
        std::string t = *it;
        bool star = !t.empty() && t.back() == '*';
        if (star) t.pop_back();
        if (t.rfind("1_", 0) == 0) {
            std::string v = t.substr(2);
            if (!g.vertex_index.count(v)) throw error("ParseError", "unknown vertex " + v);
            if (w.letters.empty()) w.src = g.vertex_index.at(v);
            continue;
        }
        if (!g.edge_index.count(t)) throw error("ParseError", "unknown edge " + t);
        Letter l{edge_path(g, g.edge_index.at(t)), star};
        if (w.letters.empty() && w.src == -1) w.src = l.from(g);
        w.letters.push_back(l);
    }
    if (w.src == -1) throw error("ParseError", "walk has no starting vertex: " + s);
    if (!walk_valid(g, w)) throw error("NotComposable", "walk letters do not compose: " + s);
    return w;
}

/// Element expression: `c1 * walk1 + c2 * walk2`, coefficients exact
/// literals of the session field (default 1).
template <class S>
KPElement<S> parse_element(const KGraph& g, const std::string& s) {
    KPElement<S> out;
    for (std::string term : detail::split_on(s, '+')) {
        std::vector<std::string> toks = detail::split_ws(term);
        if (toks.empty()) throw error("ParseError", "empty term in element expression");
        S coef = ScalarField<S>::one();
        size_t start = 0;
        if (detail::looks_rational(toks[0])) {
            coef = parse_scalar(toks[0], static_cast<const S*>(nullptr));
            start = 1;
            if (start < toks.size() && toks[start] == "*") ++start;
            if (start == toks.size()) throw error("ParseError", "coefficient without walk: " + term);
        }
        std::string rest;
        for (size_t i = start; i < toks.size(); ++i) rest += (i > start ? " " : "") + toks[i];
        Walk w = parse_walk(g, rest);
        out = kp_add(out, kp_scale(coef, kp_from_walk<S>(g, w)));
    }
    return out;
}

/// Vertex address literal: `CORE` or `CORE/e1.e2` (edges in application
/// order); canonicalized on parse.
inline VertexAddr parse_addr(const RepKGraph& d, const std::string& s) {
    size_t slash = s.find('/');
    std::string core = s.substr(0, slash == std::string::npos ? s.size() : slash);
    int c = d.vertex(core);
    if (slash == std::string::npos) return core_addr(d, c);
    std::vector<int> edges;
    for (const std::string& eid : detail::split_on(s.substr(slash + 1), '.')) {
        if (!d.g().edge_index.count(eid)) throw error("ParseError", "unknown edge " + eid);
        edges.push_back(d.g().edge_index.at(eid));
    }
    PathNF p = normalize_path(d.g(), d.alpha_v[static_cast<size_t>(c)], edges);
    return canonical_address(d, c, p);
}

/// Vector literal: `c1@addr1 + c2@addr2`; a bare `addr` means coefficient 1.
template <class S>
ModuleVector<S> parse_vector(const RepKGraph& d, const std::string& s) {
    ModuleVector<S> out;
    for (std::string term : detail::split_on(s, '+')) {
        std::vector<std::string> toks = detail::split_ws(term);
        std::string t;
        for (const auto& x : toks) t += x;
        if (t.empty()) throw error("ParseError", "empty term in vector expression");
        size_t at = t.find('@');
        S coef = ScalarField<S>::one();
        std::string addr = t;
        if (at != std::string::npos) {
            coef = parse_scalar(t.substr(0, at), static_cast<const S*>(nullptr));
            addr = t.substr(at + 1);
        }
        out.add(parse_addr(d, addr), coef);
    }
    return out;
}

}  // namespace kpg

#endif
