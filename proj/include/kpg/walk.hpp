#ifndef KPG_WALK_HPP
#define KPG_WALK_HPP

#include <optional>
#include <string>
#include <vector>

#include "kpg/repgraph.hpp"

namespace kpg {

/// One letter of a walk: a path traversed forward, or backward when starred.
struct Letter {
    PathNF path;
    bool star = false;

    int from(const KGraph& g) const { return star ? path_range(g, path) : path.src; }
    int to(const KGraph& g) const { return star ? path.src : path_range(g, path); }
    bool operator==(const Letter& o) const {
        return star == o.star && path.src == o.path.src && path.edges == o.path.edges;
    }
};

/// A walk in the doubled graph; letters are applied left to right starting
/// at src. The empty walk is the trivial walk at src.
struct Walk {
    int src = -1;
    std::vector<Letter> letters;

    bool operator==(const Walk& o) const { return src == o.src && letters == o.letters; }
};

inline bool walk_valid(const KGraph& g, const Walk& w) {
    int at = w.src;
    for (const Letter& l : w.letters) {
        if (l.from(g) != at) return false;
        at = l.to(g);
    }
    return true;
}

inline int walk_rng(const KGraph& g, const Walk& w) {
    return w.letters.empty() ? w.src : w.letters.back().to(g);
}

inline Walk star(const KGraph& g, const Walk& w) {
    Walk out;
    out.src = walk_rng(g, w);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(Letter{it->path, !it->star});
    return out;
}

inline Walk concat(const KGraph& g, const Walk& a, const Walk& b) {
    if (walk_rng(g, a) != b.src) throw error("NotComposable", "walk endpoints do not match");
    Walk out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

inline std::string walk_str(const KGraph& g, const Walk& w) {
    if (w.letters.empty()) return "1_" + g.vertices[static_cast<size_t>(w.src)];
    std::string s;
    for (const Letter& l : w.letters) {
        if (!s.empty()) s += " ";
        s += path_str(g, l.path) + (l.star ? "*" : "");
    }
    return s;
}

namespace detail {

/// Strip the maximal (greedily, color by color) common last-applied factor
/// of p and q; returns its degree.
inline void strip_common_outer(const KGraph& g, PathNF& p, PathNF& q) {
    bool changed = true;
    while (changed) {
        changed = false;
        Degree dp = path_degree(g, p), dq = path_degree(g, q);
        for (int c = 1; c <= g.k; ++c) {
            if (dp.c[static_cast<size_t>(c - 1)] == 0 || dq.c[static_cast<size_t>(c - 1)] == 0)
                continue;
            Degree mp = dp, mq = dq;
            mp.c[static_cast<size_t>(c - 1)] -= 1;
            mq.c[static_cast<size_t>(c - 1)] -= 1;
            auto [po, pi] = factorize(g, p, mp);
            auto [qo, qi] = factorize(g, q, mq);
            if (po.edges == qo.edges) {
                p = pi;
                q = qi;
                changed = true;
                break;
            }
        }
    }
}

/// Strip the maximal common first-applied factor of p and q.
inline void strip_common_inner(const KGraph& g, PathNF& p, PathNF& q) {
    bool changed = true;
    while (changed) {
        changed = false;
        Degree dp = path_degree(g, p), dq = path_degree(g, q);
        for (int c = 1; c <= g.k; ++c) {
            if (dp.c[static_cast<size_t>(c - 1)] == 0 || dq.c[static_cast<size_t>(c - 1)] == 0)
                continue;
            auto [po, pi] = factorize(g, p, Degree::unit(g.k, c));
            auto [qo, qi] = factorize(g, q, Degree::unit(g.k, c));
            if (pi.edges == qi.edges) {
                p = po;
                q = qo;
                changed = true;
                break;
            }
        }
    }
}

}  // namespace detail

/// Groupoid reduction: merge adjacent same-direction letters, drop identity
/// letters, cancel common boundary factors at forward/backward transitions.
/// Canonical for k = 1 (free reduction); sound for all k.
inline Walk reduce_walk(const KGraph& g, const Walk& w) {
    if (!walk_valid(g, w)) throw error("NotComposable", "invalid walk");
    std::vector<Letter> ls = w.letters;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Letter> out;
        for (Letter l : ls) {
            if (l.path.edges.empty()) {
                changed = true;
                continue;
            }
            if (out.empty()) {
                out.push_back(l);
                continue;
            }
            Letter& prev = out.back();
            if (prev.star == l.star) {
                // merge: forward p then q = q∘p; backward p* then q* = (p∘q)*
                prev.path = l.star ? compose(g, prev.path, l.path) : compose(g, l.path, prev.path);
                changed = true;
            } else {
                size_t before = prev.path.edges.size() + l.path.edges.size();
                if (!prev.star)
                    detail::strip_common_outer(g, prev.path, l.path);
                else
                    detail::strip_common_inner(g, prev.path, l.path);
                if (prev.path.edges.size() + l.path.edges.size() != before) changed = true;
                if (prev.path.edges.empty() && l.path.edges.empty())
                    out.pop_back();
                else if (prev.path.edges.empty())
                    prev = Letter{l.path, l.star};
                else if (!l.path.edges.empty())
                    out.push_back(l);
            }
        }
        ls = out;
    }
    return Walk{w.src, ls};
}

/// Lift a walk over the base to the completion of d, starting at u; the
/// endpoint, or nullopt when some starred letter's in-path label mismatches.
inline std::optional<VertexAddr> lift_walk(const RepKGraph& d, const VertexAddr& u, const Walk& w) {
    if (!walk_valid(d.g(), w) || alpha_of(d, u) != w.src) return std::nullopt;
    VertexAddr at = u;
    for (const Letter& l : w.letters) {
        std::optional<VertexAddr> next =
            l.star ? step_backward_path(d, at, l.path) : step_forward_path(d, at, l.path);
        if (!next) return std::nullopt;
        at = *next;
    }
    return at;
}

}  // namespace kpg

#endif
