#ifndef KPG_REPGRAPH_HPP
#define KPG_REPGRAPH_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpg/kgraph.hpp"

namespace kpg {

struct CoreEdge {
    std::string id;
    int alpha_edge = -1;  // edge index in the base graph
    int src = -1;         // core vertex indices
    int rng = -1;
};

/// A representation k-graph presented by a finite backward-closed core;
/// every absent out-label denotes an implicit fresh forward-tree child.
class RepKGraph {
  public:
    std::shared_ptr<const KGraph> base;
    std::vector<std::string> core_vertices;
    std::vector<int> alpha_v;  // base vertex per core vertex
    std::vector<CoreEdge> core_edges;

    // derived
    std::map<std::string, int> vertex_index;
    std::vector<std::vector<int>> in_edge_by_color;       // [v][color-1] -> core edge
    std::vector<std::map<int, int>> out_by_label;         // [v][alpha edge] -> core edge

    const KGraph& g() const { return *base; }
    int n() const { return static_cast<int>(core_vertices.size()); }

    int vertex(const std::string& id) const {
        auto it = vertex_index.find(id);
        if (it == vertex_index.end()) throw error("UnknownVertex", id);
        return it->second;
    }

    /// explicit lift target of base edge `lam` at core vertex v, if any
    std::optional<int> explicit_step(int v, int lam) const {
        auto it = out_by_label[static_cast<size_t>(v)].find(lam);
        if (it == out_by_label[static_cast<size_t>(v)].end()) return std::nullopt;
        return core_edges[static_cast<size_t>(it->second)].rng;
    }
    /// (core source, alpha label) of the color-i in-edge of core vertex v
    std::pair<int, int> in_of(int v, int color) const {
        int e = in_edge_by_color[static_cast<size_t>(v)][static_cast<size_t>(color - 1)];
        return {core_edges[static_cast<size_t>(e)].src, core_edges[static_cast<size_t>(e)].alpha_edge};
    }

    void finalize() {
        vertex_index.clear();
        for (size_t i = 0; i < core_vertices.size(); ++i)
            vertex_index[core_vertices[i]] = static_cast<int>(i);
        in_edge_by_color.assign(core_vertices.size(),
                                std::vector<int>(static_cast<size_t>(base->k), -1));
        out_by_label.assign(core_vertices.size(), {});
        for (size_t i = 0; i < core_edges.size(); ++i) {
            const CoreEdge& e = core_edges[i];
            int color = base->edges[static_cast<size_t>(e.alpha_edge)].color;
            auto& slot = in_edge_by_color[static_cast<size_t>(e.rng)][static_cast<size_t>(color - 1)];
            if (slot == -1) slot = static_cast<int>(i);
            out_by_label[static_cast<size_t>(e.src)].emplace(e.alpha_edge, static_cast<int>(i));
        }
    }
};

/// Address of a vertex of the completed graph: a core vertex plus the
/// base path leading into the implicit forward tree (empty path = core).
/// Addresses produced by canonical_address/step functions are canonical,
/// so equality of addresses is equality of vertices.
struct VertexAddr {
    int core = -1;
    PathNF path;  // base path from alpha(core); normal form

    bool is_core() const { return path.edges.empty(); }
    bool operator==(const VertexAddr& o) const { return core == o.core && path.edges == o.path.edges; }
    bool operator<(const VertexAddr& o) const {
        if (core != o.core) return core < o.core;
        return path.edges < o.path.edges;
    }
};

inline VertexAddr core_addr(const RepKGraph& d, int v) {
    return VertexAddr{v, identity_path(d.alpha_v[static_cast<size_t>(v)])};
}

inline int alpha_of(const RepKGraph& d, const VertexAddr& a) {
    if (a.is_core()) return d.alpha_v[static_cast<size_t>(a.core)];
    return path_range(d.g(), a.path);
}

inline std::string addr_str(const RepKGraph& d, const VertexAddr& a) {
    std::string s = d.core_vertices[static_cast<size_t>(a.core)];
    if (!a.is_core()) s += "/" + path_str(d.g(), a.path);
    return s;
}

namespace detail {

/// Consume explicit first edges of (c, P), greedily by ascending color.
inline void consume_explicit(const RepKGraph& d, int& c, PathNF& p) {
    const KGraph& g = d.g();
    bool changed = true;
    while (changed && !p.edges.empty()) {
        changed = false;
        Degree deg = path_degree(g, p);
        for (int color = 1; color <= g.k; ++color) {
            if (deg.c[static_cast<size_t>(color - 1)] == 0) continue;
            auto [outer, inner] = factorize(g, p, Degree::unit(g.k, color));
            int lam = inner.edges[0];
            if (auto t = d.explicit_step(c, lam)) {
                c = *t;
                p = outer;
                changed = true;
                break;
            }
        }
    }
}

}  // namespace detail

/// Canonical address of the completed-graph vertex reached from core
/// vertex c by lifting the base path p. Distinct minimal presentations of
/// the same implicit vertex (related through commuting squares) are folded
/// to the lexicographically least one.
inline VertexAddr canonical_address(const RepKGraph& d, int c, PathNF p) {
    const KGraph& g = d.g();
    detail::consume_explicit(d, c, p);
    if (p.edges.empty()) return core_addr(d, c);

    // enumerate all fully-consumed presentations reachable by backward
    // extension + explicit consumption, bounded by the core's recurrence
    int bound = 2 * (d.n() + static_cast<int>(d.core_edges.size())) + 4;
    Degree cap = path_degree(g, p);
    for (auto& x : cap.c) x += bound;

    std::set<std::pair<int, PathNF>> seen;
    std::deque<std::pair<int, PathNF>> queue;
    std::set<std::pair<int, PathNF>> minimal;
    queue.push_back({c, p});
    seen.insert({c, p});
    while (!queue.empty()) {
        if (seen.size() > 20000) throw error("CanonicalizationOverflow", addr_str(d, {c, p}));
        auto [cv, pp] = queue.front();
        queue.pop_front();
        minimal.insert({cv, pp});  // queue entries are always fully consumed
        for (int color = 1; color <= g.k; ++color) {
            if (!path_degree(g, pp).leq(cap)) continue;
            auto [src, lam] = d.in_of(cv, color);
            int c2 = src;
            PathNF p2 = compose(g, pp, edge_path(g, lam));
            detail::consume_explicit(d, c2, p2);
            if (!path_degree(g, p2).leq(cap)) continue;
            if (seen.insert({c2, p2}).second) queue.push_back({c2, p2});
        }
    }
    auto best = minimal.begin();
    for (auto it = minimal.begin(); it != minimal.end(); ++it) {
        auto key = [&](const std::pair<int, PathNF>& r) {
            return std::tuple(path_degree(g, r.second).c, r.first, r.second.edges);
        };
        if (key(*it) < key(*best)) best = it;
    }
    return VertexAddr{best->first, best->second};
}

/// Range of the unique lift of base edge `lam` at u; nullopt when
/// s(lam) != alpha(u).
inline std::optional<VertexAddr> step_forward(const RepKGraph& d, const VertexAddr& u, int lam) {
    const KGraph& g = d.g();
    if (g.edges[static_cast<size_t>(lam)].src != alpha_of(d, u)) return std::nullopt;
    if (u.is_core()) {
        if (auto t = d.explicit_step(u.core, lam)) return core_addr(d, *t);
        return canonical_address(d, u.core, edge_path(g, lam));
    }
    return canonical_address(d, u.core, compose(g, edge_path(g, lam), u.path));
}

/// Source of the unique color-i in-edge of u, with its alpha label. Total.
inline std::pair<VertexAddr, int> step_backward(const RepKGraph& d, const VertexAddr& u, int color) {
    const KGraph& g = d.g();
    int c = u.core;
    PathNF p = u.path;
    if (path_degree(g, p).c[static_cast<size_t>(color - 1)] == 0) {
        auto [src, lam] = d.in_of(c, color);
        if (p.edges.empty()) return {core_addr(d, src), lam};
        c = src;
        p = compose(g, p, edge_path(g, lam));
    }
    Degree m = path_degree(g, p);
    m.c[static_cast<size_t>(color - 1)] -= 1;
    auto [outer, inner] = factorize(g, p, m);  // outer = single color-i edge
    return {canonical_address(d, c, inner), outer.edges[0]};
}

/// Source of the unique in-path of u whose alpha image is `lambda`;
/// nullopt when the labels do not match (the sigma_{lambda*} case split).
inline std::optional<VertexAddr> step_backward_path(const RepKGraph& d, const VertexAddr& u,
                                                    const PathNF& lambda) {
    const KGraph& g = d.g();
    VertexAddr at = u;
    PathNF rest = lambda;
    while (!rest.edges.empty()) {
        int color = g.edges[static_cast<size_t>(rest.edges.back())].color;
        Degree m = path_degree(g, rest);
        m.c[static_cast<size_t>(color - 1)] -= 1;
        auto [outer, inner] = factorize(g, rest, m);
        auto [parent, lab] = step_backward(d, at, color);
        if (lab != outer.edges[0]) return std::nullopt;
        at = parent;
        rest = inner;
    }
    return at;
}

/// Forward lift of a full base path (always defined when sources match).
inline std::optional<VertexAddr> step_forward_path(const RepKGraph& d, const VertexAddr& u,
                                                   const PathNF& lambda) {
    if (alpha_of(d, u) != lambda.src) return std::nullopt;
    VertexAddr at = u;
    for (int e : lambda.edges) {
        auto next = step_forward(d, at, e);
        if (!next) return std::nullopt;
        at = *next;
    }
    return at;
}

using VertexPartition = std::vector<std::vector<int>>;  // blocks of core indices

/// The restriction of ~ (equality of backward alpha-in-path maps) to core
/// vertices: coarsest partition refined by per-color in-labels and in-parent
/// blocks (backward partition refinement, greatest fixpoint).
inline VertexPartition sim_relation(const RepKGraph& d) {
    int n = d.n();
    std::vector<int> block(static_cast<size_t>(n));
    {
        std::map<int, std::vector<int>> by_alpha;
        for (int v = 0; v < n; ++v) by_alpha[d.alpha_v[static_cast<size_t>(v)]].push_back(v);
        int b = 0;
        for (auto& [a, vs] : by_alpha) {
            for (int v : vs) block[static_cast<size_t>(v)] = b;
            ++b;
        }
    }
    for (;;) {
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig{block[static_cast<size_t>(v)]};
            for (int c = 1; c <= d.g().k; ++c) {
                auto [src, lam] = d.in_of(v, c);
                sig.push_back(lam);
                sig.push_back(block[static_cast<size_t>(src)]);
            }
            split[sig].push_back(v);
        }
        std::set<int> old(block.begin(), block.end());
        if (split.size() == old.size()) break;
        int b = 0;
        for (auto& [sig, vs] : split) {
            for (int v : vs) block[static_cast<size_t>(v)] = b;
            ++b;
        }
    }
    std::map<int, std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) blocks[block[static_cast<size_t>(v)]].push_back(v);
    VertexPartition out;
    for (auto& [b, vs] : blocks) out.push_back(vs);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_irreducible(const RepKGraph& d) {
    for (const auto& b : sim_relation(d))
        if (b.size() > 1) return false;
    return true;
}

struct AdmissibilityResult {
    bool admissible = true;
    std::string witness;
};

/// Def.-3.7-style check on a core partition: finer than ~, closed under
/// matched one-step lifts (explicit forward targets in one block; backward
/// labels equal with sources in one block).
inline AdmissibilityResult is_admissible(const RepKGraph& d, const VertexPartition& p) {
    std::vector<int> block(static_cast<size_t>(d.n()), -1);
    for (size_t b = 0; b < p.size(); ++b)
        for (int v : p[b]) block[static_cast<size_t>(v)] = static_cast<int>(b);
    for (int v = 0; v < d.n(); ++v)
        if (block[static_cast<size_t>(v)] < 0)
            return {false, "vertex " + d.core_vertices[static_cast<size_t>(v)] + " not covered"};

    std::vector<int> simb(static_cast<size_t>(d.n()));
    {
        auto sim = sim_relation(d);
        for (size_t b = 0; b < sim.size(); ++b)
            for (int v : sim[b]) simb[static_cast<size_t>(v)] = static_cast<int>(b);
    }
    for (const auto& blk : p) {
        for (size_t i = 1; i < blk.size(); ++i) {
            int u = blk[0], v = blk[i];
            if (simb[static_cast<size_t>(u)] != simb[static_cast<size_t>(v)])
                return {false, d.core_vertices[static_cast<size_t>(u)] + " !~ " +
                                   d.core_vertices[static_cast<size_t>(v)]};
            for (int c = 1; c <= d.g().k; ++c) {
                auto [su, lu] = d.in_of(u, c);
                auto [sv, lv] = d.in_of(v, c);
                if (lu != lv || block[static_cast<size_t>(su)] != block[static_cast<size_t>(sv)])
                    return {false, "backward color " + std::to_string(c) + " splits " +
                                       d.core_vertices[static_cast<size_t>(u)] + "," +
                                       d.core_vertices[static_cast<size_t>(v)]};
            }
            for (size_t lam = 0; lam < d.g().edges.size(); ++lam) {
                auto tu = d.explicit_step(u, static_cast<int>(lam));
                auto tv = d.explicit_step(v, static_cast<int>(lam));
                if (tu && tv && block[static_cast<size_t>(*tu)] != block[static_cast<size_t>(*tv)])
                    return {false, "forward " + d.g().edges[lam].id + " splits " +
                                       d.core_vertices[static_cast<size_t>(u)] + "," +
                                       d.core_vertices[static_cast<size_t>(v)]};
            }
        }
    }
    return {true, ""};
}

inline ValidationReport validate_rep(RepKGraph& d);

/// Quotient of the core by an admissible partition; explicit targets win
/// over implicit branches at the block level.
inline RepKGraph quotient(const RepKGraph& d, const VertexPartition& p) {
    auto adm = is_admissible(d, p);
    if (!adm.admissible) throw error("NotAdmissible", adm.witness);
    std::vector<int> block(static_cast<size_t>(d.n()), -1);
    for (size_t b = 0; b < p.size(); ++b)
        for (int v : p[b]) block[static_cast<size_t>(v)] = static_cast<int>(b);

    RepKGraph q;
    q.base = d.base;
    for (const auto& blk : p) {
        std::string id;
        for (int v : blk) id += (id.empty() ? "" : "+") + d.core_vertices[static_cast<size_t>(v)];
        q.core_vertices.push_back(id);
        q.alpha_v.push_back(d.alpha_v[static_cast<size_t>(blk[0])]);
    }
    // one in-edge per (block, color); members agree by admissibility
    for (size_t b = 0; b < p.size(); ++b)
        for (int c = 1; c <= d.g().k; ++c) {
            auto [src, lam] = d.in_of(p[b][0], c);
            q.core_edges.push_back(CoreEdge{q.core_vertices[b] + ":c" + std::to_string(c), lam,
                                            block[static_cast<size_t>(src)], static_cast<int>(b)});
        }
    q.finalize();
    ValidationReport rep = validate_rep(q);
    if (!rep.ok()) throw error("NotAdmissible", "quotient invalid: " + rep.issues[0].code);
    return q;
}

inline ValidationReport validate_rep(RepKGraph& d) {
    ValidationReport rep;
    d.finalize();
    const KGraph& g = d.g();
    if (d.core_vertices.empty()) {
        rep.add("Empty", "no core vertices");
        return rep;
    }
    for (const CoreEdge& e : d.core_edges) {
        const Edge& le = g.edges[static_cast<size_t>(e.alpha_edge)];
        if (d.alpha_v[static_cast<size_t>(e.src)] != le.src ||
            d.alpha_v[static_cast<size_t>(e.rng)] != le.rng)
            rep.add("AlphaEndpointMismatch", e.id);
    }
    // exactly one in-edge per color; at most one out-edge per alpha label
    std::map<std::pair<int, int>, int> in_count;
    std::map<std::pair<int, int>, int> out_count;
    for (const CoreEdge& e : d.core_edges) {
        int color = g.edges[static_cast<size_t>(e.alpha_edge)].color;
        in_count[{e.rng, color}] += 1;
        out_count[{e.src, e.alpha_edge}] += 1;
    }
    for (int v = 0; v < d.n(); ++v)
        for (int c = 1; c <= g.k; ++c) {
            int cnt = in_count.count({v, c}) ? in_count[{v, c}] : 0;
            if (cnt == 0)
                rep.add("MissingInEdge",
                        d.core_vertices[static_cast<size_t>(v)] + " color " + std::to_string(c));
            if (cnt > 1)
                rep.add("DuplicateInEdge",
                        d.core_vertices[static_cast<size_t>(v)] + " color " + std::to_string(c));
        }
    for (auto& [key, cnt] : out_count)
        if (cnt > 1)
            rep.add("DuplicateOutLabel", d.core_vertices[static_cast<size_t>(key.first)] + " label " +
                                             g.edges[static_cast<size_t>(key.second)].id);
    if (!rep.ok()) return rep;

    // square compatibility: every fully explicit bicolored 2-path must have
    // its partner factorization explicit with the same endpoint
    for (const CoreEdge& a : d.core_edges)
        for (const CoreEdge& b : d.core_edges) {
            if (b.src != a.rng) continue;
            int ca = g.edges[static_cast<size_t>(a.alpha_edge)].color;
            int cb = g.edges[static_cast<size_t>(b.alpha_edge)].color;
            if (ca == cb) continue;
            PathNF p = normalize_path(g, g.edges[static_cast<size_t>(a.alpha_edge)].src,
                                      {a.alpha_edge, b.alpha_edge});
            auto [outer, inner] = factorize(g, p, Degree::unit(g.k, cb));
            auto x = d.explicit_step(a.src, inner.edges[0]);
            std::optional<int> y = x ? d.explicit_step(*x, outer.edges[0]) : std::nullopt;
            if (!x || !y || *y != b.rng)
                rep.add("SquareIncompatible", a.id + " then " + b.id);
        }

    // core connectivity (the implicit trees hang off the core)
    std::vector<bool> vis(static_cast<size_t>(d.n()), false);
    std::vector<int> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const CoreEdge& e : d.core_edges) {
            if (e.src == v && !vis[static_cast<size_t>(e.rng)]) {
                vis[static_cast<size_t>(e.rng)] = true;
                stack.push_back(e.rng);
            }
            if (e.rng == v && !vis[static_cast<size_t>(e.src)]) {
                vis[static_cast<size_t>(e.src)] = true;
                stack.push_back(e.src);
            }
        }
    }
    for (int v = 0; v < d.n(); ++v)
        if (!vis[static_cast<size_t>(v)]) rep.add("Disconnected", d.core_vertices[static_cast<size_t>(v)]);
    return rep;
}

/// Finite invariant of the full backward in-path map of a core vertex: the
/// reachable part of the ~-quotient backward transition system, pointed at
/// v's class and BFS-numbered, serialized to a string. Two core vertices
/// (possibly of different representation graphs over the same base) have
/// equal backward maps iff their backward words are equal.
inline std::string backward_word(const RepKGraph& d, int v) {
    auto sim = sim_relation(d);
    std::vector<int> block(static_cast<size_t>(d.n()));
    for (size_t b = 0; b < sim.size(); ++b)
        for (int u : sim[b]) block[static_cast<size_t>(u)] = static_cast<int>(b);
    std::map<int, int> number;  // block -> BFS index
    std::deque<int> queue{block[static_cast<size_t>(v)]};
    number[block[static_cast<size_t>(v)]] = 0;
    std::string out;
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        int rep = sim[static_cast<size_t>(b)][0];
        for (int c = 1; c <= d.g().k; ++c) {
            auto [src, lam] = d.in_of(rep, c);
            int pb = block[static_cast<size_t>(src)];
            if (!number.count(pb)) {
                number[pb] = static_cast<int>(number.size());
                queue.push_back(pb);
            }
            out += d.g().edges[static_cast<size_t>(lam)].id + ">" + std::to_string(number[pb]) + ";";
        }
        out += "|";
    }
    return out;
}

/// True iff the two representation graphs (over one base) lie in the same
/// component: some core vertex of d1 and some core vertex of d2 have equal
/// backward in-path maps, compared via canonical backward words.
inline bool same_component(const RepKGraph& d1, const RepKGraph& d2) {
    if (d1.g().edges.size() != d2.g().edges.size() || d1.g().k != d2.g().k)
        throw error("DifferentBase", "representation graphs have different bases");
    std::set<std::string> w1;
    for (int v = 0; v < d1.n(); ++v) w1.insert(backward_word(d1, v));
    for (int v = 0; v < d2.n(); ++v)
        if (w1.count(backward_word(d2, v))) return true;
    return false;
}

struct MorphismResult {
    bool ok = true;
    std::string witness;
};

/// Checks that the core vertex map vmap (indices of d1 -> indices of d2)
/// underlies an alpha-compatible morphism of representation graphs. Edge
/// images are forced by labels, so only consistency needs verification.
inline MorphismResult check_morphism(const RepKGraph& d1, const RepKGraph& d2,
                                     const std::vector<int>& vmap) {
    if (d1.base.get() != d2.base.get() && d1.base->edges.size() != d2.base->edges.size())
        return {false, "different base graphs"};
    for (int v = 0; v < d1.n(); ++v)
        if (d1.alpha_v[static_cast<size_t>(v)] != d2.alpha_v[static_cast<size_t>(vmap[static_cast<size_t>(v)])])
            return {false, "alpha mismatch at " + d1.core_vertices[static_cast<size_t>(v)]};
    for (const CoreEdge& e : d1.core_edges) {
        auto t = d2.explicit_step(vmap[static_cast<size_t>(e.src)], e.alpha_edge);
        if (!t || *t != vmap[static_cast<size_t>(e.rng)])
            return {false, "edge " + e.id + " has no matching image"};
    }
    return {true, ""};
}

/// A morphism is a covering when it is locally bijective: the core in-edges
/// already biject by construction, so it remains to check that explicit
/// out-labels of v and of its image coincide (a strictly larger label set
/// downstairs would merge an implicit branch into the core).
inline MorphismResult check_covering(const RepKGraph& d1, const RepKGraph& d2,
                                     const std::vector<int>& vmap) {
    MorphismResult m = check_morphism(d1, d2, vmap);
    if (!m.ok) return m;
    for (int v = 0; v < d1.n(); ++v) {
        int w = vmap[static_cast<size_t>(v)];
        for (auto& [lam, e] : d2.out_by_label[static_cast<size_t>(w)])
            if (!d1.out_by_label[static_cast<size_t>(v)].count(lam))
                return {false, "label " + d2.g().edges[static_cast<size_t>(lam)].id +
                                   " explicit below but not at " +
                                   d1.core_vertices[static_cast<size_t>(v)]};
        for (auto& [lam, e] : d1.out_by_label[static_cast<size_t>(v)])
            if (!d2.out_by_label[static_cast<size_t>(w)].count(lam))
                return {false, "label " + d1.g().edges[static_cast<size_t>(lam)].id +
                                   " explicit above but not at " +
                                   d2.core_vertices[static_cast<size_t>(static_cast<size_t>(w))]};
    }
    return {true, ""};
}

/// Canonical serialization of the core up to label-preserving isomorphism:
/// BFS numbering from each candidate root (ties broken by alpha vertex and
/// backward word), keeping the lexicographically least serialization.
inline std::string canonical_form(const RepKGraph& d) {
    const KGraph& g = d.g();
    auto serialize = [&](int root) {
        std::vector<int> number(static_cast<size_t>(d.n()), -1);
        std::deque<int> queue{root};
        number[static_cast<size_t>(root)] = 0;
        int next = 1;
        std::string s;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            s += "v" + std::to_string(d.alpha_v[static_cast<size_t>(v)]) + "{";
            for (int c = 1; c <= g.k; ++c) {
                auto [src, lam] = d.in_of(v, c);
                if (number[static_cast<size_t>(src)] == -1) {
                    number[static_cast<size_t>(src)] = next++;
                    queue.push_back(src);
                }
                s += "<" + g.edges[static_cast<size_t>(lam)].id + ":" +
                     std::to_string(number[static_cast<size_t>(src)]);
            }
            std::vector<std::string> outs;
            for (auto& [lam, e] : d.out_by_label[static_cast<size_t>(v)]) {
                int t = d.core_edges[static_cast<size_t>(e)].rng;
                if (number[static_cast<size_t>(t)] == -1) {
                    number[static_cast<size_t>(t)] = next++;
                    queue.push_back(t);
                }
                outs.push_back(">" + g.edges[static_cast<size_t>(lam)].id + ":" +
                               std::to_string(number[static_cast<size_t>(t)]));
            }
            std::sort(outs.begin(), outs.end());
            for (auto& o : outs) s += o;
            s += "}";
        }
        return s;
    };
    std::string best;
    for (int v = 0; v < d.n(); ++v) {
        std::string s = serialize(v);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

inline bool isomorphic(const RepKGraph& a, const RepKGraph& b) {
    return canonical_form(a) == canonical_form(b);
}

}  // namespace kpg

#endif
