#ifndef KPG_KGRAPH_HPP
#define KPG_KGRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kpg/degree.hpp"
#include "kpg/error.hpp"

namespace kpg {

struct Edge {
    std::string id;
    int color = 1;  // 1-based
    int src = -1;
    int rng = -1;
};

/// One violated invariant found during validation, with a witness.
struct Issue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Issue> issues;
    bool ok() const { return issues.empty(); }
    bool has(const std::string& code) const {
        for (const Issue& i : issues)
            if (i.code == code) return true;
        return false;
    }
    void add(std::string code, std::string detail) {
        issues.push_back({std::move(code), std::move(detail)});
    }
};

/// A row-finite k-graph with no sources, presented by its colored skeleton
/// and the commuting squares. Immutable once validated.
class KGraph {
  public:
    int k = 1;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    /// square pairs as ((inner, outer), (inner, outer)) edge indices;
    /// the inner edge of a 2-path is the one applied first.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> squares;

    // derived lookups, filled by finalize()
    std::map<std::string, int> vertex_index;
    std::map<std::string, int> edge_index;
    std::vector<std::vector<int>> out_edges;  // by src vertex
    std::vector<std::vector<int>> in_edges;   // by rng vertex
    std::map<std::pair<int, int>, std::pair<int, int>> square_of;  // (inner,outer) -> partner

    int vertex(const std::string& id) const {
        auto it = vertex_index.find(id);
        if (it == vertex_index.end()) throw error("UnknownVertex", id);
        return it->second;
    }
    int edge(const std::string& id) const {
        auto it = edge_index.find(id);
        if (it == edge_index.end()) throw error("UnknownEdge", id);
        return it->second;
    }

    void finalize() {
        vertex_index.clear();
        edge_index.clear();
        for (size_t i = 0; i < vertices.size(); ++i) vertex_index[vertices[i]] = static_cast<int>(i);
        for (size_t i = 0; i < edges.size(); ++i) edge_index[edges[i].id] = static_cast<int>(i);
        out_edges.assign(vertices.size(), {});
        in_edges.assign(vertices.size(), {});
        for (size_t i = 0; i < edges.size(); ++i) {
            out_edges[static_cast<size_t>(edges[i].src)].push_back(static_cast<int>(i));
            in_edges[static_cast<size_t>(edges[i].rng)].push_back(static_cast<int>(i));
        }
        square_of.clear();
        for (const auto& [a, b] : squares) {
            square_of[a] = b;
            square_of[b] = a;
        }
    }
};

/// A path in color-sorted normal form: edge list in application order
/// (edges[0] leaves src first), all color-1 edges, then color-2, ...
struct PathNF {
    int src = -1;
    std::vector<int> edges;

    bool operator==(const PathNF& o) const = default;
    bool operator<(const PathNF& o) const {
        if (src != o.src) return src < o.src;
        return edges < o.edges;
    }
    bool empty() const { return edges.empty(); }
};

inline PathNF identity_path(int v) { return PathNF{v, {}}; }

inline int path_range(const KGraph& g, const PathNF& p) {
    return p.edges.empty() ? p.src : g.edges[static_cast<size_t>(p.edges.back())].rng;
}
inline int path_source(const KGraph&, const PathNF& p) { return p.src; }

inline Degree path_degree(const KGraph& g, const PathNF& p) {
    Degree d(g.k);
    for (int e : p.edges) d.c[static_cast<size_t>(g.edges[static_cast<size_t>(e)].color - 1)] += 1;
    return d;
}

inline std::string path_str(const KGraph& g, const PathNF& p) {
    if (p.edges.empty()) return "1_" + g.vertices[static_cast<size_t>(p.src)];
    std::string s;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += ".";
        s += g.edges[static_cast<size_t>(p.edges[i])].id;
    }
    return s;
}

namespace detail {

/// Swap the adjacent bicolored pair at position i via the commuting square.
inline void square_swap(const KGraph& g, std::vector<int>& word, size_t i) {
    auto it = g.square_of.find({word[i], word[i + 1]});
    if (it == g.square_of.end())
        throw error("MissingSquare", g.edges[static_cast<size_t>(word[i])].id + "," +
                                         g.edges[static_cast<size_t>(word[i + 1])].id);
    word[i] = it->second.first;
    word[i + 1] = it->second.second;
}

inline int color_of(const KGraph& g, int e) { return g.edges[static_cast<size_t>(e)].color; }

/// Bubble sort the word into ascending color order using square swaps.
/// leftmost=true picks the leftmost unsorted pair each round (the canonical
/// strategy); the alternative is used only by the hexagon check.
inline void color_sort(const KGraph& g, std::vector<int>& word, bool leftmost = true) {
    bool changed = true;
    while (changed) {
        changed = false;
        if (leftmost) {
            for (size_t i = 0; i + 1 < word.size(); ++i)
                if (color_of(g, word[i]) > color_of(g, word[i + 1])) {
                    square_swap(g, word, i);
                    changed = true;
                    break;
                }
        } else {
            for (size_t i = word.size(); i >= 2; --i)
                if (color_of(g, word[i - 2]) > color_of(g, word[i - 1])) {
                    square_swap(g, word, i - 2);
                    changed = true;
                    break;
                }
        }
    }
}

}  // namespace detail

/// Normal form of an edge sequence (application order, starting at src).
inline PathNF normalize_path(const KGraph& g, int src, std::vector<int> word) {
    int at = src;
    for (int e : word) {
        if (g.edges[static_cast<size_t>(e)].src != at)
            throw error("NotComposable", "edge " + g.edges[static_cast<size_t>(e)].id +
                                             " does not continue at " +
                                             g.vertices[static_cast<size_t>(at)]);
        at = g.edges[static_cast<size_t>(e)].rng;
    }
    detail::color_sort(g, word);
    return PathNF{src, std::move(word)};
}

inline PathNF edge_path(const KGraph& g, int e) {
    return PathNF{g.edges[static_cast<size_t>(e)].src, {e}};
}

/// lambda after mu: requires s(lambda) = r(mu).
inline PathNF compose(const KGraph& g, const PathNF& lambda, const PathNF& mu) {
    if (lambda.src != path_range(g, mu))
        throw error("NotComposable", "s(lambda) != r(mu)");
    std::vector<int> word = mu.edges;
    word.insert(word.end(), lambda.edges.begin(), lambda.edges.end());
    return normalize_path(g, mu.src, std::move(word));
}

/// Unique (mu, nu) with mu o nu = lambda and d(nu) = m. nu is the part
/// applied first. Realizes the factorisation property.
inline std::pair<PathNF, PathNF> factorize(const KGraph& g, const PathNF& lambda,
                                           const Degree& m) {
    Degree d = path_degree(g, lambda);
    if (!m.leq(d) || !Degree(g.k).leq(m))
        throw error("DegreeOutOfRange", m.str() + " not within d(lambda) = " + d.str());
    std::vector<int> word = lambda.edges;
    std::vector<int> inner_word;
    Degree want = m;
    while (!want.is_zero()) {
        // first edge whose color is still wanted; everything before it has an
        // exhausted color, so the square swaps below are all bicolored
        size_t pos = 0;
        while (want.c[static_cast<size_t>(detail::color_of(g, word[pos]) - 1)] == 0) ++pos;
        for (size_t i = pos; i > 0; --i) detail::square_swap(g, word, i - 1);
        want.c[static_cast<size_t>(detail::color_of(g, word[0]) - 1)] -= 1;
        inner_word.push_back(word[0]);
        word.erase(word.begin());
    }
    PathNF nu = normalize_path(g, lambda.src, std::move(inner_word));
    PathNF mu_part = normalize_path(g, path_range(g, nu), std::move(word));
    return {mu_part, nu};
}

namespace detail {

inline void grow_from(const KGraph& g, int at, const Degree& left, std::vector<int>& word,
                      std::vector<PathNF>& out, int start_src) {
    if (left.is_zero()) {
        out.push_back(PathNF{start_src, word});
        return;
    }
    int color = 0;
    for (int i = 0; i < g.k; ++i)
        if (left.c[static_cast<size_t>(i)] > 0) {
            color = i + 1;
            break;
        }
    Degree rest = left;
    rest.c[static_cast<size_t>(color - 1)] -= 1;
    for (int e : g.out_edges[static_cast<size_t>(at)])
        if (g.edges[static_cast<size_t>(e)].color == color) {
            word.push_back(e);
            grow_from(g, g.edges[static_cast<size_t>(e)].rng, rest, word, out, start_src);
            word.pop_back();
        }
}

inline void grow_into(const KGraph& g, int at, const Degree& left, std::vector<int>& word,
                      std::vector<PathNF>& out) {
    if (left.is_zero()) {
        out.push_back(PathNF{at, std::vector<int>(word.rbegin(), word.rend())});
        return;
    }
    int color = 0;
    for (int i = g.k; i >= 1; --i)
        if (left.c[static_cast<size_t>(i - 1)] > 0) {
            color = i;
            break;
        }
    Degree rest = left;
    rest.c[static_cast<size_t>(color - 1)] -= 1;
    for (int e : g.in_edges[static_cast<size_t>(at)])
        if (g.edges[static_cast<size_t>(e)].color == color) {
            word.push_back(e);
            grow_into(g, g.edges[static_cast<size_t>(e)].src, rest, word, out);
            word.pop_back();
        }
}

}  // namespace detail

/// All paths of degree n with source v, each in normal form.
inline std::vector<PathNF> paths_from(const KGraph& g, int v, const Degree& n) {
    std::vector<PathNF> out;
    std::vector<int> word;
    detail::grow_from(g, v, n, word, out, v);
    std::sort(out.begin(), out.end());
    return out;
}

/// All paths of degree n with range v.
inline std::vector<PathNF> paths_into(const KGraph& g, int v, const Degree& n) {
    std::vector<PathNF> out;
    std::vector<int> word;
    detail::grow_into(g, v, n, word, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// All (alpha, beta) with mu o alpha = nu o beta of degree d(mu) v d(nu).
inline std::vector<std::pair<PathNF, PathNF>> minimal_common_extensions(const KGraph& g,
                                                                        const PathNF& mu,
                                                                        const PathNF& nu) {
    std::vector<std::pair<PathNF, PathNF>> out;
    if (path_range(g, mu) != path_range(g, nu)) return out;
    Degree dm = path_degree(g, mu), dn = path_degree(g, nu);
    Degree lub = dm.join(dn);
    for (const PathNF& gamma : paths_into(g, path_range(g, mu), lub)) {
        auto [m1, alpha] = factorize(g, gamma, lub - dm);
        if (!(m1 == mu)) continue;
        auto [n1, beta] = factorize(g, gamma, lub - dn);
        if (!(n1 == nu)) continue;
        out.emplace_back(alpha, beta);
    }
    return out;
}

/// Checks every KGraph invariant; issues carry witnesses.
inline ValidationReport validate_kgraph(const KGraph& g) {
    ValidationReport rep;
    if (g.vertices.empty()) {
        rep.add("Empty", "no vertices");
        return rep;
    }
    for (const Edge& e : g.edges)
        if (e.color < 1 || e.color > g.k)
            rep.add("BadColor", e.id);
    if (!rep.ok()) return rep;

    // factorisation property: each bicolored 2-path in exactly one square,
    // with a partner of swapped color order and matching endpoints
    std::map<std::pair<int, int>, int> seen;
    for (const auto& [a, b] : g.squares) {
        seen[a] += 1;
        seen[b] += 1;
        const Edge &ai = g.edges[static_cast<size_t>(a.first)], &ao = g.edges[static_cast<size_t>(a.second)];
        const Edge &bi = g.edges[static_cast<size_t>(b.first)], &bo = g.edges[static_cast<size_t>(b.second)];
        bool shape = ai.rng == ao.src && bi.rng == bo.src && ai.color != ao.color &&
                     ai.color == bo.color && ao.color == bi.color;
        bool ends = ai.src == bi.src && ao.rng == bo.rng;
        if (!shape || !ends)
            rep.add("SquareEndpointMismatch", ai.id + "." + ao.id + " ~ " + bi.id + "." + bo.id);
    }
    for (size_t ei = 0; ei < g.edges.size(); ++ei)
        for (size_t eo = 0; eo < g.edges.size(); ++eo) {
            const Edge &inner = g.edges[ei], &outer = g.edges[eo];
            if (inner.rng != outer.src || inner.color == outer.color) continue;
            int n = seen.count({static_cast<int>(ei), static_cast<int>(eo)})
                        ? seen[{static_cast<int>(ei), static_cast<int>(eo)}]
                        : 0;
            if (n == 0) rep.add("MissingSquare", inner.id + " then " + outer.id);
            if (n > 1) rep.add("DuplicateSquare", inner.id + " then " + outer.id);
        }

    // no sources: an in-edge of every color at every vertex
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int c = 1; c <= g.k; ++c) {
            bool found = false;
            for (int e : g.in_edges[v])
                if (g.edges[static_cast<size_t>(e)].color == c) found = true;
            if (!found) rep.add("SourceVertex", g.vertices[v] + " color " + std::to_string(c));
        }

    // connectivity of the undirected skeleton
    if (!g.vertices.empty()) {
        std::vector<bool> vis(g.vertices.size(), false);
        std::vector<int> stack{0};
        vis[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.out_edges[static_cast<size_t>(v)])
                if (!vis[static_cast<size_t>(g.edges[static_cast<size_t>(e)].rng)]) {
                    vis[static_cast<size_t>(g.edges[static_cast<size_t>(e)].rng)] = true;
                    stack.push_back(g.edges[static_cast<size_t>(e)].rng);
                }
            for (int e : g.in_edges[static_cast<size_t>(v)])
                if (!vis[static_cast<size_t>(g.edges[static_cast<size_t>(e)].src)]) {
                    vis[static_cast<size_t>(g.edges[static_cast<size_t>(e)].src)] = true;
                    stack.push_back(g.edges[static_cast<size_t>(e)].src);
                }
        }
        for (size_t v = 0; v < g.vertices.size(); ++v)
            if (!vis[v]) rep.add("Disconnected", g.vertices[v]);
    }
    if (!rep.ok()) return rep;

    // associativity for k >= 3: both swap orders on every tricolored 3-path
    // must give the same normal form
    if (g.k >= 3) {
        for (size_t v = 0; v < g.vertices.size(); ++v)
            for (int e1 : g.out_edges[v])
                for (int e2 : g.out_edges[static_cast<size_t>(g.edges[static_cast<size_t>(e1)].rng)])
                    for (int e3 : g.out_edges[static_cast<size_t>(g.edges[static_cast<size_t>(e2)].rng)]) {
                        int c1 = detail::color_of(g, e1), c2 = detail::color_of(g, e2),
                            c3 = detail::color_of(g, e3);
                        if (c1 == c2 || c1 == c3 || c2 == c3) continue;
                        std::vector<int> a{e1, e2, e3}, b{e1, e2, e3};
                        detail::color_sort(g, a, true);
                        detail::color_sort(g, b, false);
                        if (a != b)
                            rep.add("HexagonFailure",
                                    g.edges[static_cast<size_t>(e1)].id + "." +
                                        g.edges[static_cast<size_t>(e2)].id + "." +
                                        g.edges[static_cast<size_t>(e3)].id);
                    }
    }
    return rep;
}

}  // namespace kpg

#endif
