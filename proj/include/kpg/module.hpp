#ifndef KPG_MODULE_HPP
#define KPG_MODULE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpg/algebra.hpp"

namespace kpg {

/// Finitely supported vector over the (usually infinite) vertex set of the
/// completion; keys are canonical addresses.
template <class S>
struct ModuleVector {
    std::map<VertexAddr, S> entries;

    bool is_zero() const { return entries.empty(); }
    void add(const VertexAddr& a, const S& c) {
        auto it = entries.find(a);
        if (it == entries.end()) {
            if (!ScalarField<S>::is_zero(c)) entries.emplace(a, c);
            return;
        }
        it->second += c;
        if (ScalarField<S>::is_zero(it->second)) entries.erase(it);
    }
    bool operator==(const ModuleVector& o) const { return entries == o.entries; }
};

template <class S>
ModuleVector<S> vec_unit(const VertexAddr& a, const S& c = ScalarField<S>::one()) {
    ModuleVector<S> v;
    v.add(a, c);
    return v;
}

template <class S>
ModuleVector<S> vec_add(const ModuleVector<S>& a, const ModuleVector<S>& b) {
    ModuleVector<S> out = a;
    for (const auto& [k, c] : b.entries) out.add(k, c);
    return out;
}

template <class S>
ModuleVector<S> vec_scale(const S& c, const ModuleVector<S>& a) {
    ModuleVector<S> out;
    for (const auto& [k, x] : a.entries) out.add(k, c * x);
    return out;
}

/// sigma_lambda (forward lift, zero off s(lambda)) or sigma_{lambda*}
/// (source of the matching in-path, zero on label mismatch).
template <class S>
ModuleVector<S> act_generator(const RepKGraph& d, const PathNF& lambda, bool starred,
                              const ModuleVector<S>& x) {
    ModuleVector<S> out;
    for (const auto& [a, c] : x.entries) {
        std::optional<VertexAddr> t =
            starred ? step_backward_path(d, a, lambda) : step_forward_path(d, a, lambda);
        if (t) out.add(*t, c);
    }
    return out;
}

template <class S>
ModuleVector<S> act_walk(const RepKGraph& d, const Walk& w, const ModuleVector<S>& x) {
    ModuleVector<S> out = x;
    for (const Letter& l : w.letters) {
        // a basis vertex with the wrong alpha is annihilated, so restrict
        ModuleVector<S> kept;
        for (const auto& [a, c] : out.entries)
            if (alpha_of(d, a) == l.from(d.g())) kept.add(a, c);
        out = act_generator(d, l.path, l.star, kept);
    }
    if (!w.letters.empty()) return out;
    ModuleVector<S> kept;
    for (const auto& [a, c] : out.entries)
        if (alpha_of(d, a) == w.src) kept.add(a, c);
    return kept;
}

template <class S>
ModuleVector<S> act_element(const RepKGraph& d, const KPElement<S>& e, const ModuleVector<S>& x) {
    ModuleVector<S> out;
    for (const auto& [m, c] : e.terms) {
        ModuleVector<S> y = act_generator(d, m.mu, true, x);
        y = act_generator(d, m.lambda, false, y);
        out = vec_add(out, vec_scale(c, y));
    }
    return out;
}

inline bool is_simple(const RepKGraph& d) { return is_irreducible(d); }

/// A ~-equivalent distinct core pair (u-v generates a proper submodule),
/// or nullopt when the graph is irreducible.
inline std::optional<std::pair<int, int>> submodule_witness(const RepKGraph& d) {
    for (const auto& b : sim_relation(d))
        if (b.size() > 1) return std::make_pair(b[0], b[1]);
    return std::nullopt;
}

namespace detail {

/// A base path lambda that is the alpha-in-path of u1 but not of u2 at one
/// degree (so the projection walk lambda* lambda keeps u1 and kills u2);
/// found at the first backward label difference.
inline std::optional<PathNF> separating_in_path(const RepKGraph& d, const VertexAddr& u1,
                                                const VertexAddr& u2) {
    const KGraph& g = d.g();
    struct State {
        VertexAddr a1, a2;
        PathNF lambda;  // in-path of a starting pair's u1 side so far
    };
    std::set<std::pair<VertexAddr, VertexAddr>> seen;
    std::deque<State> queue;
    queue.push_back({u1, u2, identity_path(alpha_of(d, u1))});
    seen.insert({u1, u2});
    size_t limit = 4 * static_cast<size_t>(d.n() + 1) * static_cast<size_t>(d.n() + 1) + 64;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (int c = 1; c <= g.k; ++c) {
            auto [p1, l1] = step_backward(d, s.a1, c);
            auto [p2, l2] = step_backward(d, s.a2, c);
            PathNF lam = compose(g, s.lambda, edge_path(g, l1));
            if (l1 != l2) return lam;
            if (seen.size() > limit) return std::nullopt;
            if (seen.insert({p1, p2}).second) queue.push_back({p1, p2, lam});
        }
    }
    return std::nullopt;
}

}  // namespace detail

template <class S>
struct ReduceCertificate {
    S scalar;
    Walk walk;
    VertexAddr vertex;
};

/// Certificate for simplicity: a scalar k and walk p with (k p).x = one
/// basis vertex, built from projection rounds lambda* lambda that separate
/// the first two support vertices.
template <class S>
ReduceCertificate<S> reduce_to_vertex(const RepKGraph& d, const ModuleVector<S>& x) {
    if (x.is_zero()) throw error("ZeroVector", "cannot reduce 0");
    const KGraph& g = d.g();
    ModuleVector<S> cur = x;
    Walk w;
    w.src = alpha_of(d, cur.entries.begin()->first);
    while (cur.entries.size() > 1) {
        auto it = cur.entries.begin();
        VertexAddr u1 = it->first;
        VertexAddr u2 = std::next(it)->first;
        PathNF lam;
        if (alpha_of(d, u1) != alpha_of(d, u2)) {
            lam = identity_path(alpha_of(d, u1));  // vertex projection suffices
        } else {
            auto sep = detail::separating_in_path(d, u1, u2);
            if (!sep)
                throw error("NotIrreducible",
                            addr_str(d, u1) + " ~ " + addr_str(d, u2) + " are inseparable");
            lam = *sep;
        }
        Walk round;
        round.src = alpha_of(d, u1);
        if (!lam.edges.empty()) {
            round.letters.push_back(Letter{lam, true});
            round.letters.push_back(Letter{lam, false});
        }
        ModuleVector<S> next = act_walk(d, round, cur);
        if (next.entries.size() >= cur.entries.size())
            throw error("NotIrreducible", "separator failed to shrink support");
        cur = next;
        w = concat(g, w, round);
    }
    const auto& [a, c] = *cur.entries.begin();
    return ReduceCertificate<S>{ScalarField<S>::one() / c, w, a};
}

/// Module map induced by a core vertex map underlying a rep morphism.
template <class S>
ModuleVector<S> hom_from_morphism(const RepKGraph& d1, const RepKGraph& d2,
                                  const std::vector<int>& vmap, const ModuleVector<S>& x) {
    ModuleVector<S> out;
    for (const auto& [a, c] : x.entries) {
        int core2 = vmap[static_cast<size_t>(a.core)];
        VertexAddr img =
            a.is_core() ? core_addr(d2, core2) : canonical_address(d2, core2, a.path);
        out.add(img, c);
    }
    return out;
}

/// Section of the quotient-by-P map on core-supported vectors:
/// block vertex -> sum of its members.
template <class S>
ModuleVector<S> hom_section(const RepKGraph& d, const VertexPartition& p, const RepKGraph& q,
                            const ModuleVector<S>& x) {
    ModuleVector<S> out;
    for (const auto& [a, c] : x.entries) {
        if (!a.is_core())
            throw error("UnsupportedInfiniteClass",
                        "section is defined on core-supported vectors only: " + addr_str(q, a));
        for (int v : p[static_cast<size_t>(a.core)]) out.add(core_addr(d, v), c);
    }
    return out;
}

template <class S>
std::string vec_str(const RepKGraph& d, const ModuleVector<S>& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [a, c] : x.entries) {
        if (!s.empty()) s += " + ";
        s += scalar_str(c) + "@" + addr_str(d, a);
    }
    return s;
}

}  // namespace kpg

#endif
