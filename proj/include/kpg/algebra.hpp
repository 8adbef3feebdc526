#ifndef KPG_ALGEBRA_HPP
#define KPG_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>

#include "kpg/scalar.hpp"
#include "kpg/walk.hpp"

namespace kpg {

/// Spanning monomial lambda mu* with s(lambda) = s(mu); zero iff absent
/// from an element's map.
struct Monomial {
    PathNF lambda;
    PathNF mu;

    bool operator<(const Monomial& o) const {
        return std::tie(lambda.src, lambda.edges, mu.src, mu.edges) <
               std::tie(o.lambda.src, o.lambda.edges, o.mu.src, o.mu.edges);
    }
    bool operator==(const Monomial& o) const {
        return lambda.src == o.lambda.src && lambda.edges == o.lambda.edges &&
               mu.src == o.mu.src && mu.edges == o.mu.edges;
    }
};

template <class S>
struct KPElement {
    std::map<Monomial, S> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Monomial& m, const S& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!ScalarField<S>::is_zero(c)) terms.emplace(m, c);
            return;
        }
        it->second += c;
        if (ScalarField<S>::is_zero(it->second)) terms.erase(it);
    }
    bool operator==(const KPElement& o) const { return terms == o.terms; }
};

template <class S>
KPElement<S> kp_monomial(const KGraph& g, const PathNF& lambda, const PathNF& mu,
                         const S& c = ScalarField<S>::one()) {
    if (lambda.src != mu.src) throw error("NotComposable", "monomial sources differ");
    KPElement<S> e;
    e.add(Monomial{lambda, mu}, c);
    return e;
}

template <class S>
KPElement<S> kp_vertex(const KGraph& g, int v) {
    return kp_monomial<S>(g, identity_path(v), identity_path(v));
}

template <class S>
KPElement<S> kp_add(const KPElement<S>& a, const KPElement<S>& b) {
    KPElement<S> out = a;
    for (const auto& [m, c] : b.terms) out.add(m, c);
    return out;
}

template <class S>
KPElement<S> kp_scale(const S& c, const KPElement<S>& a) {
    KPElement<S> out;
    for (const auto& [m, x] : a.terms) out.add(m, c * x);
    return out;
}

/// The monomial product (lambda mu*)(rho sigma*) =
/// sum over minimal common extensions (a,b) of (mu,rho) of
/// (lambda∘a)(sigma∘b)*; zero when r(mu) != r(rho) or no extension exists.
template <class S>
KPElement<S> kp_mul(const KGraph& g, const KPElement<S>& a, const KPElement<S>& b) {
    KPElement<S> out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            if (path_range(g, ma.mu) != path_range(g, mb.lambda)) continue;
            for (const auto& [alpha, beta] : minimal_common_extensions(g, ma.mu, mb.lambda))
                out.add(Monomial{compose(g, ma.lambda, alpha), compose(g, mb.mu, beta)}, ca * cb);
        }
    return out;
}

template <class S>
KPElement<S> kp_star(const KPElement<S>& a) {
    KPElement<S> out;
    for (const auto& [m, c] : a.terms) out.add(Monomial{m.mu, m.lambda}, c);
    return out;
}

/// Split by the Z^k monomial degree d(lambda) - d(mu).
template <class S>
std::map<std::vector<int>, KPElement<S>> kp_grade(const KGraph& g, const KPElement<S>& a) {
    std::map<std::vector<int>, KPElement<S>> out;
    for (const auto& [m, c] : a.terms) {
        std::vector<int> z(static_cast<size_t>(g.k), 0);
        Degree dl = path_degree(g, m.lambda), dm = path_degree(g, m.mu);
        for (int i = 0; i < g.k; ++i)
            z[static_cast<size_t>(i)] =
                dl.c[static_cast<size_t>(i)] - dm.c[static_cast<size_t>(i)];
        out[z].add(m, c);
    }
    return out;
}

/// Product of the letter generators of a walk (a letter p contributes
/// p·1_{s(p)}*, a starred letter the adjoint), multiplied left to right in
/// the algebra so that the walk's first letter acts first.
template <class S>
KPElement<S> kp_from_walk(const KGraph& g, const Walk& w) {
    KPElement<S> out = kp_vertex<S>(g, w.src);
    for (const Letter& l : w.letters) {
        KPElement<S> gen = l.star ? kp_monomial<S>(g, identity_path(l.path.src), l.path)
                                  : kp_monomial<S>(g, l.path, identity_path(l.path.src));
        out = kp_mul(g, gen, out);
    }
    return out;
}

template <class S>
std::string kp_str(const KGraph& g, const KPElement<S>& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : a.terms) {
        if (!s.empty()) s += " + ";
        s += scalar_str(c) + "·" + path_str(g, m.lambda);
        if (!m.mu.edges.empty()) s += "·" + path_str(g, m.mu) + "*";
    }
    return s;
}

}  // namespace kpg

#endif
