#ifndef KPG_DEGREE_HPP
#define KPG_DEGREE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace kpg {

/// Element of N^k, the grading monoid of a k-graph.
struct Degree {
    std::vector<int> c;

    Degree() = default;
    explicit Degree(int k) : c(static_cast<size_t>(k), 0) {}
    Degree(std::initializer_list<int> init) : c(init) {}

    static Degree unit(int k, int color) {  // z_i, color is 1-based
        Degree d(k);
        d.c[static_cast<size_t>(color - 1)] = 1;
        return d;
    }

    int k() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int total() const { return std::accumulate(c.begin(), c.end(), 0); }
    bool is_zero() const { return total() == 0; }

    Degree operator+(const Degree& o) const {
        Degree r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
        return r;
    }
    Degree operator-(const Degree& o) const {
        Degree r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
        return r;
    }
    /// componentwise max (least upper bound)
    Degree join(const Degree& o) const {
        Degree r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = std::max(r.c[i], o.c[i]);
        return r;
    }
    bool leq(const Degree& o) const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] > o.c[i]) return false;
        return true;
    }
    bool operator==(const Degree& o) const = default;
    bool operator<(const Degree& o) const { return c < o.c; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

/// Element of Z^k, used for the grading of lambda mu* monomials.
struct ZDegree {
    std::vector<int> c;
    ZDegree() = default;
    explicit ZDegree(int k) : c(static_cast<size_t>(k), 0) {}
    static ZDegree diff(const Degree& a, const Degree& b) {
        ZDegree z(a.k());
        for (size_t i = 0; i < z.c.size(); ++i) z.c[i] = a.c[i] - b.c[i];
        return z;
    }
    bool operator==(const ZDegree& o) const = default;
    bool operator<(const ZDegree& o) const { return c < o.c; }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

}  // namespace kpg

#endif
