#pragma once

#include <compare>
#include <string>
#include <vector>

#include "colorweyl/types.hpp"

namespace colorweyl {

// Finitely generated abelian grading group Z^free_rank + sum of Z_{n_i},
// coordinates listed free part first.
struct Grading {
    int free_rank = 0;
    std::vector<long> torsion;  // moduli, each >= 2

    int dims() const { return free_rank + static_cast<int>(torsion.size()); }
    bool operator==(const Grading&) const = default;
};

inline Grading make_grading(int free_rank, std::vector<long> torsion) {
    if (free_rank < 0) throw Error("BAD_GROUP", "negative free rank");
    for (long n : torsion)
        if (n < 2) throw Error("BAD_GROUP", "torsion modulus " + std::to_string(n) + " < 2");
    return {free_rank, std::move(torsion)};
}

// Canonical group element: torsion coordinates reduced into [0, n_i).
struct Color {
    std::vector<long> c;

    bool operator==(const Color&) const = default;
    auto operator<=>(const Color&) const = default;
};

inline Color canonical_color(const Grading& g, std::vector<long> coords) {
    if (static_cast<int>(coords.size()) != g.dims())
        throw Error("COLOR_ARITY", "color has " + std::to_string(coords.size()) +
                                       " coordinates, group has " + std::to_string(g.dims()));
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        long n = g.torsion[i];
        long& x = coords[g.free_rank + i];
        x %= n;
        if (x < 0) x += n;
    }
    return {std::move(coords)};
}

inline Color color_zero(const Grading& g) { return {std::vector<long>(g.dims(), 0)}; }

inline Color color_add(const Grading& g, const Color& a, const Color& b) {
    if (static_cast<int>(a.c.size()) != g.dims() || static_cast<int>(b.c.size()) != g.dims())
        throw Error("COLOR_ARITY", "color arity mismatch in addition");
    std::vector<long> s(g.dims());
    for (int i = 0; i < g.dims(); ++i) s[i] = a.c[i] + b.c[i];
    return canonical_color(g, std::move(s));
}

inline Color color_neg(const Grading& g, const Color& a) {
    std::vector<long> s(g.dims());
    for (int i = 0; i < g.dims(); ++i) s[i] = -a.c[i];
    return canonical_color(g, std::move(s));
}

inline Color color_scale(const Grading& g, const Color& a, long k) {
    std::vector<long> s(g.dims());
    for (int i = 0; i < g.dims(); ++i) s[i] = k * a.c[i];
    return canonical_color(g, std::move(s));
}

inline std::string color_str(const Color& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.c[i]);
    }
    return s + ")";
}

}  // namespace colorweyl
