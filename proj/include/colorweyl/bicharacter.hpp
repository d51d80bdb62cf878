#pragma once

#include <string>

#include "colorweyl/field.hpp"
#include "colorweyl/grading.hpp"
#include "colorweyl/types.hpp"

namespace colorweyl {

// Skew-symmetric bicharacter eps: Gamma x Gamma -> F*, stored by its values on
// generator pairs. eps(a,c) = prod_{i,j} E(i,j)^{a_i c_j}.
template <class K>
struct Bicharacter {
    Grading g;
    FieldSpec field;
    Mat<K> E;
};

template <class K>
Bicharacter<K> make_bicharacter(const Grading& g, const FieldSpec& f, Mat<K> E) {
    const int n = g.dims();
    if (E.rows() != n || E.cols() != n)
        throw Error("BAD_MATRIX", "bicharacter matrix must be " + std::to_string(n) + "x" +
                                      std::to_string(n));
    const K one = scalar_from_int<K>(1, f);
    const K minus_one = scalar_from_int<K>(-1, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (is_zero(E(i, j)))
                throw Error("ZERO_ENTRY", "bicharacter value at (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") is zero");
            if (f.kind == FieldKind::rationals && E(i, j) != one && E(i, j) != minus_one)
                throw Error("NONRATIONAL_ROOT",
                            "over the rationals only +-1 are roots of unity; entry (" +
                                std::to_string(i) + "," + std::to_string(j) + ") = " +
                                scalar_str(E(i, j)));
        }
    for (int i = 0; i < n; ++i) {
        if (E(i, i) != one && E(i, i) != minus_one)
            throw Error("DIAGONAL_NOT_SIGN", "E(" + std::to_string(i) + "," + std::to_string(i) +
                                                 ") = " + scalar_str(E(i, i)) + " is not +-1");
        for (int j = 0; j < n; ++j)
            if (E(i, j) * E(j, i) != one)
                throw Error("SKEW_VIOLATION", "E(" + std::to_string(i) + "," + std::to_string(j) +
                                                  ")*E(" + std::to_string(j) + "," +
                                                  std::to_string(i) + ") != 1");
    }
    for (size_t t = 0; t < g.torsion.size(); ++t) {
        const int i = g.free_rank + static_cast<int>(t);
        const long order = g.torsion[t];
        for (int j = 0; j < n; ++j) {
            if (scalar_pow(E(i, j), order) != one || scalar_pow(E(j, i), order) != one)
                throw Error("TORSION_INCONSISTENT",
                            "E(" + std::to_string(i) + "," + std::to_string(j) +
                                ") incompatible with torsion order " + std::to_string(order));
        }
    }
    return {g, f, std::move(E)};
}

template <class K>
K eps(const Bicharacter<K>& b, const Color& a, const Color& c) {
    const int n = b.g.dims();
    K r = scalar_from_int<K>(1, b.field);
    for (int i = 0; i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (c.c[j] == 0) continue;
            r = r * scalar_pow(b.E(i, j), a.c[i] * c.c[j]);
        }
    }
    return r;
}

enum class Parity { plus, minus };

template <class K>
Parity parity(const Bicharacter<K>& b, const Color& a) {
    K e = eps(b, a, a);
    if (e == scalar_from_int<K>(1, b.field)) return Parity::plus;
    if (e == scalar_from_int<K>(-1, b.field)) return Parity::minus;
    throw Error("BAD_PARITY", "eps(a,a) = " + scalar_str(e) + " for a = " + color_str(a));
}

}  // namespace colorweyl
