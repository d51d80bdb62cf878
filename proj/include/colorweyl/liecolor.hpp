#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorweyl/algebra.hpp"

namespace colorweyl {

// Finite-dimensional (eps,Gamma)-Lie color algebra. Same sparse table layout
// as Algebra: table[i*dim+j] lists the terms of [b_i, b_j], sorted by index.
// Instances are only produced by lieify/quotient, which verify skew symmetry,
// the color Jacobi identity and the grading on all basis tuples.
template <class K>
struct LieColorAlgebra {
    FieldSpec field;
    Grading grading;
    Bicharacter<K> bichar;
    std::vector<Color> basis_colors;
    std::vector<std::string> basis_names;
    std::vector<std::vector<std::pair<int, K>>> table;

    int dim() const { return static_cast<int>(basis_colors.size()); }
    const std::vector<std::pair<int, K>>& brk(int i, int j) const {
        return table[static_cast<size_t>(i) * dim() + j];
    }
};

template <class K>
std::string lie_element_str(const LieColorAlgebra<K>& l, const Vec<K>& v) {
    return detail::format_element(l.field, l.basis_names, -1, v);
}

template <class K>
Vec<K> bracket_vec(const LieColorAlgebra<K>& l, int i, int j) {
    Vec<K> out = Vec<K>::Zero(l.dim());
    for (const auto& [k, c] : l.brk(i, j)) out(k) = c;
    return out;
}

// [b_i, v]
template <class K>
Vec<K> ad_apply(const LieColorAlgebra<K>& l, int i, const Vec<K>& v) {
    Vec<K> out = Vec<K>::Zero(l.dim());
    for (int j = 0; j < l.dim(); ++j) {
        if (is_zero(v(j))) continue;
        for (const auto& [k, c] : l.brk(i, j)) out(k) += v(j) * c;
    }
    return out;
}

template <class K>
Vec<K> bracket(const LieColorAlgebra<K>& l, const Vec<K>& x, const Vec<K>& y) {
    const int n = l.dim();
    if (x.size() != n || y.size() != n) throw Error("DIM_MISMATCH", "element size != dim L");
    Vec<K> out = Vec<K>::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x(i))) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y(j))) continue;
            K c = x(i) * y(j);
            for (const auto& [k, v] : l.brk(i, j)) out(k) += c * v;
        }
    }
    return out;
}

// columns are [b_i, b_j] over j
template <class K>
Mat<K> adjoint_matrix(const LieColorAlgebra<K>& l, int i) {
    const int n = l.dim();
    Mat<K> m = Mat<K>::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : l.brk(i, j)) m(k, j) = c;
    return m;
}

// Color commutator [x,y] = xy - eps(x,y) yx, extended bilinearly; only the
// homogeneous splitting of the arguments is needed to read the eps factor.
template <class K>
Vec<K> bracket_from_assoc(const Algebra<K>& a, const Vec<K>& x, const Vec<K>& y) {
    Vec<K> out = Vec<K>::Zero(a.dim());
    for (const auto& [cx, vx] : split_homogeneous(a, x))
        for (const auto& [cy, vy] : split_homogeneous(a, y)) {
            Vec<K> fwd = mul(a, vx, vy);
            Vec<K> rev = mul(a, vy, vx);
            out += fwd - Vec<K>(eps(a.bichar, cx, cy) * rev);
        }
    return out;
}

namespace detail {

// Skew symmetry (all pairs), grading, and the color Jacobi identity: for
// basis pairs, Jacobi is equivalent to ad_{[b_i,b_j]} = ad_i ad_j -
// eps(c_i,c_j) ad_j ad_i, and the i > j cases follow from skew symmetry, so
// pairs i <= j are exhaustive over all triples. When dim^3 exceeds the cap
// the matrices are too big to be worth it pairwise and we sample triples.
template <class K>
void validate_lie_axioms(const LieColorAlgebra<K>& l) {
    const int n = l.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Color cij = color_add(l.grading, l.basis_colors[i], l.basis_colors[j]);
            for (const auto& [k, c] : l.brk(i, j))
                if (l.basis_colors[k] != cij)
                    throw Error("AXIOM_FAILURE", "grading: [" + l.basis_names[i] + ", " +
                                                     l.basis_names[j] + "] has a component of color " +
                                                     color_str(l.basis_colors[k]));
            Vec<K> skew = bracket_vec(l, i, j) +
                          Vec<K>(eps(l.bichar, l.basis_colors[i], l.basis_colors[j]) *
                                 bracket_vec(l, j, i));
            if (!vec_is_zero(skew))
                throw Error("AXIOM_FAILURE", "skew symmetry fails at (" + l.basis_names[i] + ", " +
                                                 l.basis_names[j] + ")");
        }

    const long long triples = static_cast<long long>(n) * n * n;
    if (triples <= 1000000) {
        std::vector<Mat<K>> ad;
        ad.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) ad.push_back(adjoint_matrix(l, i));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                K e = eps(l.bichar, l.basis_colors[i], l.basis_colors[j]);
                Mat<K> lhs = ad[i] * ad[j] - Mat<K>(e * (ad[j] * ad[i]));
                Mat<K> rhs = Mat<K>::Zero(n, n);
                for (const auto& [k, c] : l.brk(i, j)) rhs += Mat<K>(c * ad[k]);
                for (int k = 0; k < n; ++k)
                    if (!vec_is_zero(Vec<K>(lhs.col(k) - rhs.col(k))))
                        throw Error("AXIOM_FAILURE",
                                    "color Jacobi fails at (" + l.basis_names[i] + ", " +
                                        l.basis_names[j] + ", " + l.basis_names[k] + ")");
            }
    } else {
        Rng rng(0);
        for (int t = 0; t < 10000; ++t) {
            int i = static_cast<int>(rng.uniform(0, n - 1));
            int j = static_cast<int>(rng.uniform(0, n - 1));
            int k = static_cast<int>(rng.uniform(0, n - 1));
            Vec<K> lhs = ad_apply(l, i, bracket_vec(l, j, k));
            Vec<K> rhs = bracket(l, bracket_vec(l, i, j), Vec<K>(unit_vec<K>(n, k))) +
                         Vec<K>(eps(l.bichar, l.basis_colors[i], l.basis_colors[j]) *
                                ad_apply(l, j, bracket_vec(l, i, k)));
            if (!vec_is_zero(Vec<K>(lhs - rhs)))
                throw Error("AXIOM_FAILURE", "color Jacobi fails at (" + l.basis_names[i] + ", " +
                                                 l.basis_names[j] + ", " + l.basis_names[k] + ")");
        }
    }
}

}  // namespace detail

// (A, [.,.]) with the color commutator bracket.
template <class K>
LieColorAlgebra<K> lieify(const Algebra<K>& a) {
    const int n = a.dim();
    LieColorAlgebra<K> l;
    l.field = a.field;
    l.grading = a.grading;
    l.bichar = a.bichar;
    l.basis_colors = a.basis_colors;
    l.basis_names = a.basis_names;
    l.table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            K e = eps(a.bichar, a.basis_colors[i], a.basis_colors[j]);
            std::vector<std::pair<int, K>> terms = a.prod(i, j);
            for (const auto& [k, c] : a.prod(j, i)) terms.emplace_back(k, -(e * c));
            l.table[static_cast<size_t>(i) * n + j] = detail::normalize_terms(std::move(terms));
        }
    detail::validate_lie_axioms(l);
    return l;
}

namespace detail {

// Z = {x | [x, b_j] = 0 for all j}, solved one color component at a time so
// the reported basis is homogeneous.
template <class K, class PairBracket>
Subspace<K> center_common(const std::vector<Color>& basis_colors, int n, PairBracket&& pb) {
    Subspace<K> z(n);
    for (const auto& [col, idx] : components_of(basis_colors)) {
        const int m = static_cast<int>(idx.size());
        Mat<K> sys = Mat<K>::Zero(static_cast<Eigen::Index>(n) * n, m);
        for (int c = 0; c < m; ++c)
            for (int j = 0; j < n; ++j) {
                Vec<K> b = pb(idx[static_cast<size_t>(c)], j);
                for (int k = 0; k < n; ++k) sys(static_cast<Eigen::Index>(j) * n + k, c) = b(k);
            }
        Mat<K> ker = nullspace<K>(std::move(sys));
        for (int c = 0; c < ker.cols(); ++c) {
            Vec<K> v = Vec<K>::Zero(n);
            for (int r = 0; r < m; ++r) v(idx[static_cast<size_t>(r)]) = ker(r, c);
            z.insert(std::move(v));
        }
    }
    return z;
}

}  // namespace detail

template <class K>
Subspace<K> center(const LieColorAlgebra<K>& l) {
    return detail::center_common<K>(l.basis_colors, l.dim(),
                                    [&](int i, int j) { return bracket_vec(l, i, j); });
}

// eps-center of an associative algebra: vanishing color commutator with A.
template <class K>
Subspace<K> center(const Algebra<K>& a) {
    return detail::center_common<K>(a.basis_colors, a.dim(), [&](int i, int j) {
        Vec<K> fwd = mul(a, basis_vec(a, i), basis_vec(a, j));
        Vec<K> rev = mul(a, basis_vec(a, j), basis_vec(a, i));
        return Vec<K>(fwd - Vec<K>(eps(a.bichar, a.basis_colors[i], a.basis_colors[j]) * rev));
    });
}

// Smallest graded subspace containing the seed with [L, U] <= U.
template <class K>
Subspace<K> lie_ideal_closure(const LieColorAlgebra<K>& l, const Vec<K>& seed) {
    const int n = l.dim();
    if (seed.size() != n) throw Error("DIM_MISMATCH", "seed size != dim L");
    if (vec_is_zero(seed)) throw Error("BAD_SEED", "seed is zero");
    if (!homogeneous_color_of(l.grading, l.basis_colors, seed))
        throw Error("BAD_SEED", "seed is not homogeneous");

    Subspace<K> s(n);
    std::vector<Vec<K>> queue;
    if (s.insert(seed)) queue.push_back(seed);
    while (!queue.empty() && s.dim() < n) {
        Vec<K> v = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < n && s.dim() < n; ++i) {
            Vec<K> w = ad_apply(l, i, v);
            if (s.insert(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

// Closure under left and right multiplication; A[D] is not eps-commutative,
// so unlike d_stable_ideal_closure both sides are required.
template <class K>
Subspace<K> assoc_graded_ideal_closure(const Algebra<K>& a, const Vec<K>& seed) {
    const int n = a.dim();
    if (seed.size() != n) throw Error("DIM_MISMATCH", "seed size != dim A");
    if (vec_is_zero(seed)) throw Error("BAD_SEED", "seed is zero");
    if (!homogeneous_color(a, seed)) throw Error("BAD_SEED", "seed is not homogeneous");

    Subspace<K> s(n);
    std::vector<Vec<K>> queue;
    if (s.insert(seed)) queue.push_back(seed);
    while (!queue.empty() && s.dim() < n) {
        Vec<K> v = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < n && s.dim() < n; ++i) {
            Vec<K> w = mul(a, basis_vec(a, i), v);
            if (s.insert(w)) queue.push_back(w);
            Vec<K> u = mul(a, v, basis_vec(a, i));
            if (s.insert(u)) queue.push_back(std::move(u));
        }
    }
    return s;
}

template <class K>
Subspace<K> derived_subspace(const LieColorAlgebra<K>& l) {
    const int n = l.dim();
    Subspace<K> w(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n && w.dim() < n; ++j) w.insert(bracket_vec(l, i, j));
    return w;
}

// Lie color algebra structure on a bracket-closed graded subspace, expressed
// in the subspace's echelon row basis; names print the rows over L's basis.
template <class K>
LieColorAlgebra<K> subalgebra(const LieColorAlgebra<K>& l, const Subspace<K>& u) {
    const int n = l.dim();
    if (u.ambient() != n) throw Error("DIM_MISMATCH", "subspace ambient dim != dim L");
    const int m = u.dim();
    LieColorAlgebra<K> s;
    s.field = l.field;
    s.grading = l.grading;
    s.bichar = l.bichar;
    for (const Vec<K>& r : u.rows()) {
        auto col = homogeneous_color_of(l.grading, l.basis_colors, r);
        if (!col) throw Error("NOT_A_SUBALGEBRA", lie_element_str(l, r) + " is not homogeneous");
        s.basis_colors.push_back(*col);
        s.basis_names.push_back(lie_element_str(l, r));
    }
    s.table.resize(static_cast<size_t>(m) * m);
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            Vec<K> v = bracket(l, u.rows()[static_cast<size_t>(f)], u.rows()[static_cast<size_t>(g)]);
            if (!u.contains(v))
                throw Error("NOT_A_SUBALGEBRA",
                            "[" + s.basis_names[static_cast<size_t>(f)] + ", " +
                                s.basis_names[static_cast<size_t>(g)] + "] leaves the subspace");
            Vec<K> coef = u.coordinates(v);
            std::vector<std::pair<int, K>> terms;
            for (int c = 0; c < m; ++c)
                if (!is_zero(coef(c))) terms.emplace_back(c, coef(c));
            s.table[static_cast<size_t>(f) * m + g] = std::move(terms);
        }
    detail::validate_lie_axioms(s);
    return s;
}

// L/ideal with the induced bracket on the non-pivot coordinates; basis names
// are the surviving representatives' names.
template <class K>
LieColorAlgebra<K> quotient(const LieColorAlgebra<K>& l, const Subspace<K>& ideal) {
    const int n = l.dim();
    if (ideal.ambient() != n) throw Error("DIM_MISMATCH", "ideal ambient dim != dim L");
    for (const Vec<K>& r : ideal.rows()) {
        if (!homogeneous_color_of(l.grading, l.basis_colors, r))
            throw Error("NOT_AN_IDEAL", lie_element_str(l, r) + " is not homogeneous");
        for (int i = 0; i < n; ++i)
            if (!ideal.contains(ad_apply(l, i, r)))
                throw Error("NOT_AN_IDEAL", "[" + l.basis_names[i] + ", " + lie_element_str(l, r) +
                                                "] leaves the subspace");
    }

    std::vector<int> free_coords;
    for (int i = 0; i < n; ++i)
        if (std::find(ideal.pivots().begin(), ideal.pivots().end(), i) == ideal.pivots().end())
            free_coords.push_back(i);
    const int m = static_cast<int>(free_coords.size());

    LieColorAlgebra<K> q;
    q.field = l.field;
    q.grading = l.grading;
    q.bichar = l.bichar;
    for (int f : free_coords) {
        q.basis_colors.push_back(l.basis_colors[static_cast<size_t>(f)]);
        q.basis_names.push_back(l.basis_names[static_cast<size_t>(f)]);
    }
    q.table.resize(static_cast<size_t>(m) * m);
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            Vec<K> r = ideal.reduce(bracket_vec(l, free_coords[static_cast<size_t>(f)],
                                                free_coords[static_cast<size_t>(g)]));
            std::vector<std::pair<int, K>> terms;
            for (int c = 0; c < m; ++c)
                if (!is_zero(r(free_coords[static_cast<size_t>(c)])))
                    terms.emplace_back(c, r(free_coords[static_cast<size_t>(c)]));
            q.table[static_cast<size_t>(f) * m + g] = std::move(terms);
        }
    detail::validate_lie_axioms(q);
    return q;
}

// Graded simplicity of L: every nonzero homogeneous seed must generate L.
template <class K>
SimplicityOutcome<K> graded_simplicity(const LieColorAlgebra<K>& l, long budget, long trials,
                                       Rng& rng) {
    const int n = l.dim();
    if (n < 2) return {Verdict::no({"degenerate", "dim L < 2"}), std::nullopt, std::nullopt};
    bool abelian = true;
    for (const auto& cell : l.table)
        if (!cell.empty()) abelian = false;
    if (abelian) {
        Vec<K> seed = unit_vec<K>(n, 0);
        Subspace<K> s(n);
        s.insert(seed);
        return {Verdict::no({"abelian", "bracket is identically zero; span{" +
                                            lie_element_str(l, seed) + "} is a proper graded ideal"}),
                seed, std::move(s)};
    }
    auto closes = [&](const Vec<K>& seed) -> SimplicityOutcome<K> {
        Subspace<K> c = lie_ideal_closure(l, seed);
        if (c.dim() == n) return {Verdict::yes(), std::nullopt, std::nullopt};
        return {Verdict::no({"seed", lie_element_str(l, seed) +
                                         " generates a proper graded Lie ideal of dim " +
                                         std::to_string(c.dim())}),
                seed, std::move(c)};
    };
    return detail::homogeneous_seed_scan<K>(l.field, components_of(l.basis_colors), n, closes,
                                            budget, trials, rng);
}

// Graded simplicity of an associative algebra via two-sided closures. When
// the caller has certified elsewhere that A is a full matrix algebra (its
// operator representation on a module is injective and dim A = (rank)^2), an
// evidence verdict from the scan is upgraded: full matrix algebras have no
// nonzero proper ideals at all. A certified counterexample contradicting the
// certificate is an internal inconsistency, not a verdict.
template <class K>
SimplicityOutcome<K> assoc_graded_simplicity(const Algebra<K>& a, long budget, long trials,
                                             Rng& rng, bool full_matrix_certified = false) {
    const int n = a.dim();
    if (n < 1) return {Verdict::no({"degenerate", "dim A < 1"}), std::nullopt, std::nullopt};
    auto closes = [&](const Vec<K>& seed) -> SimplicityOutcome<K> {
        Subspace<K> c = assoc_graded_ideal_closure(a, seed);
        if (c.dim() == n) return {Verdict::yes(), std::nullopt, std::nullopt};
        return {Verdict::no({"seed", element_str(a, seed) +
                                         " generates a proper graded ideal of dim " +
                                         std::to_string(c.dim())}),
                seed, std::move(c)};
    };
    SimplicityOutcome<K> out = detail::homogeneous_seed_scan<K>(a.field, components(a), n, closes,
                                                                budget, trials, rng);
    if (full_matrix_certified) {
        if (out.verdict.status == Status::certified_false)
            throw Error("INTERNAL", "full matrix certificate contradicted by an explicit ideal: " +
                                        out.verdict.witness->detail);
        return {Verdict::yes(), std::nullopt, std::nullopt};
    }
    return out;
}

}  // namespace colorweyl
