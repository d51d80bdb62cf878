#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorweyl/algebra.hpp"

namespace colorweyl {

// Exponent vector over the ordered derivation basis.
struct MultiIndex {
    std::vector<int> e;

    int level() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    bool operator==(const MultiIndex&) const = default;
};

// Level first, then the first differing coordinate decides (smaller entry
// sorts first).
inline int index_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.e.size() != b.e.size()) throw Error("DIM_MISMATCH", "multi-indices over different sets");
    int la = a.level(), lb = b.level();
    if (la != lb) return la < lb ? -1 : 1;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct IdxLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return index_compare(a, b) < 0;
    }
};

// Admissible exponents: <= p-1 per coordinate in characteristic p, <= 1 at
// minus-parity derivations. bound -1 marks an unbounded coordinate.
struct IndexSet {
    std::vector<Color> dcolors;
    long charp = 0;
    std::vector<long> bounds;
    bool finite = true;
    std::optional<MultiIndex> max_index;

    int arity() const { return static_cast<int>(dcolors.size()); }

    bool contains(const MultiIndex& a) const {
        if (static_cast<int>(a.e.size()) != arity())
            throw Error("DIM_MISMATCH", "multi-index arity mismatch");
        for (size_t i = 0; i < a.e.size(); ++i) {
            if (a.e[i] < 0) return false;
            if (bounds[i] >= 0 && a.e[i] > bounds[i]) return false;
        }
        return true;
    }

    long size() const {
        if (!finite) throw Error("INFINITE_INDEX_SET", "index set is infinite");
        long s = 1;
        for (long b : bounds) s *= b + 1;
        return s;
    }
};

template <class K>
IndexSet index_set(const Algebra<K>& a, const DerivationSpace<K>& d) {
    IndexSet j;
    j.charp = a.field.characteristic();
    for (const auto& der : d.basis) {
        j.dcolors.push_back(der.color);
        if (parity(a.bichar, der.color) == Parity::minus)
            j.bounds.push_back(1);
        else
            j.bounds.push_back(j.charp > 0 ? j.charp - 1 : -1);
    }
    j.finite = true;
    for (long b : j.bounds)
        if (b < 0) j.finite = false;
    if (j.finite) {
        MultiIndex m;
        for (long b : j.bounds) m.e.push_back(static_cast<int>(b));
        j.max_index = std::move(m);
    }
    return j;
}

inline std::vector<MultiIndex> enumerate_indices_level_cap(const IndexSet& j, int cap) {
    std::vector<MultiIndex> out;
    MultiIndex cur{std::vector<int>(j.arity(), 0)};
    // odometer over per-coordinate caps
    std::vector<int> lim(j.arity());
    for (int i = 0; i < j.arity(); ++i)
        lim[i] = j.bounds[i] >= 0 ? static_cast<int>(std::min<long>(j.bounds[i], cap)) : cap;
    for (;;) {
        if (cur.level() <= cap) out.push_back(cur);
        int i = 0;
        while (i < j.arity() && cur.e[i] == lim[i]) cur.e[i++] = 0;
        if (i == j.arity()) break;
        ++cur.e[i];
    }
    std::sort(out.begin(), out.end(), IdxLess{});
    return out;
}

inline std::vector<MultiIndex> enumerate_indices(const IndexSet& j) {
    if (!j.finite) throw Error("INFINITE_INDEX_SET", "cannot enumerate an infinite index set");
    int cap = 0;
    for (long b : j.bounds) cap += static_cast<int>(b);
    return enumerate_indices_level_cap(j, cap);
}

// The scalar with d^a d^b = eps_plus(a,b) d^{a+b}: one bicharacter factor per
// transposition needed to merge the two sorted derivation words.
template <class K>
K eps_plus(const Bicharacter<K>& b, const std::vector<Color>& dcolors, const MultiIndex& alpha,
           const MultiIndex& beta) {
    K r = scalar_from_int<K>(1, b.field);
    for (size_t i = 1; i < dcolors.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            long p = static_cast<long>(alpha.e[i]) * beta.e[j];
            if (p) r = r * scalar_pow(eps(b, dcolors[i], dcolors[j]), p);
        }
    return r;
}

inline Color index_color(const Grading& g, const std::vector<Color>& dcolors, const MultiIndex& a) {
    Color c = color_zero(g);
    for (size_t i = 0; i < dcolors.size(); ++i)
        c = color_add(g, c, color_scale(g, dcolors[i], a.e[i]));
    return c;
}

// Product of per-coordinate binomials, evaluated in the field. The stepwise
// form C -> C*(a-k)/(k+1) divides only by k+1 <= p-1, so it is exact in
// characteristic p as well.
template <class K>
K multi_binomial(const MultiIndex& alpha, const MultiIndex& gamma, const FieldSpec& f) {
    if (alpha.e.size() != gamma.e.size())
        throw Error("DIM_MISMATCH", "multi-indices over different sets");
    K r = scalar_from_int<K>(1, f);
    for (size_t i = 0; i < alpha.e.size(); ++i) {
        int a = alpha.e[i], g = gamma.e[i];
        if (g < 0 || g > a) return scalar_from_int<K>(0, f);
        K c = scalar_from_int<K>(1, f);
        for (int k = 0; k < g; ++k)
            c = c * scalar_from_int<K>(a - k, f) / scalar_from_int<K>(k + 1, f);
        r = r * c;
    }
    return r;
}

// Shared context for all Weyl-type computations over one (A, D) pair. D here
// is the ordered derivation basis the exponents refer to.
template <class K>
struct WeylCtx {
    const Algebra<K>* a = nullptr;
    DerivationSpace<K> d;
    IndexSet j;
};

template <class K>
WeylCtx<K> make_weyl_ctx(const Algebra<K>& a, DerivationSpace<K> d) {
    WeylCtx<K> c;
    c.a = &a;
    c.j = index_set(a, d);
    c.d = std::move(d);
    return c;
}

// Normal form sum_{alpha in J} u_alpha d^alpha; coefficients are elements of
// A, zero coefficients dropped.
template <class K>
struct WeylElement {
    const WeylCtx<K>* ctx = nullptr;
    std::map<MultiIndex, Vec<K>, IdxLess> terms;

    bool operator==(const WeylElement& o) const {
        if (ctx != o.ctx || terms.size() != o.terms.size()) return false;
        auto it = terms.begin(), jt = o.terms.begin();
        for (; it != terms.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
};

template <class K>
WeylElement<K> weyl_zero(const WeylCtx<K>& c) {
    return {&c, {}};
}

// accumulate coeff*d^alpha, suppressing indices outside J ("d^{a+b} = 0")
template <class K>
void weyl_accumulate(WeylElement<K>& x, const MultiIndex& alpha, const Vec<K>& coeff) {
    if (!x.ctx->j.contains(alpha)) return;
    auto it = x.terms.find(alpha);
    if (it == x.terms.end()) {
        if (!vec_is_zero(coeff)) x.terms.emplace(alpha, coeff);
        return;
    }
    it->second += coeff;
    if (vec_is_zero(it->second)) x.terms.erase(it);
}

template <class K>
WeylElement<K> weyl_term(const WeylCtx<K>& c, const MultiIndex& alpha, const Vec<K>& coeff) {
    if (!c.j.contains(alpha)) throw Error("BAD_INDEX", "exponent outside the index set");
    WeylElement<K> x = weyl_zero(c);
    weyl_accumulate(x, alpha, coeff);
    return x;
}

template <class K>
WeylElement<K> weyl_one(const WeylCtx<K>& c) {
    return weyl_term(c, MultiIndex{std::vector<int>(c.j.arity(), 0)}, basis_vec(*c.a, c.a->unit_index));
}

template <class K>
WeylElement<K> weyl_add(const WeylElement<K>& x, const WeylElement<K>& y) {
    if (x.ctx != y.ctx) throw Error("MIXED_CONTEXT", "elements over different contexts");
    WeylElement<K> out = x;
    for (const auto& [a, v] : y.terms) weyl_accumulate(out, a, v);
    return out;
}

template <class K>
WeylElement<K> weyl_scale(const WeylElement<K>& x, const K& f) {
    WeylElement<K> out = weyl_zero(*x.ctx);
    if (is_zero(f)) return out;
    for (const auto& [a, v] : x.terms) out.terms.emplace(a, Vec<K>(f * v));
    return out;
}

// d^alpha(v) per (2.5): the last derivation in the order acts first.
template <class K>
Vec<K> apply_index_pow(const WeylCtx<K>& c, const MultiIndex& alpha, Vec<K> v) {
    for (int i = c.j.arity() - 1; i >= 0; --i)
        for (int k = 0; k < alpha.e[i]; ++k) v = c.d.basis[i].matrix * v;
    return v;
}

template <class K>
Vec<K> weyl_apply(const WeylElement<K>& x, const Vec<K>& v) {
    const Algebra<K>& a = *x.ctx->a;
    Vec<K> out = Vec<K>::Zero(a.dim());
    for (const auto& [alpha, u] : x.terms)
        out += mul(a, u, apply_index_pow(*x.ctx, alpha, v));
    return out;
}

template <class K>
Mat<K> operator_matrix(const WeylElement<K>& x) {
    const Algebra<K>& a = *x.ctx->a;
    Mat<K> m(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) m.col(i) = weyl_apply(x, basis_vec(a, i));
    return m;
}

// (u d^a)(v d^b) = sum_l C(a,l) eps+(a-l,l)^{-1} eps(d^l, v) eps+(l,b)
//                  u d^{a-l}(v) d^{b+l}, extended bilinearly; only v needs a
// homogeneous splitting (the eps factor reads its color).
template <class K>
WeylElement<K> weyl_mul(const WeylElement<K>& x, const WeylElement<K>& y) {
    if (x.ctx != y.ctx) throw Error("MIXED_CONTEXT", "elements over different contexts");
    const WeylCtx<K>& c = *x.ctx;
    const Algebra<K>& a = *c.a;
    WeylElement<K> out = weyl_zero(c);
    for (const auto& [alpha, u] : x.terms)
        for (const auto& [beta, v] : y.terms)
            for (const auto& [vcol, vc] : split_homogeneous(a, v)) {
                MultiIndex lam{std::vector<int>(c.j.arity(), 0)};
                for (;;) {
                    MultiIndex tgt{std::vector<int>(c.j.arity())};
                    for (int i = 0; i < c.j.arity(); ++i) tgt.e[i] = beta.e[i] + lam.e[i];
                    if (c.j.contains(tgt)) {
                        MultiIndex rest{std::vector<int>(c.j.arity())};
                        for (int i = 0; i < c.j.arity(); ++i) rest.e[i] = alpha.e[i] - lam.e[i];
                        K coef = multi_binomial<K>(alpha, lam, a.field);
                        if (!is_zero(coef)) {
                            coef = coef * scalar_inv(eps_plus(a.bichar, c.j.dcolors, rest, lam)) *
                                   eps(a.bichar, index_color(a.grading, c.j.dcolors, lam), vcol) *
                                   eps_plus(a.bichar, c.j.dcolors, lam, beta);
                            Vec<K> w = mul(a, u, apply_index_pow(c, rest, vc));
                            weyl_accumulate(out, tgt, Vec<K>(coef * w));
                        }
                    }
                    // odometer over lambda <= alpha
                    int i = 0;
                    while (i < c.j.arity() && lam.e[i] == alpha.e[i]) lam.e[i++] = 0;
                    if (i == c.j.arity()) break;
                    ++lam.e[i];
                }
            }
    return out;
}

// Right side of the iterated Leibniz rule (2.9); must agree with applying
// d^alpha to the product. a must be homogeneous.
template <class K>
Vec<K> leibniz_expand(const WeylCtx<K>& c, const MultiIndex& alpha, const Vec<K>& av,
                      const Vec<K>& bv) {
    const Algebra<K>& alg = *c.a;
    auto acol = homogeneous_color(alg, av);
    if (!acol) throw Error("BAD_ELEMENT", "left factor of (2.9) must be homogeneous");
    Vec<K> out = Vec<K>::Zero(alg.dim());
    MultiIndex gam{std::vector<int>(c.j.arity(), 0)};
    for (;;) {
        MultiIndex rest{std::vector<int>(c.j.arity())};
        for (int i = 0; i < c.j.arity(); ++i) rest.e[i] = alpha.e[i] - gam.e[i];
        K coef = multi_binomial<K>(alpha, gam, alg.field) *
                 scalar_inv(eps_plus(alg.bichar, c.j.dcolors, rest, gam)) *
                 eps(alg.bichar, index_color(alg.grading, c.j.dcolors, gam), *acol);
        if (!is_zero(coef))
            out += coef * mul(alg, apply_index_pow(c, rest, av), apply_index_pow(c, gam, bv));
        int i = 0;
        while (i < c.j.arity() && gam.e[i] == alpha.e[i]) gam.e[i++] = 0;
        if (i == c.j.arity()) break;
        ++gam.e[i];
    }
    return out;
}

inline std::string index_name(const IndexSet& j, const MultiIndex& a) {
    std::string s;
    for (int i = 0; i < j.arity(); ++i) {
        if (a.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += j.arity() == 1 ? "d" : "d" + std::to_string(i + 1);
        if (a.e[i] > 1) s += "^" + std::to_string(a.e[i]);
    }
    return s.empty() ? std::string("1") : s;
}

template <class K>
std::string weyl_str(const WeylElement<K>& x) {
    const Algebra<K>& a = *x.ctx->a;
    std::string s;
    for (const auto& [alpha, u] : x.terms) {
        if (!s.empty()) s += " + ";
        std::string uname = element_str(a, u);
        std::string iname = index_name(x.ctx->j, alpha);
        if (iname == "1") {
            s += uname;
        } else if (uname == "1") {
            s += iname;
        } else {
            if (uname.find(' ') != std::string::npos) uname = "(" + uname + ")";
            s += uname + "*" + iname;
        }
    }
    return s.empty() ? std::string("0") : s;
}

namespace detail {

// columns: vectorized operator matrices of b_i d^alpha in (alpha, i) order
template <class K>
Mat<K> weyl_operator_columns(const WeylCtx<K>& c, const std::vector<MultiIndex>& idx) {
    const Algebra<K>& a = *c.a;
    const int n = a.dim();
    Mat<K> cols(n * n, static_cast<int>(idx.size()) * n);
    int col = 0;
    for (const auto& alpha : idx) {
        Mat<K> pw = Mat<K>::Identity(n, n);
        for (int i = c.j.arity() - 1; i >= 0; --i)
            for (int k = 0; k < alpha.e[i]; ++k) pw = c.d.basis[i].matrix * pw;
        for (int i = 0; i < n; ++i)
            cols.col(col++) = vectorize(Mat<K>(left_mult_matrix(a, basis_vec(a, i)) * pw));
    }
    return cols;
}

template <class K>
Verdict freeness_rank_test(const WeylCtx<K>& c, const std::vector<MultiIndex>& idx) {
    const Algebra<K>& a = *c.a;
    const int n = a.dim();
    const int want = static_cast<int>(idx.size()) * n;
    Mat<K> cols = weyl_operator_columns(c, idx);
    if (rank_of(cols) == want) return Verdict::yes();
    Mat<K> ker = nullspace(std::move(cols));
    WeylElement<K> witness = weyl_zero(c);
    for (size_t p = 0; p < idx.size(); ++p) {
        Vec<K> u = Vec<K>::Zero(n);
        for (int i = 0; i < n; ++i) u(i) = ker(static_cast<int>(p) * n + i, 0);
        if (!vec_is_zero(u)) witness.terms.emplace(idx[p], std::move(u));
    }
    return Verdict::no({"kernel_vector", weyl_str(witness) + " acts as zero"});
}

}  // namespace detail

// The A-module map (+)_{alpha in J} A d^alpha -> End(A) is injective iff the
// d^alpha are an A-basis; rank dim A * |J| certifies it.
template <class K>
Verdict freeness_check(const Algebra<K>& a, const DerivationSpace<K>& d, const IndexSet& js) {
    if (!js.finite)
        throw Error("INFINITE_INDEX_SET", "freeness over infinite J needs the level-cap variant");
    WeylCtx<K> c = make_weyl_ctx(a, d);
    return detail::freeness_rank_test(c, enumerate_indices(js));
}

template <class K>
Verdict freeness_check_cutoff(const Algebra<K>& a, const DerivationSpace<K>& d, int level_cap) {
    WeylCtx<K> c = make_weyl_ctx(a, d);
    return detail::freeness_rank_test(c, enumerate_indices_level_cap(c.j, level_cap));
}

// Color of a nonzero homogeneous operator: read off any nonzero entry.
template <class K>
Color operator_color(const Algebra<K>& a, const Mat<K>& m) {
    for (int col = 0; col < m.cols(); ++col)
        for (int row = 0; row < m.rows(); ++row)
            if (!is_zero(m(row, col)))
                return color_add(a.grading, a.basis_colors[row],
                                 color_neg(a.grading, a.basis_colors[col]));
    return color_zero(a.grading);
}

// Enlarged derivation set: Der(A) intersected with the unital operator algebra
// generated by multiplications by F_1 and the D-basis. The result is an
// F_1-module; the returned basis is F_1-free, chosen greedily with the D-basis
// first so the user's order survives whenever D is already F_1-independent.
template <class K>
DerivationSpace<K> script_D(const Algebra<K>& a, const DerivationSpace<K>& d,
                            const Subspace<K>& f1) {
    const int n = a.dim();

    Subspace<K> derspan(n * n);
    for (const auto& der : der_space(a).basis) derspan.insert(vectorize(der.matrix));

    std::vector<Mat<K>> gens;
    for (const Vec<K>& u : f1.rows()) gens.push_back(left_mult_matrix(a, u));
    for (const auto& der : d.basis) gens.push_back(der.matrix);

    Subspace<K> opspan(n * n);
    std::vector<Mat<K>> queue;
    Mat<K> id = Mat<K>::Identity(n, n);
    opspan.insert(vectorize(id));
    queue.push_back(std::move(id));
    while (!queue.empty()) {
        Mat<K> x = std::move(queue.back());
        queue.pop_back();
        for (const Mat<K>& g : gens) {
            Mat<K> y = g * x;
            if (opspan.insert(vectorize(y))) queue.push_back(std::move(y));
        }
    }

    Subspace<K> inter = subspace_intersection(derspan, opspan);

    // F_1-greedy basis over the spanning candidates
    auto unvec = [&](const Vec<K>& v) {
        Mat<K> m(n, n);
        int k = 0;
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row) m(row, col) = v(k++);
        return m;
    };
    std::vector<Derivation<K>> candidates;
    for (const auto& der : d.basis) candidates.push_back(der);
    for (const Vec<K>& r : inter.rows()) {
        Mat<K> m = unvec(r);
        Color col = operator_color(a, m);
        candidates.push_back({std::move(m), col, "d" + std::to_string(candidates.size() + 1)});
    }

    DerivationSpace<K> out;
    Subspace<K> f1span(n * n);
    for (const auto& cand : candidates) {
        Vec<K> v = vectorize(cand.matrix);
        if (!inter.contains(v)) continue;  // defensive: D should embed
        if (f1span.contains(v)) continue;
        out.basis.push_back(cand);
        for (const Vec<K>& u : f1.rows())
            f1span.insert(vectorize(Mat<K>(left_mult_matrix(a, u) * cand.matrix)));
    }
    if (!(f1span == inter))
        throw Error("INTERNAL", "enlarged derivation set is not an F_1-module");

    out.commutativity_checked = true;
    for (const auto& x : out.basis)
        for (const auto& y : out.basis) {
            K e = eps(a.bichar, x.color, y.color);
            if (Mat<K>(x.matrix * y.matrix) != Mat<K>(e * (y.matrix * x.matrix)))
                out.commutativity_checked = false;
        }
    return out;
}

// Structure constants of A[D] on the basis {b_i d^alpha}, alpha sorted by
// (2.4). Unit, grading and associativity are re-verified by the constructor;
// A[D] is of course not eps-commutative.
template <class K>
Algebra<K> materialize_AD(const Algebra<K>& a, const DerivationSpace<K>& d, const IndexSet& js) {
    if (!js.finite) throw Error("INFINITE_INDEX_SET", "cannot materialize over infinite J");
    const int n = a.dim();
    const long total = js.size() * n;
    if (total > 4096) throw Error("SIZE_CAP", "A[D] dimension " + std::to_string(total) + " > 4096");

    WeylCtx<K> c = make_weyl_ctx(a, d);
    std::vector<MultiIndex> idx = enumerate_indices(js);
    std::map<MultiIndex, int, IdxLess> pos;
    for (size_t p = 0; p < idx.size(); ++p) pos.emplace(idx[p], static_cast<int>(p));

    const int N = static_cast<int>(total);
    std::vector<Color> colors(N);
    std::vector<std::string> names(N);
    for (size_t p = 0; p < idx.size(); ++p) {
        Color ic = index_color(a.grading, js.dcolors, idx[p]);
        std::string iname = index_name(js, idx[p]);
        for (int i = 0; i < n; ++i) {
            int b = static_cast<int>(p) * n + i;
            colors[b] = color_add(a.grading, a.basis_colors[i], ic);
            if (iname == "1")
                names[b] = a.basis_names[i];
            else if (i == a.unit_index)
                names[b] = iname;
            else
                names[b] = a.basis_names[i] + "*" + iname;
        }
    }

    std::vector<std::vector<std::pair<int, K>>> table(static_cast<size_t>(N) * N);
    for (size_t p = 0; p < idx.size(); ++p)
        for (int i = 0; i < n; ++i) {
            WeylElement<K> x = weyl_term(c, idx[p], basis_vec(a, i));
            for (size_t q = 0; q < idx.size(); ++q)
                for (int jj = 0; jj < n; ++jj) {
                    WeylElement<K> y = weyl_term(c, idx[q], basis_vec(a, jj));
                    WeylElement<K> prod = weyl_mul(x, y);
                    auto& cell = table[(static_cast<size_t>(p) * n + i) * N +
                                       (static_cast<size_t>(q) * n + jj)];
                    for (const auto& [gamma, u] : prod.terms) {
                        int gp = pos.at(gamma);
                        for (int k = 0; k < n; ++k)
                            if (!is_zero(u(k))) cell.emplace_back(gp * n + k, u(k));
                    }
                }
        }

    return build_assoc_algebra(a.field, a.grading, a.bichar, std::move(colors), std::move(names),
                               a.unit_index, std::move(table));
}

}  // namespace colorweyl
