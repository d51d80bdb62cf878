#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "colorweyl/field.hpp"
#include "colorweyl/types.hpp"

namespace colorweyl {

// Exact Gauss-Jordan elimination. Pivot rule everywhere: first nonzero
// coordinate in column order, normalized to 1, so echelon bases are canonical
// and two subspaces are equal iff their row lists are identical.

template <class K>
int rref_in_place(Mat<K>& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        K lead = m(r, c);
        if (lead != K(1)) m.row(r) *= scalar_inv(lead);
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            K f = m(i, c);
            m.row(i) -= f * m.row(r).eval();
        }
        ++r;
    }
    return r;
}

template <class K>
int rank_of(Mat<K> m) {
    return rref_in_place(m);
}

// Columns span the kernel of m (solutions of m x = 0), in canonical RREF-derived form.
template <class K>
Mat<K> nullspace(Mat<K> m) {
    const int cols = static_cast<int>(m.cols());
    int rank = rref_in_place(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < cols; ++c)
            if (!is_zero(m(r, c))) {
                pivot_of_col[c] = r;
                break;
            }
    Mat<K> ker = Mat<K>::Zero(cols, cols - rank);
    int k = 0;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        ker(c, k) = K(1);
        for (int pc = 0; pc < cols; ++pc)
            if (pivot_of_col[pc] >= 0) ker(pc, k) = -m(pivot_of_col[pc], c);
        ++k;
    }
    return ker;
}

// Row space kept in reduced echelon form; rows ordered by pivot column.
// Inserting homogeneous vectors keeps every row homogeneous: reduction only
// mixes rows whose supports share coordinates of one color.
template <class K>
class Subspace {
    int n_ = 0;
    std::vector<Vec<K>> rows_;
    std::vector<int> pivots_;

public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec<K>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Vec<K> reduce(Vec<K> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const K& c = v(pivots_[i]);
            if (!is_zero(c)) {
                K f = c;
                v -= f * rows_[i];
            }
        }
        return v;
    }

    bool contains(const Vec<K>& v) const {
        Vec<K> r = reduce(v);
        for (int i = 0; i < n_; ++i)
            if (!is_zero(r(i))) return false;
        return true;
    }

    // returns true when the vector enlarged the span
    bool insert(Vec<K> v) {
        v = reduce(std::move(v));
        int piv = -1;
        for (int i = 0; i < n_; ++i)
            if (!is_zero(v(i))) { piv = i; break; }
        if (piv < 0) return false;
        if (v(piv) != K(1)) v *= scalar_inv(v(piv));
        for (size_t i = 0; i < rows_.size(); ++i) {
            const K& c = rows_[i](piv);
            if (!is_zero(c)) {
                K f = c;
                rows_[i] -= f * v;
            }
        }
        auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
        size_t idx = static_cast<size_t>(pos - pivots_.begin());
        pivots_.insert(pos, piv);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    // coordinates of v in this row basis; throws if v is outside the span
    Vec<K> coordinates(const Vec<K>& v) const {
        Vec<K> coef = Vec<K>::Zero(dim());
        Vec<K> w = v;
        for (size_t i = 0; i < rows_.size(); ++i) {
            const K& c = w(pivots_[i]);
            if (!is_zero(c)) {
                coef(static_cast<int>(i)) = c;
                K f = c;
                w -= f * rows_[i];
            }
        }
        for (int i = 0; i < n_; ++i)
            if (!is_zero(w(i))) throw Error("NOT_IN_SPAN", "vector outside subspace");
        return coef;
    }

    bool operator==(const Subspace& o) const {
        if (n_ != o.n_ || pivots_ != o.pivots_) return false;
        for (size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] != o.rows_[i]) return false;
        return true;
    }
};

template <class K>
Subspace<K> span_of(int ambient, const std::vector<Vec<K>>& vs) {
    Subspace<K> s(ambient);
    for (const auto& v : vs) s.insert(v);
    return s;
}

template <class K>
Subspace<K> subspace_intersection(const Subspace<K>& U, const Subspace<K>& V) {
    if (U.ambient() != V.ambient()) throw Error("AMBIENT_MISMATCH", "intersection of different spaces");
    const int n = U.ambient();
    const int k = U.dim(), m = V.dim();
    Subspace<K> out(n);
    if (k == 0 || m == 0) return out;
    // a.U = b.V  <=>  (a,b) in kernel of [U^T  -V^T]
    Mat<K> sys = Mat<K>::Zero(n, k + m);
    for (int i = 0; i < k; ++i) sys.col(i) = U.rows()[i];
    for (int j = 0; j < m; ++j) sys.col(k + j) = -V.rows()[j];
    Mat<K> ker = nullspace(std::move(sys));
    for (int c = 0; c < ker.cols(); ++c) {
        Vec<K> v = Vec<K>::Zero(n);
        for (int i = 0; i < k; ++i) v += ker(i, c) * U.rows()[i];
        out.insert(std::move(v));
    }
    return out;
}

template <class K>
Vec<K> unit_vec(int n, int i) {
    Vec<K> v = Vec<K>::Zero(n);
    v(i) = K(1);
    return v;
}

}  // namespace colorweyl
