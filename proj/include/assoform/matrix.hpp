#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "assoform/jet.hpp"
#include "assoform/rational.hpp"

namespace assoform {

// Dense matrix over an exact coefficient ring (Rational, Jet, or a test
// ring). Row-major. All algorithms below are deterministic: pivots are
// always the first eligible entry in row order, never chosen by magnitude.
template <class R>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const R& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    int rows_, cols_;
    std::vector<R> a_;
};

using QMatrix = Matrix<Rational>;

template <class R>
Matrix<R> transpose(const Matrix<R>& m) {
    Matrix<R> t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

template <class R>
Matrix<R> matmul(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix<R> p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

// Gauss-Jordan reduction in place. Only columns < pivot_limit are eligible
// as pivot columns (so a matrix may carry right-hand sides as trailing
// columns). Pivot choice: scan columns left to right, take the first row at
// or below the current one whose entry is a unit. For jets this mirrors the
// elimination of the value parts exactly. Returns the pivot columns.
template <class R>
std::vector<int> rref_in_place(Matrix<R>& m, int pivot_limit = -1) {
    if (pivot_limit < 0) pivot_limit = m.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < pivot_limit && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (is_unit(m(r, col))) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
        const R piv = m(row, col);
        for (int c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) / piv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const R factor = m(r, col);
            for (int c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Right kernel basis, echelon-normalized: one vector per free column, taken
// in column order, with entry 1 at its own free column and zeros at the
// others. On the principal chart of a catalecticant matrix this reproduces
// the gamma_j basis (identity block on the trailing coordinates).
template <class R>
std::vector<std::vector<R>> kernel_basis(Matrix<R> m) {
    const std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<R>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<R> v(static_cast<size_t>(m.cols()), R(0));
        v[static_cast<size_t>(f)] = R(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -m(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One exact solution of m v = rhs with free variables set to zero, or
// nullopt when the system is inconsistent. Inconsistency is used as a
// mathematical predicate by callers, not treated as a failure.
template <class R>
std::optional<std::vector<R>> solve(const Matrix<R>& m, const std::vector<R>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix<R> aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[static_cast<size_t>(r)];
    }
    const std::vector<int> pivots = rref_in_place(aug, m.cols());
    for (int r = static_cast<int>(pivots.size()); r < m.rows(); ++r)
        if (!is_zero(aug(r, m.cols()))) return std::nullopt;
    std::vector<R> v(static_cast<size_t>(m.cols()), R(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        v[static_cast<size_t>(pivots[k])] = aug(static_cast<int>(k), m.cols());
    return v;
}

template <class R>
std::optional<Matrix<R>> inverse(const Matrix<R>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    Matrix<R> aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = R(1);
    }
    if (static_cast<int>(rref_in_place(aug, n).size()) != n) return std::nullopt;
    Matrix<R> inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

namespace detail {

// Integer lift: scale each row by the lcm of its denominators. Preserves
// rank; det picks up the product of the scales.
inline Matrix<Int> integer_lift(const QMatrix& m, std::vector<Int>* row_scales = nullptr) {
    Matrix<Int> z(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        Int l(1);
        for (int c = 0; c < m.cols(); ++c) l = lcm(l, denominator(m(r, c)));
        if (row_scales) row_scales->push_back(l);
        for (int c = 0; c < m.cols(); ++c) z(r, c) = numerator(m(r, c)) * (l / denominator(m(r, c)));
    }
    return z;
}

// Fraction-free forward elimination (Bareiss). Every intermediate entry is
// a minor of the lifted matrix, so all divisions below are exact. Column
// skipping keeps that property: the entries stay minors over the pivot
// columns actually used.
inline int bareiss_rank(Matrix<Int> z) {
    Int prev(1);
    int row = 0;
    for (int col = 0; col < z.cols() && row < z.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < z.rows(); ++r)
            if (z(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < z.cols(); ++c) std::swap(z(pr, c), z(row, c));
        for (int r = row + 1; r < z.rows(); ++r) {
            for (int c = col + 1; c < z.cols(); ++c)
                z(r, c) = (z(row, col) * z(r, c) - z(r, col) * z(row, c)) / prev;
            z(r, col) = 0;
        }
        prev = z(row, col);
        ++row;
    }
    return row;
}

// Bareiss determinant of an integer matrix; the last pivot is det up to the
// row-swap sign.
inline Int bareiss_det(Matrix<Int> z) {
    const int n = z.rows();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int r = k; r < n; ++r)
            if (z(r, k) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) return Int(0);
        if (pr != k) {
            for (int c = 0; c < n; ++c) std::swap(z(pr, c), z(k, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) z(r, c) = (z(k, k) * z(r, c) - z(r, k) * z(k, c)) / prev;
            z(r, k) = 0;
        }
        prev = z(k, k);
    }
    return sign > 0 ? prev : -prev;
}

}  // namespace detail

inline int rank(const QMatrix& m) { return detail::bareiss_rank(detail::integer_lift(m)); }

inline Rational det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    std::vector<Int> scales;
    const Matrix<Int> z = detail::integer_lift(m, &scales);
    Rational d(detail::bareiss_det(z));
    for (const Int& s : scales) d /= Rational(s);
    return d;
}

inline QMatrix value_part(const Matrix<Jet>& m) {
    QMatrix v(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v(r, c) = m(r, c).value();
    return v;
}

inline QMatrix deriv_part(const Matrix<Jet>& m) {
    QMatrix v(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v(r, c) = m(r, c).deriv();
    return v;
}

// Rank of the eps-derivative block of a jet matrix; the columns of the
// differential of the associated-form morphism are assembled this way.
inline int jet_rank_matrix(const Matrix<Jet>& m) { return rank(deriv_part(m)); }

}  // namespace assoform
