#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "slodowy/error.hpp"
#include "slodowy/rational.hpp"
#include "slodowy/rng.hpp"

namespace slodowy {

/// Dense matrix over exact rationals, row-major. Sized for desk-scale
/// computations (a few thousand entries); elimination is plain Gauss-Jordan
/// with first-nonzero pivoting, which is deterministic.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    Mat(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            require(r.size() == cols_, ErrorKind::ShapeError, "ragged initializer");
            for (long long x : r) a_.emplace_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeError, "add shape");
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeError, "sub shape");
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Mat operator*(const Mat& o) const {
        require(cols_ == o.rows_, ErrorKind::ShapeError, "mul shape");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o(k, j) == 0) continue;
                    r(i, j) += aik * o(k, j);
                }
            }
        return r;
    }

    Mat operator*(const Rational& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    Rational trace() const {
        require(rows_ == cols_, ErrorKind::ShapeError, "trace of nonsquare");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        require(i0 + r <= rows_ && j0 + c <= cols_, ErrorKind::ShapeError, "block range");
        Mat b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    Mat col(std::size_t j) const { return block(0, j, rows_, 1); }

    static Mat hstack(const Mat& a, const Mat& b) {
        if (a.cols_ == 0 && a.rows_ == 0) return b;
        if (b.cols_ == 0 && b.rows_ == 0) return a;
        require(a.rows_ == b.rows_, ErrorKind::ShapeError, "hstack rows");
        Mat r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    static Mat vstack(const Mat& a, const Mat& b) {
        if (a.cols_ == 0 && a.rows_ == 0) return b;
        if (b.cols_ == 0 && b.rows_ == 0) return a;
        require(a.cols_ == b.cols_, ErrorKind::ShapeError, "vstack cols");
        Mat r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap((*this)(sel, j), (*this)(row, j));
            Rational inv = Rational(1) / (*this)(row, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const Rational f = (*this)(i, col);
                if (f == 0) continue;
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Mat m = *this;
        return m.rref().size();
    }

    /// Columns form a basis of the kernel (standard free-variable basis).
    Mat nullspace() const {
        Mat m = *this;
        std::vector<std::size_t> piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (std::size_t p : piv) is_piv[p] = true;
        std::size_t nfree = cols_ - piv.size();
        Mat K(cols_, nfree);
        std::size_t kcol = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_piv[j]) continue;
            K(j, kcol) = 1;
            for (std::size_t r = 0; r < piv.size(); ++r) K(piv[r], kcol) = -m(r, j);
            ++kcol;
        }
        return K;
    }

    /// Basis of the column space: the pivot columns of the original matrix.
    Mat column_basis() const {
        Mat m = *this;
        std::vector<std::size_t> piv = m.rref();
        Mat b(rows_, piv.size());
        for (std::size_t k = 0; k < piv.size(); ++k)
            for (std::size_t i = 0; i < rows_; ++i) b(i, k) = (*this)(i, piv[k]);
        return b;
    }

    /// One exact solution of A X = B (free variables set to zero),
    /// or nullopt when the system is inconsistent.
    static std::optional<Mat> solve(const Mat& A, const Mat& B) {
        require(A.rows_ == B.rows_, ErrorKind::ShapeError, "solve shape");
        Mat aug = hstack(A, B);
        if (aug.rows_ == 0) return Mat(A.cols_, B.cols_);
        std::vector<std::size_t> piv = aug.rref();
        for (std::size_t p : piv)
            if (p >= A.cols_) return std::nullopt;
        Mat X(A.cols_, B.cols_);
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t j = 0; j < B.cols_; ++j) X(piv[r], j) = aug(r, A.cols_ + j);
        return X;
    }

    std::optional<Mat> inverse() const {
        require(rows_ == cols_, ErrorKind::ShapeError, "inverse of nonsquare");
        auto X = solve(*this, identity(rows_));
        if (X && ((*this) * *X == identity(rows_))) return X;
        return std::nullopt;
    }

    Mat pow(std::size_t k) const {
        require(rows_ == cols_, ErrorKind::ShapeError, "pow of nonsquare");
        Mat r = identity(rows_);
        for (std::size_t i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    static Mat random_int(std::size_t r, std::size_t c, Rng& rng, long long lo = -9, long long hi = 9) {
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.int_in(lo, hi);
        return m;
    }

    static Mat random_invertible(std::size_t n, Rng& rng, long long lo = -4, long long hi = 4) {
        for (;;) {
            Mat g = random_int(n, n, rng, lo, hi);
            if (g.rank() == n) return g;
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Is every column of v inside the column space of span?
inline bool subspace_contains(const Mat& span, const Mat& v) {
    if (v.cols() == 0) return true;
    return span.rank() == Mat::hstack(span, v).rank();
}

inline bool subspace_equal(const Mat& a, const Mat& b) {
    return subspace_contains(a, b) && subspace_contains(b, a) && a.rank() == b.rank();
}

/// dim(colspace(a) ∩ colspace(b)) via the rank formula.
inline std::size_t intersection_dim(const Mat& a, const Mat& b) {
    std::size_t ra = a.rank(), rb = b.rank(), rab = Mat::hstack(a, b).rank();
    return ra + rb - rab;
}

/// Standard-basis columns extending colspace(u) to the full space;
/// deterministic given u ("column-pivot complement").
inline Mat pivot_complement(const Mat& u) {
    std::size_t n = u.rows();
    Mat aug = Mat::hstack(u, Mat::identity(n));
    Mat probe = aug;
    std::vector<std::size_t> piv = probe.rref();
    std::vector<std::size_t> extra;
    for (std::size_t p : piv)
        if (p >= u.cols()) extra.push_back(p - u.cols());
    Mat c(n, extra.size());
    for (std::size_t k = 0; k < extra.size(); ++k) c(extra[k], k) = 1;
    return c;
}

} // namespace slodowy
