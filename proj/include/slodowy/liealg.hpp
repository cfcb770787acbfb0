#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "slodowy/error.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/partition.hpp"
#include "slodowy/quiver.hpp" // nilpotent_partition
#include "slodowy/rng.hpp"
#include "slodowy/slice.hpp"

namespace slodowy {

/// Triple (x, y, h) with [x,y] = h, [h,x] = 2x, [h,y] = -2y, all traceless.
struct Sl2Triple {
    Mat x, y, h;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Block-diagonal nilpotent with one Jordan block of size d_i per row of d
/// (ones on the superdiagonal).
inline Mat jordan_nilpotent(const Partition& d) {
    std::size_t n = static_cast<std::size_t>(d.total());
    Mat x(n, n);
    std::size_t off = 0;
    for (long long part : d.parts()) {
        for (long long j = 0; j + 1 < part; ++j)
            x(off + static_cast<std::size_t>(j), off + static_cast<std::size_t>(j) + 1) = 1;
        off += static_cast<std::size_t>(part);
    }
    return x;
}

/// Standard completion of the Jordan representative: per block of size k the
/// opposite nilpotent carries subdiagonal weights j(k-j) and the semisimple
/// part is diag(k-1, k-3, ..., 1-k).
inline Sl2Triple sl2_completion(const Partition& d) {
    require(!is_ones(d), ErrorKind::DegenerateAmbient,
            "the zero nilpotent admits no sl2-triple");
    std::size_t n = static_cast<std::size_t>(d.total());
    Sl2Triple t{jordan_nilpotent(d), Mat(n, n), Mat(n, n)};
    std::size_t off = 0;
    for (long long part : d.parts()) {
        long long k = part;
        for (long long j = 1; j < k; ++j)
            t.y(off + static_cast<std::size_t>(j), off + static_cast<std::size_t>(j) - 1) =
                j * (k - j);
        for (long long j = 0; j < k; ++j)
            t.h(off + static_cast<std::size_t>(j), off + static_cast<std::size_t>(j)) =
                k - 1 - 2 * j;
        off += static_cast<std::size_t>(k);
    }
    require(commutator(t.x, t.y) == t.h && commutator(t.h, t.x) == t.x * Rational(2) &&
                commutator(t.h, t.y) == t.y * Rational(-2),
            ErrorKind::InternalInconsistency, "triple relations failed");
    return t;
}

/// ad X as an N^2 x N^2 matrix on row-major vectorized matrices.
inline Mat ad_matrix(const Mat& x) {
    std::size_t n = x.rows();
    require(x.cols() == n, ErrorKind::ShapeError, "ad of nonsquare matrix");
    Mat ad(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // entry (i,j) of [X, V]: sum_k X_ik V_kj - V_ik X_kj
            for (std::size_t k = 0; k < n; ++k) {
                ad(i * n + j, k * n + j) += x(i, k);
                ad(i * n + j, i * n + k) -= x(k, j);
            }
        }
    return ad;
}

inline Mat vec_to_mat(const Mat& colvec, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = colvec(i * n + j, 0);
    return m;
}

inline Mat mat_to_vec(const Mat& m) {
    std::size_t n = m.rows();
    Mat v(n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i * n + j, 0) = m(i, j);
    return v;
}

namespace detail {

/// Row vector picking out the trace of a vectorized matrix.
inline Mat trace_row(std::size_t n) {
    Mat t(1, n * n);
    for (std::size_t i = 0; i < n; ++i) t(0, i * n + i) = 1;
    return t;
}

} // namespace detail

/// Basis of Ker(ad y) intersected with the traceless matrices; its dimension
/// is sum of squared column heights of the type of y, minus one.
inline std::vector<Mat> slodowy_slice_basis(const Sl2Triple& t) {
    std::size_t n = t.y.rows();
    Mat sys = Mat::vstack(ad_matrix(t.y), detail::trace_row(n));
    Mat K = sys.nullspace();
    std::vector<Mat> basis;
    for (std::size_t c = 0; c < K.cols(); ++c) basis.push_back(vec_to_mat(K.col(c), n));
    return basis;
}

/// Transversality of the slice with the orbit at x: the image of ad x and the
/// kernel of ad y intersect trivially and together span the traceless
/// matrices.
inline bool transversality_check(const Sl2Triple& t, const Partition& base) {
    std::size_t n = t.x.rows();
    require(static_cast<long long>(n) == base.total(), ErrorKind::SizeMismatch,
            "triple size does not match the partition");
    Mat adx = ad_matrix(t.x);
    Mat im = adx.column_basis();
    Mat sys = Mat::vstack(ad_matrix(t.y), detail::trace_row(n));
    Mat ker = sys.nullspace();

    long long expect_im = orbit_dim(base);
    if (static_cast<long long>(im.cols()) != expect_im) return false;
    std::size_t span = Mat::hstack(im, ker).rank();
    return im.cols() + ker.cols() == n * n - 1 && span == n * n - 1;
}

/// Weight-graded pieces of the slice basis under ad h; entries are pairs
/// (weight, basis matrix). ad h acts diagonally on matrix units, so each
/// piece is cut out by a smaller exact system.
inline std::vector<std::pair<long long, Mat>> slice_basis_by_weight(const Sl2Triple& t) {
    std::size_t n = t.y.rows();
    std::vector<std::pair<long long, Mat>> out;
    std::vector<long long> hdiag(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational hv = t.h(i, i);
        hdiag[i] = static_cast<long long>(numerator(hv));
        require(denominator(hv) == 1, ErrorKind::InternalInconsistency, "h not integral");
    }
    std::vector<long long> weights;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) weights.push_back(hdiag[i] - hdiag[j]);
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

    Mat ady = ad_matrix(t.y);
    for (long long lam : weights) {
        std::vector<std::size_t> coords;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (hdiag[i] - hdiag[j] == lam) coords.push_back(i * n + j);
        // restriction of ad y (and for weight zero the trace) to these coordinates
        std::size_t extra = (lam == 0) ? 1 : 0;
        Mat sys(n * n + extra, coords.size());
        for (std::size_t c = 0; c < coords.size(); ++c) {
            for (std::size_t r = 0; r < n * n; ++r) sys(r, c) = ady(r, coords[c]);
            if (lam == 0) {
                std::size_t i = coords[c] / n, j = coords[c] % n;
                if (i == j) sys(n * n, c) = 1;
            }
        }
        Mat K = sys.nullspace();
        for (std::size_t c = 0; c < K.cols(); ++c) {
            Mat m(n, n);
            for (std::size_t r = 0; r < coords.size(); ++r)
                m(coords[r] / n, coords[r] % n) = K(r, c);
            out.emplace_back(lam, std::move(m));
        }
    }
    return out;
}

struct SampleDimResult {
    bool found = false;        ///< false when no sample of the exact ambient type turned up
    long long dim = -1;        ///< max tangent dimension over exact-type samples
    long long tried = 0;       ///< candidate points examined
    long long exact_hits = 0;  ///< candidates that were nilpotent of the exact ambient type
};

/// Randomized tangent-space estimator for the slice dimension: at sampled
/// nilpotent points z of the ambient type lying in the slice, measure
/// dim(Im(ad z) ∩ Ker(ad y)). The exact value is slice_dim; this routine
/// reports what the samples see and flags exhaustion instead of failing.
inline SampleDimResult slice_sample_dim(const SlicePair& sp, long long trials,
                                        std::uint64_t seed = 1) {
    SampleDimResult res;
    std::size_t n = static_cast<std::size_t>(sp.boxes());
    Rng rng(seed);

    const bool base_is_zero = is_ones(sp.base());
    Sl2Triple t = base_is_zero ? Sl2Triple{Mat(n, n), Mat(n, n), Mat(n, n)}
                               : sl2_completion(sp.base());
    Mat slice_ker = Mat::vstack(ad_matrix(t.y), detail::trace_row(n)).nullspace();

    auto consider = [&](const Mat& z) {
        ++res.tried;
        if (!(z.pow(n)).is_zero()) return;
        Partition type = nilpotent_partition(z);
        if (!(type == sp.ambient())) return;
        ++res.exact_hits;
        Mat im = ad_matrix(z).column_basis();
        long long dim = static_cast<long long>(intersection_dim(im, slice_ker));
        if (!res.found || dim > res.dim) {
            res.found = true;
            res.dim = dim;
        }
    };

    if (sp.base() == sp.ambient()) {
        consider(jordan_nilpotent(sp.base()));
        return res;
    }

    if (base_is_zero) {
        // the slice is everything; arbitrary conjugates of the Jordan form work
        Mat j = jordan_nilpotent(sp.ambient());
        for (long long k = 0; k < trials; ++k) {
            Mat g = Mat::random_invertible(n, rng, -3, 3);
            consider(g * j * *g.inverse());
        }
        return res;
    }

    // move only along the strictly negative ad-h weights of the slice
    std::vector<Mat> dirs;
    for (auto& [lam, m] : slice_basis_by_weight(t))
        if (lam < 0) dirs.push_back(m);
    if (dirs.empty()) return res;

    // deterministic single-direction sweep first, then random combinations
    for (std::size_t k = 0; k < dirs.size() && res.tried < trials; ++k) {
        consider(t.x + dirs[k]);
        if (res.tried < trials) consider(t.x - dirs[k]);
    }
    while (res.tried < trials) {
        Mat z = t.x;
        for (const Mat& m : dirs) {
            long long c = rng.int_in(-2, 2);
            if (c != 0) z = z + m * Rational(c);
        }
        consider(z);
    }
    return res;
}

} // namespace slodowy
