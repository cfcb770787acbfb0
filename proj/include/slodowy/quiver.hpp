#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "slodowy/error.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/partition.hpp"
#include "slodowy/rng.hpp"
#include "slodowy/slice.hpp"

namespace slodowy {

/// Point of the doubled type-A quiver with framing. Vertices are 1..n with
/// spaces V_i of dimension v[i-1] and framings W_j of dimension w[j-1];
/// A[i-1]: V_i -> V_{i+1}, B[i-1]: V_{i+1} -> V_i, Gamma[j-1]: W_j -> V_j,
/// Delta[j-1]: V_j -> W_j. For the full-orbit shape w = (N, 0, ..., 0) the
/// framing maps at vertex 1 play the role of the boundary maps into C^N.
struct QuiverRep {
    std::vector<long long> v;
    std::vector<long long> w;
    std::vector<Mat> A;
    std::vector<Mat> B;
    std::vector<Mat> Gamma;
    std::vector<Mat> Delta;
};

inline void validate_shapes(const QuiverRep& r) {
    std::size_t n = r.v.size();
    require(n >= 1 && r.w.size() == n, ErrorKind::ShapeError, "dimension vectors disagree");
    require(r.A.size() == n - 1 && r.B.size() == n - 1 && r.Gamma.size() == n &&
                r.Delta.size() == n,
            ErrorKind::ShapeError, "wrong number of maps");
    auto dims = [](const Mat& m, long long rows, long long cols, const char* what) {
        require(m.rows() == static_cast<std::size_t>(rows) &&
                    m.cols() == static_cast<std::size_t>(cols),
                ErrorKind::ShapeError, what);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dims(r.A[i], r.v[i + 1], r.v[i], "A shape");
        dims(r.B[i], r.v[i], r.v[i + 1], "B shape");
    }
    for (std::size_t j = 0; j < n; ++j) {
        dims(r.Gamma[j], r.v[j], r.w[j], "Gamma shape");
        dims(r.Delta[j], r.w[j], r.v[j], "Delta shape");
    }
}

/// Component at vertex j is Gamma_j Delta_j + A_{j-1} B_{j-1} - B_j A_j,
/// with the missing terms dropped at the two ends of the chain.
inline std::vector<Mat> moment_map(const QuiverRep& r) {
    validate_shapes(r);
    std::size_t n = r.v.size();
    std::vector<Mat> mu;
    for (std::size_t j = 0; j < n; ++j) {
        Mat m = r.Gamma[j] * r.Delta[j];
        if (j > 0) m = m + r.A[j - 1] * r.B[j - 1];
        if (j + 1 < n) m = m - r.B[j] * r.A[j];
        mu.push_back(std::move(m));
    }
    return mu;
}

inline bool on_zero_fiber(const QuiverRep& r) {
    for (const Mat& m : moment_map(r))
        if (!m.is_zero()) return false;
    return true;
}

/// Stability at the all-ones character: the smallest subspace family that
/// contains every Im Gamma_j and is closed under all A_i and B_i must already
/// be the whole of V. Computed by saturating the spans.
inline bool is_one_stable(const QuiverRep& r) {
    require(on_zero_fiber(r), ErrorKind::NotOnFiber, "moment map does not vanish");
    std::size_t n = r.v.size();
    std::vector<Mat> S;
    for (std::size_t j = 0; j < n; ++j) S.push_back(r.Gamma[j].column_basis());
    for (;;) {
        std::size_t before = 0;
        for (const Mat& s : S) before += s.cols();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            S[i + 1] = Mat::hstack(S[i + 1], r.A[i] * S[i]).column_basis();
            S[i] = Mat::hstack(S[i], r.B[i] * S[i + 1]).column_basis();
        }
        std::size_t after = 0;
        for (const Mat& s : S) after += s.cols();
        if (after == before) break;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (S[j].cols() != static_cast<std::size_t>(r.v[j])) return false;
    return true;
}

inline bool is_tilde_shape(const QuiverRep& r) {
    if (r.w.empty() || r.w[0] <= 0) return false;
    for (std::size_t j = 1; j < r.w.size(); ++j)
        if (r.w[j] != 0) return false;
    return true;
}

/// For full-orbit reps, one-stability is equivalent to surjectivity of the
/// whole A-chain including the boundary map Gamma_1.
inline bool all_A_surjective(const QuiverRep& r) {
    validate_shapes(r);
    require(is_tilde_shape(r), ErrorKind::ShapeError, "framing is not (N, 0, ..., 0)");
    if (r.Gamma[0].rank() != static_cast<std::size_t>(r.v[0])) return false;
    for (std::size_t i = 0; i + 1 < r.v.size(); ++i)
        if (r.A[i].rank() != static_cast<std::size_t>(r.v[i + 1])) return false;
    return true;
}

/// A nilpotent endomorphism together with the partial flag it respects:
/// x moves each subspace into the previous one, subspaces[i] being a basis
/// matrix of the i-th space (x kills the first one).
struct FlagPoint {
    Mat x;
    std::vector<Mat> subspaces;
};

/// Jordan type from ranks of powers: the k-th column height of the type is
/// rank(x^{k-1}) - rank(x^k).
inline Partition nilpotent_partition(const Mat& x) {
    require(x.rows() == x.cols(), ErrorKind::ShapeError, "nonsquare matrix");
    std::size_t n = x.rows();
    require(n >= 1, ErrorKind::ShapeError, "empty matrix");
    std::vector<long long> heights;
    Mat p = x;
    long long prev = static_cast<long long>(n);
    for (std::size_t k = 1; k <= n; ++k) {
        long long rk = static_cast<long long>(p.rank());
        heights.push_back(prev - rk);
        prev = rk;
        if (rk == 0) break;
        p = p * x;
    }
    require(prev == 0, ErrorKind::NotNilpotent, "matrix is not nilpotent");
    return dual(Partition(std::move(heights)));
}

/// Full-orbit rep to cotangent-bundle point: x = Delta_1 Gamma_1 and the i-th
/// flag space is the kernel of the composite A-chain down to the framing.
inline FlagPoint theta(const QuiverRep& r) {
    validate_shapes(r);
    require(is_tilde_shape(r), ErrorKind::ShapeError, "framing is not (N, 0, ..., 0)");
    require(on_zero_fiber(r), ErrorKind::NotOnFiber, "moment map does not vanish");
    require(all_A_surjective(r), ErrorKind::NotStable, "an A-chain map is not surjective");
    std::size_t n = r.v.size();
    long long N = r.w[0];

    FlagPoint fp;
    fp.x = r.Delta[0] * r.Gamma[0];
    Mat chain = r.Gamma[0];
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) chain = r.A[i - 1] * chain;
        Mat ker = chain.nullspace();
        require(ker.cols() == static_cast<std::size_t>(N - r.v[i]),
                ErrorKind::InternalInconsistency, "kernel flag has wrong dimensions");
        fp.subspaces.push_back(std::move(ker));
    }
    // incidence: x kills the first space and moves each one into the previous
    require((fp.x * fp.subspaces[0]).is_zero(), ErrorKind::InternalInconsistency,
            "x does not kill the smallest flag space");
    for (std::size_t i = 0; i + 1 < fp.subspaces.size(); ++i)
        require(subspace_contains(fp.subspaces[i], fp.x * fp.subspaces[i + 1]),
                ErrorKind::InternalInconsistency, "kernel flag is not x-stable");
    require(subspace_contains(fp.subspaces.back(), fp.x), ErrorKind::InternalInconsistency,
            "x does not map into the largest flag space");
    return fp;
}

/// Inverse direction: realize the quotients C^N / U_i in column-pivot
/// complement coordinates, take the natural projections as the A-chain and
/// the maps induced by x as the B-chain.
inline QuiverRep from_flag(const Mat& x, const std::vector<Mat>& subspaces) {
    std::size_t N = x.rows();
    require(x.cols() == N && N >= 1, ErrorKind::ShapeError, "x must be square");
    std::size_t n = subspaces.size();
    require(n >= 1, ErrorKind::ShapeError, "flag must have at least one proper subspace");

    for (std::size_t i = 0; i < n; ++i) {
        const Mat& u = subspaces[i];
        require(u.rows() == N, ErrorKind::ShapeError, "flag basis has wrong height");
        require(u.rank() == u.cols(), ErrorKind::ShapeError, "flag basis not independent");
        require(u.cols() >= 1 && u.cols() < N, ErrorKind::ShapeError,
                "flag spaces must be proper and nonzero");
        if (i > 0) {
            require(subspaces[i - 1].cols() < u.cols(), ErrorKind::ShapeError,
                    "flag dimensions must increase");
            require(subspace_contains(u, subspaces[i - 1]), ErrorKind::ShapeError,
                    "flag spaces are not nested");
        }
    }
    require((x * subspaces[0]).is_zero(), ErrorKind::IncidenceViolation,
            "x does not kill the smallest flag space");
    for (std::size_t i = 0; i + 1 < n; ++i)
        require(subspace_contains(subspaces[i], x * subspaces[i + 1]),
                ErrorKind::IncidenceViolation, "x does not respect the flag");
    require(subspace_contains(subspaces.back(), x), ErrorKind::IncidenceViolation,
            "x does not map into the largest flag space");

    // projections onto complement coordinates
    std::vector<Mat> comp(n), proj(n);
    for (std::size_t i = 0; i < n; ++i) {
        comp[i] = pivot_complement(subspaces[i]);
        Mat M = Mat::hstack(subspaces[i], comp[i]);
        auto inv = M.inverse();
        require(inv.has_value(), ErrorKind::InternalInconsistency, "complement not complementary");
        proj[i] = inv->block(subspaces[i].cols(), 0, comp[i].cols(), N);
    }

    QuiverRep r;
    r.v.resize(n);
    r.w.assign(n, 0);
    r.w[0] = static_cast<long long>(N);
    for (std::size_t i = 0; i < n; ++i) r.v[i] = static_cast<long long>(comp[i].cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        r.A.push_back(proj[i + 1] * comp[i]);
        r.B.push_back(proj[i] * (x * comp[i + 1]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (j == 0) {
            r.Gamma.push_back(proj[0]);
            r.Delta.push_back(x * comp[0]);
        } else {
            r.Gamma.push_back(Mat(static_cast<std::size_t>(r.v[j]), 0));
            r.Delta.push_back(Mat(0, static_cast<std::size_t>(r.v[j])));
        }
    }
    validate_shapes(r);
    return r;
}

namespace detail {

struct ChainView {
    const QuiverRep& r;
    long long N;
    std::size_t n;

    explicit ChainView(const QuiverRep& rep) : r(rep), N(rep.w[0]), n(rep.v.size()) {}

    long long dim(std::size_t j) const { // j in 0..n+1, with V_0 = W_1, V_{n+1} = 0
        if (j == 0) return N;
        if (j <= n) return r.v[j - 1];
        return 0;
    }

    Mat mapA(std::size_t j) const { // A_j : V_j -> V_{j+1}
        if (j == 0) return r.Gamma[0];
        if (j < n) return r.A[j - 1];
        return Mat(0, static_cast<std::size_t>(dim(n)));
    }

    Mat mapB(std::size_t j) const { // B_j : V_{j+1} -> V_j
        if (j == 0) return r.Delta[0];
        if (j < n) return r.B[j - 1];
        return Mat(static_cast<std::size_t>(dim(n)), 0);
    }
};

inline void store_A(QuiverRep& r, std::size_t j, Mat m) {
    if (j == 0)
        r.Gamma[0] = std::move(m);
    else if (j < r.v.size())
        r.A[j - 1] = std::move(m);
    else
        require(m.rows() == 0, ErrorKind::InternalInconsistency, "map beyond chain end");
}

inline void store_B(QuiverRep& r, std::size_t j, Mat m) {
    if (j == 0)
        r.Delta[0] = std::move(m);
    else if (j < r.v.size())
        r.B[j - 1] = std::move(m);
    else
        require(m.cols() == 0, ErrorKind::InternalInconsistency, "map beyond chain end");
}

} // namespace detail

/// Direction of a wall crossing at a vertex. A point stable for a character
/// that is positive at the vertex (the all-ones chamber, say) crosses
/// `from_positive`; its image is stable on the other side and crosses back
/// `from_negative`. The two crossings are inverse to each other.
enum class WallCrossing { from_positive, from_negative };

/// Wall-crossing reflection at vertex i (1-based). Writing D = V_{i-1} (+)
/// V_{i+1} with V_0 = W_1 and V_{n+1} = 0, the maps touching vertex i are
/// packaged as sigma = (A_{i-1}, B_i): D -> V_i and tau = (B_{i-1}, -A_i):
/// V_i -> D; the vanishing moment component at i says sigma tau = 0. Crossing
/// from the positive side rebuilds the vertex as Ker(sigma), with the new
/// maps cut out of the inclusion iota and the unique xi solving
/// iota xi = tau sigma; sigma must be surjective (guaranteed at one-stable
/// points). Crossing from the negative side rebuilds it as Coker(tau) via the
/// projection p and the unique eta with eta p = tau sigma; tau must be
/// injective. Rank conditions alone cannot tell the two sides apart: a point
/// can be stable for both adjacent chambers and the two crossings genuinely
/// differ there, so the direction is part of the input. Maintained
/// identities, either way:
///   B'_{i-1} A'_{i-1} = B_{i-1} A_{i-1},   A'_i B'_i = A_i B_i,
///   A'_{i-1} B'_{i-1} - B'_i A'_i = 0,     dim V'_i = dim D - dim V_i.
inline QuiverRep reflect(const QuiverRep& r, std::size_t i,
                         WallCrossing dir = WallCrossing::from_positive) {
    validate_shapes(r);
    require(is_tilde_shape(r), ErrorKind::ShapeError, "framing is not (N, 0, ..., 0)");
    std::size_t n = r.v.size();
    require(1 <= i && i <= n, ErrorKind::DimensionMismatch, "vertex index out of range");
    require(on_zero_fiber(r), ErrorKind::NotOnFiber, "moment map does not vanish");

    detail::ChainView cv(r);
    std::size_t dl = static_cast<std::size_t>(cv.dim(i - 1));
    std::size_t dr = static_cast<std::size_t>(cv.dim(i + 1));
    std::size_t vi = static_cast<std::size_t>(cv.dim(i));

    Mat sigma = Mat::hstack(cv.mapA(i - 1), cv.mapB(i));
    Mat tau = Mat::vstack(cv.mapB(i - 1), -cv.mapA(i));
    require((sigma * tau).is_zero(), ErrorKind::InternalInconsistency,
            "moment component at the reflection vertex does not vanish");
    require(dl + dr >= vi, ErrorKind::ExactnessFailure, "reflected dimension would be negative");
    std::size_t nd = dl + dr - vi;

    Mat newA_im1, newB_im1, newA_i, newB_i;
    if (dir == WallCrossing::from_positive) {
        require(sigma.rank() == vi, ErrorKind::ExactnessFailure,
                "chain maps at the vertex are not jointly surjective");
        Mat iota = sigma.nullspace(); // (dl+dr) x nd
        require(iota.cols() == nd, ErrorKind::InternalInconsistency, "kernel dimension");
        auto xi = Mat::solve(iota, tau * sigma);
        require(xi.has_value(), ErrorKind::ExactnessFailure,
                "transported maps do not factor through the kernel");
        newB_im1 = iota.block(0, 0, dl, nd);
        newA_i = -iota.block(dl, 0, dr, nd);
        newA_im1 = xi->block(0, 0, nd, dl);
        newB_i = xi->block(0, dl, nd, dr);
    } else {
        require(tau.rank() == vi, ErrorKind::ExactnessFailure,
                "chain maps at the vertex are not jointly injective");
        Mat comp = pivot_complement(tau); // (dl+dr) x nd
        require(comp.cols() == nd, ErrorKind::InternalInconsistency, "cokernel dimension");
        Mat M = Mat::hstack(tau, comp);
        auto inv = M.inverse();
        require(inv.has_value(), ErrorKind::InternalInconsistency, "complement not complementary");
        Mat p = inv->block(vi, 0, nd, dl + dr); // projection D -> Coker(tau)
        Mat eta = (tau * sigma) * comp;          // unique with eta p = tau sigma
        require((eta * p) == (tau * sigma), ErrorKind::ExactnessFailure,
                "transported maps do not factor through the cokernel");
        newA_im1 = p.block(0, 0, nd, dl);
        newB_i = p.block(0, dl, nd, dr);
        newB_im1 = eta.block(0, 0, dl, nd);
        newA_i = -eta.block(dl, 0, dr, nd);
    }

    QuiverRep out = r;
    out.v[i - 1] = static_cast<long long>(nd);
    if (i >= 2) { // empty framing maps at the reflected vertex track its new size
        out.Gamma[i - 1] = Mat(nd, static_cast<std::size_t>(r.w[i - 1]));
        out.Delta[i - 1] = Mat(static_cast<std::size_t>(r.w[i - 1]), nd);
    }
    detail::store_A(out, i - 1, std::move(newA_im1));
    detail::store_B(out, i - 1, std::move(newB_im1));
    detail::store_A(out, i, std::move(newA_i));
    detail::store_B(out, i, std::move(newB_i));
    validate_shapes(out);

    // postconditions: zero moment map and unchanged image in the orbit closure
    require(on_zero_fiber(out), ErrorKind::InternalInconsistency,
            "reflected point left the zero fiber");
    require(out.Delta[0] * out.Gamma[0] == r.Delta[0] * r.Gamma[0],
            ErrorKind::InternalInconsistency, "reflection moved the underlying endomorphism");
    return out;
}

/// Reflected dimension vector: only the i-th entry changes, to
/// dim V_{i-1} + dim V_{i+1} - dim V_i (with V_0 the framing).
inline std::vector<long long> reflected_dims(const QuiverRep& r, std::size_t i) {
    detail::ChainView cv(r);
    std::vector<long long> d = r.v;
    d[i - 1] = cv.dim(i - 1) + cv.dim(i + 1) - cv.dim(i);
    return d;
}

/// Base change by invertible g_j at every vertex.
inline QuiverRep act(const std::vector<Mat>& g, const QuiverRep& r) {
    validate_shapes(r);
    std::size_t n = r.v.size();
    require(g.size() == n, ErrorKind::ShapeError, "one group element per vertex");
    std::vector<Mat> ginv(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto inv = g[j].inverse();
        require(inv.has_value(), ErrorKind::ShapeError, "group element not invertible");
        ginv[j] = std::move(*inv);
    }
    QuiverRep out = r;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.A[i] = g[i + 1] * r.A[i] * ginv[i];
        out.B[i] = g[i] * r.B[i] * ginv[i + 1];
    }
    for (std::size_t j = 0; j < n; ++j) {
        out.Gamma[j] = g[j] * r.Gamma[j];
        out.Delta[j] = r.Delta[j] * ginv[j];
    }
    return out;
}

/// Searches for a base change carrying `a` to `b`: invertible g_j with
/// act(g, a) == b. The intertwiner equations are linear in g (inhomogeneous
/// through the framing maps); the affine solution space is scanned for an
/// invertible element. For stable points the space is at most a point, so
/// this decides orbit equality there.
inline std::optional<std::vector<Mat>> find_intertwiner(const QuiverRep& a, const QuiverRep& b) {
    validate_shapes(a);
    validate_shapes(b);
    if (a.v != b.v || a.w != b.w) return std::nullopt;
    std::size_t n = a.v.size();

    auto verify = [&](const std::vector<Mat>& g) -> bool {
        for (const Mat& gk : g)
            if (gk.rank() != gk.rows()) return false;
        std::vector<Mat> ginv(n);
        for (std::size_t k = 0; k < n; ++k) ginv[k] = *g[k].inverse();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (!(g[k + 1] * a.A[k] * ginv[k] == b.A[k])) return false;
            if (!(g[k] * a.B[k] * ginv[k + 1] == b.B[k])) return false;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (!(g[k] * a.Gamma[k] == b.Gamma[k])) return false;
            if (!(a.Delta[k] * ginv[k] == b.Delta[k])) return false;
        }
        return true;
    };

    // When the chain maps of `a` are surjective every g is forced in turn:
    // g_1 through the framing, g_{k+1} through A_k. The candidate is the only
    // possible intertwiner, so verification decides.
    bool chain_onto = a.Gamma[0].rank() == static_cast<std::size_t>(a.v[0]) && a.w[0] > 0;
    for (std::size_t k = 0; k + 1 < n && chain_onto; ++k)
        chain_onto = a.A[k].rank() == static_cast<std::size_t>(a.v[k + 1]);
    for (std::size_t k = 1; k < n && chain_onto; ++k) chain_onto = a.w[k] == 0;
    if (chain_onto) {
        std::vector<Mat> g;
        auto g1 = Mat::solve(a.Gamma[0].transpose(), b.Gamma[0].transpose());
        if (!g1) return std::nullopt;
        g.push_back(g1->transpose());
        for (std::size_t k = 0; k + 1 < n; ++k) {
            auto gk = Mat::solve(a.A[k].transpose(), (b.A[k] * g.back()).transpose());
            if (!gk) return std::nullopt;
            g.push_back(gk->transpose());
        }
        if (verify(g)) return g;
        return std::nullopt;
    }

    std::vector<std::size_t> off(n, 0);
    std::size_t nun = 0;
    for (std::size_t k = 0; k < n; ++k) {
        off[k] = nun;
        nun += static_cast<std::size_t>(a.v[k] * a.v[k]);
    }
    auto gidx = [&](std::size_t k, std::size_t r_, std::size_t c_) {
        return off[k] + r_ * static_cast<std::size_t>(a.v[k]) + c_;
    };

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto new_row = [&]() -> std::vector<Rational>& {
        rows.emplace_back(nun);
        rhs.emplace_back(0);
        return rows.back();
    };

    // g_{k+1} A_k = B(=b.A_k) g_k   (both sides v_{k+2} x v_{k+1})
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t rdim = static_cast<std::size_t>(a.v[k + 1]);
        std::size_t cdim = static_cast<std::size_t>(a.v[k]);
        for (std::size_t r_ = 0; r_ < rdim; ++r_)
            for (std::size_t c_ = 0; c_ < cdim; ++c_) {
                auto& row = new_row();
                for (std::size_t s = 0; s < rdim; ++s) row[gidx(k + 1, r_, s)] += a.A[k](s, c_);
                for (std::size_t s = 0; s < cdim; ++s) row[gidx(k, s, c_)] -= b.A[k](r_, s);
            }
        // g_k B_k = b.B_k g_{k+1}
        for (std::size_t r_ = 0; r_ < cdim; ++r_)
            for (std::size_t c_ = 0; c_ < rdim; ++c_) {
                auto& row = new_row();
                for (std::size_t s = 0; s < cdim; ++s) row[gidx(k, r_, s)] += a.B[k](s, c_);
                for (std::size_t s = 0; s < rdim; ++s) row[gidx(k + 1, s, c_)] -= b.B[k](r_, s);
            }
    }
    // g_k Gamma_k = b.Gamma_k   and   b.Delta_k g_k = a.Delta_k
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t vk = static_cast<std::size_t>(a.v[k]);
        std::size_t wk = static_cast<std::size_t>(a.w[k]);
        for (std::size_t r_ = 0; r_ < vk; ++r_)
            for (std::size_t c_ = 0; c_ < wk; ++c_) {
                auto& row = new_row();
                for (std::size_t s = 0; s < vk; ++s) row[gidx(k, r_, s)] += a.Gamma[k](s, c_);
                rhs.back() = b.Gamma[k](r_, c_);
            }
        for (std::size_t r_ = 0; r_ < wk; ++r_)
            for (std::size_t c_ = 0; c_ < vk; ++c_) {
                auto& row = new_row();
                for (std::size_t s = 0; s < vk; ++s) row[gidx(k, s, c_)] += b.Delta[k](r_, s);
                rhs.back() = a.Delta[k](r_, c_);
            }
    }

    Mat sys(rows.size(), nun), target(rows.size(), 1);
    for (std::size_t r_ = 0; r_ < rows.size(); ++r_) {
        for (std::size_t c_ = 0; c_ < nun; ++c_) sys(r_, c_) = rows[r_][c_];
        target(r_, 0) = rhs[r_];
    }
    auto particular = Mat::solve(sys, target);
    if (!particular) return std::nullopt;
    Mat kernel = sys.nullspace();

    Rng rng(0xabcdefULL);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Mat sol = *particular;
        if (attempt > 0) {
            for (std::size_t c_ = 0; c_ < kernel.cols(); ++c_) {
                long long coef = rng.int_in(-2, 2);
                for (std::size_t r_ = 0; r_ < nun; ++r_)
                    sol(r_, 0) += kernel(r_, c_) * Rational(coef);
            }
        }
        std::vector<Mat> g;
        bool invertible = true;
        for (std::size_t k = 0; k < n && invertible; ++k) {
            std::size_t vk = static_cast<std::size_t>(a.v[k]);
            Mat gk(vk, vk);
            for (std::size_t r_ = 0; r_ < vk; ++r_)
                for (std::size_t c_ = 0; c_ < vk; ++c_) gk(r_, c_) = sol(gidx(k, r_, c_), 0);
            invertible = gk.rank() == vk;
            g.push_back(std::move(gk));
        }
        if (invertible) return g;
        if (kernel.cols() == 0) break;
    }
    return std::nullopt;
}

/// Random incidence pair for a flag type: a flag of the given type in general
/// position together with a generic x moving each space into the previous.
inline FlagPoint random_incidence_pair(const std::vector<long long>& flag_type, Rng& rng) {
    require(flag_type.size() >= 2, ErrorKind::ShapeError, "flag type needs at least two parts");
    long long N = 0;
    for (long long a : flag_type) {
        require(a >= 1, ErrorKind::ShapeError, "flag type parts must be positive");
        N += a;
    }
    Mat g = Mat::random_invertible(static_cast<std::size_t>(N), rng, -3, 3);

    // strictly block-upper-triangular in the flag basis
    Mat xb(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    std::size_t row0 = 0;
    for (std::size_t p = 0; p < flag_type.size(); ++p) {
        std::size_t col0 = 0;
        for (std::size_t q = 0; q < flag_type.size(); ++q) {
            if (q > p) {
                for (std::size_t i = 0; i < static_cast<std::size_t>(flag_type[p]); ++i)
                    for (std::size_t j = 0; j < static_cast<std::size_t>(flag_type[q]); ++j)
                        xb(row0 + i, col0 + j) = rng.int_in(-9, 9);
            }
            col0 += static_cast<std::size_t>(flag_type[q]);
        }
        row0 += static_cast<std::size_t>(flag_type[p]);
    }

    auto ginv = g.inverse();
    FlagPoint fp;
    fp.x = g * xb * *ginv;
    std::size_t cum = 0;
    for (std::size_t p = 0; p + 1 < flag_type.size(); ++p) {
        cum += static_cast<std::size_t>(flag_type[p]);
        fp.subspaces.push_back(g.block(0, 0, static_cast<std::size_t>(N), cum));
    }
    return fp;
}

/// Random point of the zero fiber for arbitrary dimension vectors: fix A and
/// Gamma at random, then solve the moment equations, which are linear in the
/// remaining maps B and Delta; a random kernel element is added to spread the
/// samples.
inline QuiverRep sample_on_fiber(const std::vector<long long>& v, const std::vector<long long>& w,
                                 Rng& rng) {
    std::size_t n = v.size();
    require(n >= 1 && w.size() == n, ErrorKind::ShapeError, "dimension vectors disagree");
    QuiverRep r;
    r.v = v;
    r.w = w;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        r.A.push_back(Mat::random_int(static_cast<std::size_t>(v[i + 1]),
                                      static_cast<std::size_t>(v[i]), rng, -9, 9));
        r.B.push_back(Mat(static_cast<std::size_t>(v[i]), static_cast<std::size_t>(v[i + 1])));
    }
    for (std::size_t j = 0; j < n; ++j) {
        r.Gamma.push_back(Mat::random_int(static_cast<std::size_t>(v[j]),
                                          static_cast<std::size_t>(w[j]), rng, -9, 9));
        r.Delta.push_back(Mat(static_cast<std::size_t>(w[j]), static_cast<std::size_t>(v[j])));
    }

    // unknowns: all entries of the B_i, then all entries of the Delta_j
    std::vector<std::size_t> boff(n ? n - 1 : 0, 0), doff(n, 0);
    std::size_t nun = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        boff[i] = nun;
        nun += static_cast<std::size_t>(v[i] * v[i + 1]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        doff[j] = nun;
        nun += static_cast<std::size_t>(w[j] * v[j]);
    }
    std::size_t neq = 0;
    for (std::size_t j = 0; j < n; ++j) neq += static_cast<std::size_t>(v[j] * v[j]);

    Mat sys(neq, nun);
    std::size_t eq0 = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t vj = static_cast<std::size_t>(v[j]);
        // Gamma_j Delta_j term
        for (std::size_t rr = 0; rr < vj; ++rr)
            for (std::size_t cc = 0; cc < vj; ++cc)
                for (std::size_t k = 0; k < static_cast<std::size_t>(w[j]); ++k)
                    sys(eq0 + rr * vj + cc, doff[j] + k * vj + cc) += r.Gamma[j](rr, k);
        // A_{j-1} B_{j-1} term
        if (j > 0) {
            std::size_t vp = static_cast<std::size_t>(v[j - 1]);
            for (std::size_t rr = 0; rr < vj; ++rr)
                for (std::size_t cc = 0; cc < vj; ++cc)
                    for (std::size_t k = 0; k < vp; ++k)
                        sys(eq0 + rr * vj + cc, boff[j - 1] + k * vj + cc) += r.A[j - 1](rr, k);
        }
        // -B_j A_j term
        if (j + 1 < n) {
            std::size_t vn = static_cast<std::size_t>(v[j + 1]);
            for (std::size_t rr = 0; rr < vj; ++rr)
                for (std::size_t cc = 0; cc < vj; ++cc)
                    for (std::size_t k = 0; k < vn; ++k)
                        sys(eq0 + rr * vj + cc, boff[j] + rr * vn + k) -= r.A[j](k, cc);
        }
        eq0 += vj * vj;
    }

    Mat K = sys.nullspace();
    Mat sol(nun, 1);
    for (std::size_t c = 0; c < K.cols(); ++c) {
        long long coef = rng.int_in(-2, 2);
        if (coef == 0) continue;
        for (std::size_t rr = 0; rr < nun; ++rr) sol(rr, 0) += K(rr, c) * coef;
    }

    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t rr = 0; rr < static_cast<std::size_t>(v[i]); ++rr)
            for (std::size_t cc = 0; cc < static_cast<std::size_t>(v[i + 1]); ++cc)
                r.B[i](rr, cc) = sol(boff[i] + rr * static_cast<std::size_t>(v[i + 1]) + cc, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t rr = 0; rr < static_cast<std::size_t>(w[j]); ++rr)
            for (std::size_t cc = 0; cc < static_cast<std::size_t>(v[j]); ++cc)
                r.Delta[j](rr, cc) = sol(doff[j] + rr * static_cast<std::size_t>(v[j]) + cc, 0);

    require(on_zero_fiber(r), ErrorKind::InternalInconsistency, "fiber sample left the fiber");
    return r;
}

} // namespace slodowy
