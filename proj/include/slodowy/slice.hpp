#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "slodowy/error.hpp"
#include "slodowy/partition.hpp"

namespace slodowy {

/// Validated pair of nested nilpotent orbits: `base` (the orbit of the base
/// point, d') inside the closure of `ambient` (d). Caches both dual
/// partitions; the base dual is padded with zeros to the ambient width m.
class SlicePair {
public:
    SlicePair(const Partition& base, const Partition& ambient)
        : base_(base), ambient_(ambient) {
        require(base.total() == ambient.total(), ErrorKind::SizeMismatch,
                "base and ambient partition different totals");
        require(dominated_by(base, ambient), ErrorKind::NotNested,
                "base orbit not contained in the ambient orbit closure");
        amb_dual_ = dual(ambient).parts();
        base_dual_ = dual(base).parts();
        base_dual_.resize(amb_dual_.size(), 0); // base dual is never wider
    }

    const Partition& base() const { return base_; }
    const Partition& ambient() const { return ambient_; }
    long long boxes() const { return ambient_.total(); }

    /// Number of columns of the ambient diagram.
    std::size_t width() const { return amb_dual_.size(); }

    /// Column heights of the ambient diagram.
    const std::vector<long long>& ambient_dual() const { return amb_dual_; }
    /// Column heights of the base diagram, zero-padded to width().
    const std::vector<long long>& base_dual() const { return base_dual_; }

private:
    Partition base_;
    Partition ambient_;
    std::vector<long long> amb_dual_;
    std::vector<long long> base_dual_;
};

inline SlicePair make_slice_pair(const Partition& base, const Partition& ambient) {
    return SlicePair(base, ambient);
}

/// Quiver dimension vectors attached to a slice pair, indexed by the
/// vertices 1..m-1 of the type-A chain.
struct DimVectors {
    std::vector<long long> v;
    std::vector<long long> w;

    bool operator==(const DimVectors& o) const { return v == o.v && w == o.w; }
};

/// v_i = prefix_i(base dual) - prefix_i(ambient dual)  (nonnegative exactly
/// under nesting), w_i = number of base rows of length i.
inline DimVectors dimension_vectors(const SlicePair& sp) {
    require(!is_ones(sp.ambient()), ErrorKind::DegenerateAmbient,
            "ambient orbit is a point");
    std::size_t m = sp.width();
    DimVectors dv;
    dv.v.resize(m - 1, 0);
    dv.w.resize(m - 1, 0);
    long long pa = 0, pb = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        pa += sp.ambient_dual()[i];
        pb += sp.base_dual()[i];
        dv.v[i] = pb - pa;
        require(dv.v[i] >= 0, ErrorKind::InternalInconsistency, "negative v component");
    }
    for (long long row : sp.base().parts())
        if (row < static_cast<long long>(m)) ++dv.w[static_cast<std::size_t>(row - 1)];
    return dv;
}

/// Dimension vectors of the full orbit closure: v_i = N - prefix_i(dual),
/// w = (N, 0, ..., 0). Equals dimension_vectors for base = [1,...,1].
inline DimVectors tilde_vectors(const Partition& d) {
    require(!is_ones(d), ErrorKind::DegenerateAmbient, "orbit closure is a point");
    std::vector<long long> a = dual(d).parts();
    long long n = d.total();
    DimVectors dv;
    dv.v.resize(a.size() - 1, 0);
    dv.w.assign(a.size() - 1, 0);
    dv.w[0] = n;
    long long prefix = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        prefix += a[i];
        dv.v[i] = n - prefix;
    }
    return dv;
}

/// One factor of the slice decomposition: a smaller slice pair together with
/// the contiguous range of original quiver vertices it came from (1-based,
/// inclusive).
struct SliceFactor {
    Partition ambient;
    Partition base;
    long long boxes = 0;
    int first_vertex = 0;
    int last_vertex = 0;

    bool operator==(const SliceFactor& o) const {
        return ambient == o.ambient && base == o.base && boxes == o.boxes &&
               first_vertex == o.first_vertex && last_vertex == o.last_vertex;
    }
};

namespace detail {

/// Rows of the diagram whose column heights are given (heights weakly
/// decreasing, zeros allowed at the tail). Empty result for zero heights.
inline std::vector<long long> rows_from_column_heights(const std::vector<long long>& heights) {
    std::vector<long long> rows;
    if (heights.empty()) return rows;
    long long top = heights[0];
    for (long long r = 0; r < top; ++r) {
        long long len = 0;
        for (long long h : heights)
            if (h > r) ++len;
        rows.push_back(len);
    }
    return rows;
}

inline SliceFactor make_factor(std::vector<long long> amb_parts, std::vector<long long> base_parts,
                               int first_vertex, int last_vertex) {
    Partition amb{std::move(amb_parts)};
    Partition bse{std::move(base_parts)};
    SliceFactor f{amb, bse, amb.total(), first_vertex, last_vertex};
    require(f.boxes == f.base.total(), ErrorKind::InternalInconsistency,
            "factor box counts differ");
    require(dominated_by(f.base, f.ambient), ErrorKind::InternalInconsistency,
            "reconstructed factor is not nested");
    require(f.ambient != f.base, ErrorKind::InternalInconsistency,
            "reconstructed factor is trivial");
    return f;
}

} // namespace detail

/// Decomposition through the quiver dimension vectors: split the vertex range
/// at every v_i = 0 into maximal blocks, rebuild each block's ambient diagram
/// from the difference sequence of its enlarged dimension vector and its base
/// diagram from the block of w.
inline std::vector<SliceFactor> decompose_quiver(const SlicePair& sp) {
    require(!is_ones(sp.ambient()), ErrorKind::DegenerateAmbient,
            "ambient orbit is a point");
    DimVectors dv = dimension_vectors(sp);
    std::vector<SliceFactor> out;
    std::size_t n = dv.v.size();
    std::size_t i = 0;
    while (i < n) {
        if (dv.v[i] == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && dv.v[j] != 0) ++j;
        // block of vertices [i+1 .. j] in 1-based labels
        std::size_t len = j - i;
        std::vector<long long> bv(dv.v.begin() + i, dv.v.begin() + j);
        std::vector<long long> bw(dv.w.begin() + i, dv.w.begin() + j);

        long long boxes = 0;
        for (std::size_t k = 0; k < len; ++k) boxes += static_cast<long long>(k + 1) * bw[k];

        // enlarged dimension vector of the block
        std::vector<long long> ev(len);
        ev[len - 1] = bv[len - 1];
        for (std::size_t k = 0; k + 1 < len; ++k) {
            long long s = bv[k];
            for (std::size_t l = k + 1; l < len; ++l)
                s += static_cast<long long>(l - k) * bw[l];
            ev[k] = s;
        }

        // column heights of the block ambient: differences of (boxes, ev..., 0)
        std::vector<long long> heights;
        heights.push_back(boxes - ev[0]);
        for (std::size_t k = 0; k + 1 < len; ++k) heights.push_back(ev[k] - ev[k + 1]);
        heights.push_back(ev[len - 1]);
        while (!heights.empty() && heights.back() == 0) heights.pop_back();
        for (std::size_t k = 0; k < heights.size(); ++k)
            require(heights[k] > 0 && (k == 0 || heights[k - 1] >= heights[k]),
                    ErrorKind::InternalInconsistency, "block difference sequence not a dual partition");

        std::vector<long long> base_rows;
        for (std::size_t k = len; k-- > 0;)
            for (long long r = 0; r < bw[k]; ++r) base_rows.push_back(static_cast<long long>(k + 1));

        if (boxes > 0)
            out.push_back(detail::make_factor(detail::rows_from_column_heights(heights),
                                              base_rows, static_cast<int>(i + 1),
                                              static_cast<int>(j)));
        i = j;
    }
    return out;
}

/// Decomposition by cutting Young diagrams: split the columns wherever the
/// cumulative column sums of ambient and base agree (as finely as possible),
/// then delete the leading run of rows the two restricted diagrams share.
inline std::vector<SliceFactor> decompose_young(const SlicePair& sp) {
    require(!is_ones(sp.ambient()), ErrorKind::DegenerateAmbient,
            "ambient orbit is a point");
    std::size_t m = sp.width();
    const auto& a = sp.ambient_dual();
    const auto& ap = sp.base_dual();

    std::vector<std::size_t> cuts;
    cuts.push_back(0);
    long long pa = 0, pb = 0;
    for (std::size_t i = 0; i < m; ++i) {
        pa += a[i];
        pb += ap[i];
        if (pa == pb) cuts.push_back(i + 1);
    }
    require(cuts.back() == m, ErrorKind::InternalInconsistency, "column sums never close");

    std::vector<SliceFactor> out;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        std::size_t lo = cuts[c], hi = cuts[c + 1]; // columns lo+1..hi of the diagrams
        std::vector<long long> amb_cols(a.begin() + lo, a.begin() + hi);
        std::vector<long long> base_cols(ap.begin() + lo, ap.begin() + hi);
        std::vector<long long> amb_rows = detail::rows_from_column_heights(amb_cols);
        std::vector<long long> base_rows = detail::rows_from_column_heights(base_cols);

        std::size_t common = 0;
        while (common < amb_rows.size() && common < base_rows.size() &&
               amb_rows[common] == base_rows[common])
            ++common;
        amb_rows.erase(amb_rows.begin(), amb_rows.begin() + common);
        base_rows.erase(base_rows.begin(), base_rows.begin() + common);
        if (amb_rows.empty()) {
            require(base_rows.empty(), ErrorKind::InternalInconsistency,
                    "unbalanced block after removing common rows");
            continue;
        }
        out.push_back(detail::make_factor(amb_rows, base_rows, static_cast<int>(lo + 1),
                                          static_cast<int>(hi - 1)));
    }
    return out;
}

/// Product of the per-factor resolution counts; 1 for the empty decomposition.
inline Count count_slice_resolutions(const SlicePair& sp) {
    if (sp.base() == sp.ambient()) return 1;
    Count total = 1;
    for (const SliceFactor& f : decompose_quiver(sp)) total *= count_resolutions(f.ambient);
    return total;
}

/// Dimension of the slice: difference of the two orbit dimensions.
inline long long slice_dim(const SlicePair& sp) {
    return orbit_dim(sp.ambient()) - orbit_dim(sp.base());
}

} // namespace slodowy
