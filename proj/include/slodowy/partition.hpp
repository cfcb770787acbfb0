#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "slodowy/error.hpp"
#include "slodowy/rational.hpp"

namespace slodowy {

/// Partition of a positive integer, weakly decreasing, no trailing zeros.
/// Doubles as a Young diagram: parts[i] is the number of boxes in row i.
class Partition {
public:
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        require(!parts_.empty(), ErrorKind::NotAPartition, "empty partition");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] >= 1, ErrorKind::NotAPartition, "parts must be positive");
            require(i == 0 || parts_[i - 1] >= parts_[i], ErrorKind::NotAPartition,
                    "parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    /// Comma-separated decimal integers, e.g. "5,4,3,3,2,1". Spaces allowed.
    static Partition parse(std::string_view s) {
        std::vector<long long> parts;
        std::string tok;
        auto flush = [&]() {
            if (tok.empty()) fail(ErrorKind::ParseError, "empty component in partition");
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, "bad integer '" + tok + "'");
            }
            if (pos != tok.size()) fail(ErrorKind::ParseError, "bad integer '" + tok + "'");
            parts.push_back(v);
            tok.clear();
        };
        for (char c : s) {
            if (c == ',') {
                flush();
            } else if (c == ' ' || c == '\t') {
                continue;
            } else {
                tok.push_back(c);
            }
        }
        flush();
        return Partition(std::move(parts));
    }

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long long operator[](std::size_t i) const { return parts_[i]; }

    /// Total number of boxes.
    long long total() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    /// One text line of box glyphs per row.
    std::string diagram(bool ascii = false) const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += '\n';
            for (long long j = 0; j < parts_[i]; ++j) s += ascii ? "#" : "█";
        }
        return s;
    }

private:
    std::vector<long long> parts_;
};

inline bool is_ones(const Partition& p) { return p[0] == 1; }

/// Transpose of the Young diagram: entry k is the height of column k.
inline Partition dual(const Partition& p) {
    std::vector<long long> cols(static_cast<std::size_t>(p[0]), 0);
    for (long long part : p.parts())
        for (long long k = 0; k < part; ++k) ++cols[static_cast<std::size_t>(k)];
    return Partition(std::move(cols));
}

/// Orbit-closure order: true iff every prefix sum of `lo` is bounded by the
/// corresponding prefix sum of `hi`, for k up to the shorter length.
/// Requires equal totals.
inline bool dominated_by(const Partition& lo, const Partition& hi) {
    require(lo.total() == hi.total(), ErrorKind::SizeMismatch,
            "partitions of different totals are not comparable");
    long long slo = 0, shi = 0;
    std::size_t k = std::min(lo.length(), hi.length());
    for (std::size_t i = 0; i < k; ++i) {
        slo += lo[i];
        shi += hi[i];
        if (slo > shi) return false;
    }
    return true;
}

/// Dimension of the nilpotent orbit with Jordan type d: N^2 - sum of squared
/// column heights.
inline long long orbit_dim(const Partition& d) {
    long long n = d.total();
    Partition a = dual(d);
    long long s = 0;
    for (long long h : a.parts()) s += h * h;
    return n * n - s;
}

/// Number of crepant resolutions of the orbit closure: the count of distinct
/// rearrangements of the dual partition, m! / prod(multiplicities!).
inline Count count_resolutions(const Partition& d) {
    Partition a = dual(d);
    Count num = 1;
    for (std::size_t i = 2; i <= a.length(); ++i) num *= i;
    std::size_t i = 0;
    while (i < a.length()) {
        std::size_t j = i;
        while (j < a.length() && a[j] == a[i]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k) num /= static_cast<long long>(k);
        i = j;
    }
    return num;
}

/// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> all_partitions(long long n) {
    std::vector<Partition> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rem, long long maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long long p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(rec, n, n);
    return out;
}

} // namespace slodowy
