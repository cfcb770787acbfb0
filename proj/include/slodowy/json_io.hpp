#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "slodowy/chamber.hpp"
#include "slodowy/error.hpp"
#include "slodowy/liealg.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/partition.hpp"
#include "slodowy/quiver.hpp"
#include "slodowy/slice.hpp"

namespace slodowy {

using json = nlohmann::json;

inline json count_to_json(const Count& c) {
    // JSON numbers stay exact up to int64; beyond that fall back to a string
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    require(j.is_array() && !j.empty(), ErrorKind::ParseError, "partition must be an array");
    std::vector<long long> parts;
    for (const auto& x : j) {
        require(x.is_number_integer(), ErrorKind::ParseError, "partition entries must be integers");
        parts.push_back(x.get<long long>());
    }
    return Partition(std::move(parts));
}

/// Matrices travel as arrays of rows of rational strings "p/q".
inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols) {
    require(j.is_array() && j.size() == rows, ErrorKind::ParseError, "matrix has wrong row count");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        require(j[i].is_array() && j[i].size() == cols, ErrorKind::ParseError,
                "matrix has wrong column count");
        for (std::size_t c = 0; c < cols; ++c) {
            require(j[i][c].is_string(), ErrorKind::ParseError, "matrix entries must be strings");
            m(i, c) = rational_from_string(j[i][c].get<std::string>());
        }
    }
    return m;
}

inline json decomposition_to_json(const SlicePair& sp, const std::vector<SliceFactor>& factors) {
    json out;
    out["factors"] = json::array();
    Count total = 1;
    for (const SliceFactor& f : factors) {
        Count c = count_resolutions(f.ambient);
        total *= c;
        out["factors"].push_back(json{{"d", partition_to_json(f.ambient)},
                                      {"dp", partition_to_json(f.base)},
                                      {"N", f.boxes},
                                      {"count", count_to_json(c)}});
    }
    out["total_count"] = count_to_json(total);
    out["slice_dim"] = slice_dim(sp);
    return out;
}

inline json chambers_to_json(const std::vector<Chamber>& chambers) {
    json arr = json::array();
    for (const Chamber& c : chambers)
        arr.push_back(json{{"perm", c.perm}, {"flag_type", c.flag_type}});
    return json{{"chambers", std::move(arr)}};
}

inline json flop_graph_to_json(const FlopGraph& g) {
    json nodes = json::array();
    for (const FlagType& t : g.nodes) nodes.push_back(product_node_label(t));
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

inline json quiver_rep_to_json(const QuiverRep& r) {
    json out;
    out["v"] = r.v;
    out["w"] = r.w;
    auto pack = [](const std::vector<Mat>& ms) {
        json arr = json::array();
        for (const Mat& m : ms) arr.push_back(mat_to_json(m));
        return arr;
    };
    out["A"] = pack(r.A);
    out["B"] = pack(r.B);
    out["Gamma"] = pack(r.Gamma);
    out["Delta"] = pack(r.Delta);
    return out;
}

inline QuiverRep quiver_rep_from_json(const json& j) {
    require(j.is_object() && j.contains("v") && j.contains("w"), ErrorKind::ParseError,
            "quiver rep needs v and w");
    QuiverRep r;
    for (const auto& x : j.at("v")) r.v.push_back(x.get<long long>());
    for (const auto& x : j.at("w")) r.w.push_back(x.get<long long>());
    std::size_t n = r.v.size();
    require(n >= 1 && r.w.size() == n, ErrorKind::ParseError, "bad dimension vectors");
    auto grab = [&](const char* key, std::size_t count) {
        require(j.contains(key) && j.at(key).is_array() && j.at(key).size() == count,
                ErrorKind::ParseError, std::string("bad or missing field ") + key);
        return j.at(key);
    };
    json ja = grab("A", n - 1), jb = grab("B", n - 1), jg = grab("Gamma", n), jd = grab("Delta", n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        r.A.push_back(mat_from_json(ja[i], static_cast<std::size_t>(r.v[i + 1]),
                                    static_cast<std::size_t>(r.v[i])));
        r.B.push_back(mat_from_json(jb[i], static_cast<std::size_t>(r.v[i]),
                                    static_cast<std::size_t>(r.v[i + 1])));
    }
    for (std::size_t k = 0; k < n; ++k) {
        r.Gamma.push_back(mat_from_json(jg[k], static_cast<std::size_t>(r.v[k]),
                                        static_cast<std::size_t>(r.w[k])));
        r.Delta.push_back(mat_from_json(jd[k], static_cast<std::size_t>(r.w[k]),
                                        static_cast<std::size_t>(r.v[k])));
    }
    validate_shapes(r);
    return r;
}

inline json sl2_to_json(const Sl2Triple& t) {
    return json{{"x", mat_to_json(t.x)}, {"y", mat_to_json(t.y)}, {"h", mat_to_json(t.h)}};
}

} // namespace slodowy
