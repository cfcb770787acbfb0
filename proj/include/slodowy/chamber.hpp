#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "slodowy/error.hpp"
#include "slodowy/partition.hpp"
#include "slodowy/rational.hpp"
#include "slodowy/slice.hpp"

namespace slodowy {

/// A Weyl/GIT chamber on character space, labeled by the permutation sigma
/// (1-based images) and the flag type it induces: the composition
/// (a_{sigma(1)}, ..., a_{sigma(m)}) rearranging the dual partition.
struct Chamber {
    std::vector<int> perm;
    std::vector<long long> flag_type;

    bool operator==(const Chamber& o) const {
        return perm == o.perm && flag_type == o.flag_type;
    }
};

struct Wall {
    bool operator==(const Wall&) const { return true; }
};

using LocateResult = std::variant<Wall, Chamber>;

using FlagType = std::vector<long long>;

inline std::string flag_type_label(const FlagType& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

/// All m! chambers, in lexicographic order of the permutation.
inline std::vector<Chamber> enumerate_chambers(const Partition& d) {
    require(!is_ones(d), ErrorKind::DegenerateAmbient, "orbit closure is a point");
    std::vector<long long> a = dual(d).parts();
    std::size_t m = a.size();
    std::vector<int> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i + 1);
    std::vector<Chamber> out;
    do {
        FlagType t(m);
        for (std::size_t i = 0; i < m; ++i) t[i] = a[static_cast<std::size_t>(perm[i] - 1)];
        out.push_back(Chamber{perm, t});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Chamber containing a character point given in the fundamental-weight
/// basis, or Wall. Level coordinates z_1..z_m are fixed by z_i - z_{i+1} =
/// chi_i and z_m = 0; the chamber is the permutation sorting z strictly
/// decreasingly.
inline LocateResult locate(const std::vector<Rational>& chi, const Partition& d) {
    require(!is_ones(d), ErrorKind::DegenerateAmbient, "orbit closure is a point");
    std::vector<long long> a = dual(d).parts();
    std::size_t m = a.size();
    require(chi.size() == m - 1, ErrorKind::DimensionMismatch,
            "character point has wrong number of coordinates");
    std::vector<Rational> z(m);
    z[m - 1] = 0;
    for (std::size_t i = m - 1; i-- > 0;) z[i] = z[i + 1] + chi[i];

    std::vector<int> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i + 1);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
        return z[static_cast<std::size_t>(p - 1)] > z[static_cast<std::size_t>(q - 1)];
    });
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (z[static_cast<std::size_t>(order[i] - 1)] ==
            z[static_cast<std::size_t>(order[i + 1] - 1)])
            return Wall{};
    FlagType t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = a[static_cast<std::size_t>(order[i] - 1)];
    return Chamber{order, t};
}

/// Resolutions and flop adjacency: nodes are the distinct flag types, with an
/// edge whenever two types differ by swapping adjacent unequal entries.
struct FlopGraph {
    std::vector<FlagType> nodes;
    std::vector<std::pair<int, int>> edges; // indices into nodes, first < second

    std::size_t degree(std::size_t node) const {
        std::size_t deg = 0;
        for (auto [u, v] : edges)
            if (u == static_cast<int>(node) || v == static_cast<int>(node)) ++deg;
        return deg;
    }

    bool connected() const {
        if (nodes.empty()) return true;
        std::vector<bool> seen(nodes.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (auto [x, y] : edges) {
                std::size_t v = nodes.size();
                if (x == static_cast<int>(u)) v = static_cast<std::size_t>(y);
                if (y == static_cast<int>(u)) v = static_cast<std::size_t>(x);
                if (v < nodes.size() && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
};

/// Distinct rearrangements of the dual partition, lexicographically
/// increasing. Never materializes all m! permutations.
inline std::vector<FlagType> distinct_flag_types(const Partition& d) {
    std::vector<long long> a = dual(d).parts();
    std::sort(a.begin(), a.end());
    std::vector<FlagType> out;
    do {
        out.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

inline FlopGraph flop_graph(const Partition& d) {
    require(!is_ones(d), ErrorKind::DegenerateAmbient, "orbit closure is a point");
    FlopGraph g;
    g.nodes = distinct_flag_types(d);
    require(Count(g.nodes.size()) == count_resolutions(d), ErrorKind::InternalInconsistency,
            "flag type count does not match the resolution count");
    std::map<FlagType, int> index;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        FlagType t = g.nodes[i];
        for (std::size_t p = 0; p + 1 < t.size(); ++p) {
            if (t[p] == t[p + 1]) continue;
            std::swap(t[p], t[p + 1]);
            int j = index.at(t);
            edges.insert({std::min<int>(static_cast<int>(i), j), std::max<int>(static_cast<int>(i), j)});
            std::swap(t[p], t[p + 1]);
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

/// Chamber data of a slice through its decomposition: one flop graph per
/// factor plus their product. Nodes of the product graph are tuples of factor
/// flag types; edges change a single coordinate along a factor edge.
struct SliceChambers {
    std::vector<SliceFactor> factors;
    std::vector<FlopGraph> factor_graphs;
    FlopGraph product;
};

inline SliceChambers slice_chambers(const SlicePair& sp) {
    SliceChambers sc;
    if (sp.base() != sp.ambient()) {
        sc.factors = decompose_quiver(sp);
        for (const SliceFactor& f : sc.factors) sc.factor_graphs.push_back(flop_graph(f.ambient));
    }

    // product graph over tuples of factor node indices, odometer order
    std::size_t r = sc.factor_graphs.size();
    std::vector<std::size_t> sizes(r);
    std::size_t total = 1;
    for (std::size_t f = 0; f < r; ++f) {
        sizes[f] = sc.factor_graphs[f].nodes.size();
        total *= sizes[f];
    }
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur(r, 0);
    for (std::size_t k = 0; k < total; ++k) {
        tuples.push_back(cur);
        for (std::size_t f = r; f-- > 0;) {
            if (++cur[f] < sizes[f]) break;
            cur[f] = 0;
        }
    }
    std::map<std::vector<std::size_t>, int> index;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        index[tuples[k]] = static_cast<int>(k);
        FlagType joined;
        for (std::size_t f = 0; f < r; ++f) {
            const FlagType& t = sc.factor_graphs[f].nodes[tuples[k][f]];
            if (f) joined.push_back(-1); // separator between factor labels
            joined.insert(joined.end(), t.begin(), t.end());
        }
        sc.product.nodes.push_back(joined);
    }
    std::set<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        // edges along one coordinate
        for (std::size_t f = 0; f < r; ++f) {
            for (auto [u, v] : sc.factor_graphs[f].edges) {
                if (tuples[k][f] == static_cast<std::size_t>(u)) {
                    std::vector<std::size_t> nb = tuples[k];
                    nb[f] = static_cast<std::size_t>(v);
                    int j = index.at(nb);
                    edges.insert({std::min<int>(static_cast<int>(k), j),
                                  std::max<int>(static_cast<int>(k), j)});
                }
            }
        }
    }
    sc.product.edges.assign(edges.begin(), edges.end());
    return sc;
}

/// Label for a product-graph node: factor labels joined by '|'.
inline std::string product_node_label(const FlagType& joined) {
    if (joined.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < joined.size(); ++i) {
        if (joined[i] == -1) {
            s += '|';
        } else {
            if (i && joined[i - 1] != -1) s += ',';
            s += std::to_string(joined[i]);
        }
    }
    return s;
}

inline std::string flop_graph_dot(const FlopGraph& g, const std::string& name = "flops") {
    std::string s = "graph " + name + " {\n";
    for (const FlagType& t : g.nodes) s += "  \"" + product_node_label(t) + "\";\n";
    for (auto [u, v] : g.edges)
        s += "  \"" + product_node_label(g.nodes[static_cast<std::size_t>(u)]) + "\" -- \"" +
             product_node_label(g.nodes[static_cast<std::size_t>(v)]) + "\";\n";
    s += "}\n";
    return s;
}

/// Adjacency graph of all m! Weyl chambers (nodes labeled by flag type,
/// edges between chambers sharing a wall).
inline std::string chamber_adjacency_dot(const Partition& d) {
    std::vector<Chamber> chambers = enumerate_chambers(d);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < chambers.size(); ++i)
        index[chambers[i].perm] = static_cast<int>(i);
    std::string s = "graph chambers {\n";
    for (const Chamber& c : chambers) {
        std::string perm;
        for (std::size_t i = 0; i < c.perm.size(); ++i) {
            if (i) perm += ',';
            perm += std::to_string(c.perm[i]);
        }
        s += "  \"s" + perm + "\" [label=\"" + flag_type_label(c.flag_type) + "\"];\n";
    }
    std::set<std::pair<int, int>> edges;
    for (const Chamber& c : chambers) {
        for (std::size_t p = 0; p + 1 < c.perm.size(); ++p) {
            std::vector<int> q = c.perm;
            std::swap(q[p], q[p + 1]);
            int i = index.at(c.perm), j = index.at(q);
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    for (auto [u, v] : edges) {
        std::string pu, pv;
        for (std::size_t i = 0; i < chambers[static_cast<std::size_t>(u)].perm.size(); ++i) {
            if (i) pu += ',';
            pu += std::to_string(chambers[static_cast<std::size_t>(u)].perm[i]);
        }
        for (std::size_t i = 0; i < chambers[static_cast<std::size_t>(v)].perm.size(); ++i) {
            if (i) pv += ',';
            pv += std::to_string(chambers[static_cast<std::size_t>(v)].perm[i]);
        }
        s += "  \"s" + pu + "\" -- \"s" + pv + "\";\n";
    }
    s += "}\n";
    return s;
}

} // namespace slodowy
