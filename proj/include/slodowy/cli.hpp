#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "slodowy/chamber.hpp"
#include "slodowy/error.hpp"
#include "slodowy/json_io.hpp"
#include "slodowy/liealg.hpp"
#include "slodowy/partition.hpp"
#include "slodowy/quiver.hpp"
#include "slodowy/slice.hpp"
#include "slodowy/verify.hpp"

namespace slodowy::cli {

/// Which library operations each verb reaches; kept as data so a test can
/// assert that everything public is wired to the command line.
struct VerbInfo {
    const char* verb;
    std::vector<const char*> operations;
};

inline const std::vector<VerbInfo>& dispatch_table() {
    static const std::vector<VerbInfo> table = {
        {"dual", {"parse", "dual", "render"}},
        {"leq", {"parse", "dominated_by"}},
        {"dim", {"parse", "orbit_dim", "make_slice_pair", "slice_dim", "slice_sample_dim"}},
        {"count", {"parse", "count_resolutions"}},
        {"decompose",
         {"parse", "make_slice_pair", "dimension_vectors", "decompose_quiver", "decompose_young",
          "render"}},
        {"count-slice", {"parse", "make_slice_pair", "count_slice_resolutions"}},
        {"chambers", {"parse", "enumerate_chambers", "locate", "slice_chambers"}},
        {"flops", {"parse", "flop_graph"}},
        {"quiver-sample",
         {"parse", "tilde_vectors", "from_flag", "moment_map", "all_A_surjective"}},
        {"quiver-check",
         {"moment_map", "is_one_stable", "all_A_surjective", "theta", "nilpotent_partition",
          "reflect"}},
        {"sl2",
         {"parse", "jordan_nilpotent", "sl2_completion", "slodowy_slice_basis",
          "transversality_check"}},
        {"verify", {"verify_suites"}},
    };
    return table;
}

namespace detail {

inline std::string format_matrix(const Mat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) os << to_string(m(i, j)) << ' ';
        os << "]\n";
    }
    if (m.rows() == 0) os << "[]\n";
    return os.str();
}

inline std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) out.push_back(rational_from_string(tok));
    if (out.empty()) fail(ErrorKind::ParseError, "empty coordinate list");
    return out;
}

inline json read_json_input(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "input is not valid JSON");
    return j;
}

inline void print_decomposition_text(std::ostream& out, const SlicePair& sp,
                                     const std::vector<SliceFactor>& factors, bool ascii) {
    DimVectors dv = dimension_vectors(sp);
    out << "pair: base " << sp.base().to_string() << " inside " << sp.ambient().to_string()
        << "  (N = " << sp.boxes() << ")\n";
    out << "v =";
    for (long long x : dv.v) out << ' ' << x;
    out << "\nw =";
    for (long long x : dv.w) out << ' ' << x;
    out << "\nslice dimension: " << slice_dim(sp) << "\n";
    if (factors.empty()) {
        out << "decomposition: point (no factors)\n";
    } else {
        Count total = 1;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const SliceFactor& f = factors[k];
            Count c = count_resolutions(f.ambient);
            total *= c;
            out << "factor " << (k + 1) << ": base " << f.base.to_string() << " inside "
                << f.ambient.to_string() << "  (N = " << f.boxes << ", vertices "
                << f.first_vertex << ".." << f.last_vertex << ", resolutions " << to_string(c)
                << ")\n";
            out << "ambient:\n" << f.ambient.diagram(ascii) << "\n";
            out << "base:\n" << f.base.diagram(ascii) << "\n";
        }
        out << "total resolutions: " << to_string(total) << "\n";
    }
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"computations with nilpotent orbit slices, their decompositions,\n"
                 "chamber structures and quiver models"};
    app.require_subcommand(1);

    std::string fmt = "text";
    std::string method = "both";
    std::uint64_t seed = 12345;
    long long trials = 0;
    bool ascii = false;
    std::string arg1, arg2, locate_at, input_path = "-";
    long long reflect_at = 0;

    auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
        sub->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };

    CLI::App* c_dual = app.add_subcommand("dual", "transpose a Young diagram");
    c_dual->add_option("partition", arg1, "comma-separated partition")->required();
    add_format(c_dual, {"text", "json"});
    c_dual->add_flag("--ascii", ascii, "draw diagrams with '#'");

    CLI::App* c_leq = app.add_subcommand("leq", "orbit-closure order: is the first partition "
                                                "below the second?");
    c_leq->add_option("lower", arg1)->required();
    c_leq->add_option("upper", arg2)->required();
    add_format(c_leq, {"text", "json"});

    CLI::App* c_dim = app.add_subcommand(
        "dim", "orbit dimension, or slice dimension for a pair (base first)");
    c_dim->add_option("first", arg1)->required();
    c_dim->add_option("second", arg2);
    c_dim->add_option("--trials", trials, "also sample the slice tangent dimension");
    c_dim->add_option("--seed", seed, "sampling seed");
    add_format(c_dim, {"text", "json"});

    CLI::App* c_count = app.add_subcommand("count", "number of crepant resolutions of the "
                                                    "orbit closure");
    c_count->add_option("partition", arg1)->required();
    add_format(c_count, {"text", "json"});

    CLI::App* c_dec = app.add_subcommand(
        "decompose", "split a slice into smaller slices; arguments are base then ambient");
    c_dec->add_option("base", arg1, "base-point partition (the smaller orbit)")->required();
    c_dec->add_option("ambient", arg2, "ambient partition")->required();
    c_dec->add_option("--method", method, "young, quiver, or both (cross-checked)")
        ->check(CLI::IsMember({"young", "quiver", "both"}))
        ->capture_default_str();
    add_format(c_dec, {"text", "json"});
    c_dec->add_flag("--ascii", ascii, "draw diagrams with '#'");

    CLI::App* c_cs = app.add_subcommand("count-slice", "number of crepant resolutions of a "
                                                       "slice; arguments base then ambient");
    c_cs->add_option("base", arg1)->required();
    c_cs->add_option("ambient", arg2)->required();
    add_format(c_cs, {"text", "json"});

    CLI::App* c_ch = app.add_subcommand(
        "chambers", "chamber structure of an orbit closure, or of a slice for a pair");
    c_ch->add_option("first", arg1)->required();
    c_ch->add_option("second", arg2);
    c_ch->add_option("--locate", locate_at, "rational character coordinates, e.g. 1,1 or -1,3");
    add_format(c_ch, {"text", "json", "dot"});

    CLI::App* c_fl = app.add_subcommand("flops", "flop adjacency graph of the resolutions");
    c_fl->add_option("partition", arg1)->required();
    add_format(c_fl, {"text", "json", "dot"});

    CLI::App* c_qs = app.add_subcommand("quiver-sample", "random stable quiver point over an "
                                                         "orbit closure");
    c_qs->add_option("partition", arg1)->required();
    c_qs->add_option("--seed", seed, "sampling seed")->capture_default_str();
    add_format(c_qs, {"json", "text"});

    CLI::App* c_qc = app.add_subcommand("quiver-check", "verify a quiver point from JSON "
                                                        "(file path or - for stdin)");
    c_qc->add_option("input", input_path, "JSON file or -")->capture_default_str();
    c_qc->add_option("--reflect", reflect_at, "also reflect at this vertex (1-based)");
    add_format(c_qc, {"text", "json"});

    CLI::App* c_sl2 = app.add_subcommand("sl2", "sl2-triple through the Jordan representative");
    c_sl2->add_option("partition", arg1)->required();
    add_format(c_sl2, {"text", "json"});

    CLI::App* c_ver = app.add_subcommand("verify", "run the randomized property suites");
    c_ver->add_option("--seed", seed, "base seed")->capture_default_str();
    c_ver->add_option("--trials", trials,
                      "decomposition trials; quiver runs trials/10, reflections trials/50");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back("slodowy");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (c_dual->parsed()) {
            Partition p = Partition::parse(arg1);
            Partition q = dual(p);
            if (fmt == "json") {
                out << json{{"dual", partition_to_json(q)}}.dump(2) << "\n";
            } else {
                out << q.to_string() << "\n" << q.diagram(ascii) << "\n";
            }
        } else if (c_leq->parsed()) {
            bool leq = dominated_by(Partition::parse(arg1), Partition::parse(arg2));
            if (fmt == "json")
                out << json{{"dominated", leq}}.dump(2) << "\n";
            else
                out << (leq ? "true" : "false") << "\n";
        } else if (c_dim->parsed()) {
            if (arg2.empty()) {
                long long dim = orbit_dim(Partition::parse(arg1));
                if (fmt == "json")
                    out << json{{"orbit_dim", dim}}.dump(2) << "\n";
                else
                    out << dim << "\n";
            } else {
                SlicePair sp = make_slice_pair(Partition::parse(arg1), Partition::parse(arg2));
                long long dim = slice_dim(sp);
                json j{{"slice_dim", dim}};
                std::string sampled_line;
                if (trials > 0) {
                    SampleDimResult sr = slice_sample_dim(sp, trials, seed);
                    j["sampled_dim"] = sr.found ? json(sr.dim) : json(nullptr);
                    j["exact_type_samples"] = sr.exact_hits;
                    sampled_line = sr.found ? "sampled tangent dimension: " +
                                                  std::to_string(sr.dim) + " (from " +
                                                  std::to_string(sr.exact_hits) + " samples)\n"
                                            : "sampling exhausted: no point of the ambient type "
                                              "found in " +
                                                  std::to_string(sr.tried) + " candidates\n";
                }
                if (fmt == "json")
                    out << j.dump(2) << "\n";
                else
                    out << dim << "\n" << sampled_line;
            }
        } else if (c_count->parsed()) {
            Count c = count_resolutions(Partition::parse(arg1));
            if (fmt == "json")
                out << json{{"count", count_to_json(c)}}.dump(2) << "\n";
            else
                out << to_string(c) << "\n";
        } else if (c_dec->parsed()) {
            SlicePair sp = make_slice_pair(Partition::parse(arg1), Partition::parse(arg2));
            std::vector<SliceFactor> factors;
            if (method == "young") {
                factors = decompose_young(sp);
            } else if (method == "quiver") {
                factors = decompose_quiver(sp);
            } else {
                factors = decompose_quiver(sp);
                std::vector<SliceFactor> other = decompose_young(sp);
                require(factors == other, ErrorKind::InternalInconsistency,
                        "the two decomposition routes disagree");
            }
            if (fmt == "json")
                out << decomposition_to_json(sp, factors).dump(2) << "\n";
            else
                detail::print_decomposition_text(out, sp, factors, ascii);
        } else if (c_cs->parsed()) {
            SlicePair sp = make_slice_pair(Partition::parse(arg1), Partition::parse(arg2));
            Count c = count_slice_resolutions(sp);
            if (fmt == "json")
                out << json{{"count", count_to_json(c)}}.dump(2) << "\n";
            else
                out << to_string(c) << "\n";
        } else if (c_ch->parsed()) {
            if (!arg2.empty()) {
                SlicePair sp = make_slice_pair(Partition::parse(arg1), Partition::parse(arg2));
                SliceChambers sc = slice_chambers(sp);
                if (fmt == "dot") {
                    out << flop_graph_dot(sc.product, "slice_flops");
                } else if (fmt == "json") {
                    json jf = json::array();
                    for (std::size_t k = 0; k < sc.factors.size(); ++k)
                        jf.push_back(json{{"d", partition_to_json(sc.factors[k].ambient)},
                                          {"dp", partition_to_json(sc.factors[k].base)},
                                          {"flag_types", flop_graph_to_json(
                                                             sc.factor_graphs[k])["nodes"]}});
                    out << json{{"factors", jf},
                                {"product", flop_graph_to_json(sc.product)}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "factors: " << sc.factors.size() << "\n";
                    for (std::size_t k = 0; k < sc.factors.size(); ++k)
                        out << "factor " << (k + 1) << ": "
                            << sc.factor_graphs[k].nodes.size() << " resolutions, "
                            << sc.factor_graphs[k].edges.size() << " flops\n";
                    out << "product: " << sc.product.nodes.size() << " resolutions, "
                        << sc.product.edges.size() << " flops\n";
                }
            } else {
                Partition d = Partition::parse(arg1);
                if (!locate_at.empty()) {
                    LocateResult lr = locate(detail::parse_rational_list(locate_at), d);
                    if (std::holds_alternative<Wall>(lr)) {
                        if (fmt == "json")
                            out << json{{"wall", true}}.dump(2) << "\n";
                        else
                            out << "WALL\n";
                    } else {
                        const Chamber& c = std::get<Chamber>(lr);
                        if (fmt == "json")
                            out << json{{"perm", c.perm}, {"flag_type", c.flag_type}}.dump(2)
                                << "\n";
                        else
                            out << flag_type_label(c.flag_type) << "\n";
                    }
                } else if (fmt == "dot") {
                    require(dual(d).length() <= 8, ErrorKind::DimensionMismatch,
                            "refusing to enumerate m! chambers for m > 8");
                    out << chamber_adjacency_dot(d);
                } else {
                    require(dual(d).length() <= 8, ErrorKind::DimensionMismatch,
                            "refusing to enumerate m! chambers for m > 8");
                    std::vector<Chamber> chambers = enumerate_chambers(d);
                    if (fmt == "json") {
                        out << chambers_to_json(chambers).dump(2) << "\n";
                    } else {
                        for (const Chamber& c : chambers) {
                            out << "sigma(";
                            for (std::size_t i = 0; i < c.perm.size(); ++i)
                                out << (i ? "," : "") << c.perm[i];
                            out << ") -> " << flag_type_label(c.flag_type) << "\n";
                        }
                    }
                }
            }
        } else if (c_fl->parsed()) {
            FlopGraph g = flop_graph(Partition::parse(arg1));
            if (fmt == "dot") {
                out << flop_graph_dot(g);
            } else if (fmt == "json") {
                out << flop_graph_to_json(g).dump(2) << "\n";
            } else {
                out << g.nodes.size() << " resolutions, " << g.edges.size() << " flops\n";
                for (auto [u, v] : g.edges)
                    out << product_node_label(g.nodes[static_cast<std::size_t>(u)]) << " -- "
                        << product_node_label(g.nodes[static_cast<std::size_t>(v)]) << "\n";
            }
        } else if (c_qs->parsed()) {
            Partition d = Partition::parse(arg1);
            require(!is_ones(d), ErrorKind::DegenerateAmbient, "orbit closure is a point");
            Rng rng(seed);
            FlagPoint fp = random_incidence_pair(dual(d).parts(), rng);
            QuiverRep r = from_flag(fp.x, fp.subspaces);
            require(r.v == tilde_vectors(d).v, ErrorKind::InternalInconsistency,
                    "sampled dimensions are not the full-orbit ones");
            if (fmt == "json") {
                out << quiver_rep_to_json(r).dump(2) << "\n";
            } else {
                out << "dims:";
                for (long long x : r.v) out << ' ' << x;
                out << "\nframing: " << r.w[0] << "\n";
                out << "stable: " << (all_A_surjective(r) ? "yes" : "no") << "\n";
                out << "type of x: "
                    << nilpotent_partition(r.Delta[0] * r.Gamma[0]).to_string() << "\n";
            }
        } else if (c_qc->parsed()) {
            QuiverRep r = quiver_rep_from_json(detail::read_json_input(input_path, in));
            bool fiber = on_zero_fiber(r);
            json report{{"on_zero_fiber", fiber}};
            bool tilde = is_tilde_shape(r);
            report["tilde_shape"] = tilde;
            if (fiber) report["one_stable"] = is_one_stable(r);
            if (tilde) {
                report["all_A_surjective"] = all_A_surjective(r);
                Mat x = r.Delta[0] * r.Gamma[0];
                if ((x.pow(x.rows())).is_zero())
                    report["type"] = partition_to_json(nilpotent_partition(x));
                if (fiber && all_A_surjective(r)) {
                    FlagPoint fp = theta(r);
                    json dims = json::array();
                    for (const Mat& u : fp.subspaces) dims.push_back(u.cols());
                    report["flag_dims"] = dims;
                }
            }
            if (reflect_at > 0) {
                QuiverRep refl = reflect(r, static_cast<std::size_t>(reflect_at));
                report["reflected_dims"] = refl.v;
                if (fmt == "json") report["reflected"] = quiver_rep_to_json(refl);
            }
            if (fmt == "json") {
                out << report.dump(2) << "\n";
            } else {
                for (auto& [k, v] : report.items()) out << k << ": " << v.dump() << "\n";
            }
            require(fiber, ErrorKind::NotOnFiber, "moment map does not vanish");
        } else if (c_sl2->parsed()) {
            Partition d = Partition::parse(arg1);
            Sl2Triple t = sl2_completion(d);
            long long ker_dim = static_cast<long long>(slodowy_slice_basis(t).size());
            bool transversal = transversality_check(t, d);
            if (fmt == "json") {
                json j = sl2_to_json(t);
                j["slice_dim"] = ker_dim;
                j["transversal"] = transversal;
                out << j.dump(2) << "\n";
            } else {
                out << "x =\n" << detail::format_matrix(t.x);
                out << "y =\n" << detail::format_matrix(t.y);
                out << "h =\n" << detail::format_matrix(t.h);
                out << "slice dimension: " << ker_dim << "\n";
                out << "transversal: " << (transversal ? "yes" : "no") << "\n";
            }
        } else if (c_ver->parsed()) {
            long long t = trials > 0 ? trials : 10000;
            auto suites = run_all_suites(seed, t, std::max<long long>(t / 10, 1),
                                         std::max<long long>(t / 50, 1));
            bool all_pass = true;
            for (const SuiteResult& s : suites) {
                out << (s.pass ? "ok   " : "FAIL ") << s.name << "  (" << s.checks
                    << " checks)";
                if (!s.pass) out << "  " << s.detail;
                out << "\n";
                all_pass = all_pass && s.pass;
            }
            out << (all_pass ? "all suites passed\n" : "suite failures detected\n");
            if (!all_pass) return 2;
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.kind() == ErrorKind::InternalInconsistency ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace slodowy::cli
