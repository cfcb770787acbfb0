#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slodowy/cli.hpp"

using namespace slodowy;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("decompose json golden") {
    RunResult r = run_cli({"decompose", "4,4,4,2,2,1,1", "5,4,3,3,2,1", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["total_count"] == 12);
    CHECK(j["slice_dim"] == 10); // orbit dims 242 - 232; factors contribute 6 + 4
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["d"] == json::array({3, 2, 1}));
    CHECK(j["factors"][0]["dp"] == json::array({2, 2, 1, 1}));
    CHECK(j["factors"][0]["N"] == 6);
    CHECK(j["factors"][0]["count"] == 6);
    CHECK(j["factors"][1]["d"] == json::array({2, 1}));
    CHECK(j["factors"][1]["dp"] == json::array({1, 1, 1}));
    CHECK(j["factors"][1]["count"] == 2);

    // json output is byte-stable across runs
    RunResult again = run_cli({"decompose", "4,4,4,2,2,1,1", "5,4,3,3,2,1", "--format", "json"});
    CHECK(again.out == r.out);

    // frozen schema for the simplest nontrivial pair; the whole nilpotent
    // cone in sl_2 has exactly one resolution
    RunResult tiny = run_cli({"decompose", "1,1", "2", "--format", "json"});
    CHECK(json::parse(tiny.out) ==
          json::parse(R"({"factors": [{"N": 2, "count": 1, "d": [2], "dp": [1, 1]}],
                          "slice_dim": 2, "total_count": 1})"));
}

TEST_CASE("decompose methods agree and text mode renders diagrams") {
    for (const char* m : {"young", "quiver", "both"}) {
        RunResult r = run_cli({"decompose", "5,3,3,2", "5,4,3,1", "--method", m});
        CHECK(r.code == 0);
        CHECK(r.out.find("factor 1") != std::string::npos);
        CHECK(r.out.find("total resolutions: 3") != std::string::npos);
    }
    RunResult ascii = run_cli({"decompose", "5,3,3,2", "5,4,3,1", "--ascii"});
    CHECK(ascii.out.find("###\n##") != std::string::npos);
}

TEST_CASE("count verbs") {
    CHECK(run_cli({"count", "5,4,3,1"}).out == "60\n");
    CHECK(run_cli({"count", "3,2,1"}).out == "6\n");
    CHECK(run_cli({"count-slice", "4,4,4,2,2,1,1", "5,4,3,3,2,1"}).out == "12\n");
    CHECK(run_cli({"count-slice", "5,3,3,2", "5,4,3,1"}).out == "3\n");
}

TEST_CASE("errors carry the violated precondition and exit 1") {
    RunResult r = run_cli({"decompose", "3,3", "2,2,2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotNested") != std::string::npos);

    RunResult mism = run_cli({"leq", "2", "3"});
    CHECK(mism.code == 1);
    CHECK(mism.err.find("SizeMismatch") != std::string::npos);

    RunResult bad = run_cli({"count", "1,2,3"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotAPartition") != std::string::npos);
}

TEST_CASE("unknown verbs and flags are rejected with usage") {
    RunResult verb = run_cli({"frobnicate", "1,1"});
    CHECK(verb.code != 0);
    RunResult flag = run_cli({"count", "2,1", "--frobnicate"});
    CHECK(flag.code != 0);
    RunResult nothing = run_cli({});
    CHECK(nothing.code != 0);
    RunResult badfmt = run_cli({"decompose", "1,1", "2", "--format", "dot"});
    CHECK(badfmt.code != 0);
}

TEST_CASE("chamber listings refuse factorial blowups") {
    // twelve distinct columns would mean 12! chambers
    RunResult wide = run_cli({"chambers", "12,11,10,9,8,7,6,5,4,3,2,1"});
    CHECK(wide.code == 1);
    CHECK(wide.err.find("m > 8") != std::string::npos);
    // the quotient graph stays available
    RunResult flops = run_cli({"flops", "5,1,1,1,1,1"});
    CHECK(flops.code == 0);
}

TEST_CASE("dual and leq") {
    RunResult r = run_cli({"dual", "4,4,2,1"});
    CHECK(r.out.find("4,3,2,2") == 0);
    RunResult a = run_cli({"dual", "2,1", "--ascii"});
    CHECK(a.out.find("##\n#") != std::string::npos);
    CHECK(run_cli({"leq", "4,4,4,2,2,1,1", "5,4,3,3,2,1"}).out == "true\n");
    CHECK(run_cli({"leq", "5,4,3,3,2,1", "4,4,4,2,2,1,1"}).out == "false\n");
}

TEST_CASE("dimensions") {
    CHECK(run_cli({"dim", "3,2"}).out == "16\n");
    CHECK(run_cli({"dim", "2,2,1", "3,2"}).out == "4\n");
    RunResult sampled = run_cli({"dim", "2,2,1", "3,2", "--trials", "400", "--seed", "3"});
    CHECK(sampled.out.find("sampled tangent dimension: 4") != std::string::npos);
}

TEST_CASE("chambers and flops") {
    RunResult located = run_cli({"chambers", "3,2,1", "--locate", "1,1"});
    CHECK(located.out == "3,2,1\n");
    RunResult upper = run_cli({"chambers", "3,2,1", "--locate", "-1,3"});
    CHECK(upper.out == "2,3,1\n");
    RunResult wall = run_cli({"chambers", "3,2,1", "--locate", "0,0"});
    CHECK(wall.out == "WALL\n");
    RunResult frac = run_cli({"chambers", "3,2,1", "--locate", "1/2,1/3"});
    CHECK(frac.out == "3,2,1\n");

    RunResult listed = run_cli({"chambers", "3,2,1", "--format", "json"});
    json j = json::parse(listed.out);
    CHECK(j["chambers"].size() == 6);

    RunResult slice = run_cli({"chambers", "4,4,4,2,2,1,1", "5,4,3,3,2,1"});
    CHECK(slice.out.find("product: 12 resolutions") != std::string::npos);

    RunResult dot = run_cli({"flops", "3,2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph flops {") == 0);
    CHECK(dot.out.find("\"2,1,2\"") != std::string::npos);

    RunResult adjacency = run_cli({"chambers", "3,2", "--format", "dot"});
    CHECK(adjacency.out.find("graph chambers {") == 0);
}

TEST_CASE("quiver sample and check round trip through json") {
    RunResult sample = run_cli({"quiver-sample", "3,2,1", "--seed", "7", "--format", "json"});
    CHECK(sample.code == 0);
    RunResult again = run_cli({"quiver-sample", "3,2,1", "--seed", "7", "--format", "json"});
    CHECK(sample.out == again.out); // deterministic for a fixed seed

    RunResult check = run_cli({"quiver-check", "-"}, sample.out);
    CHECK(check.code == 0);
    bool reported = check.out.find("on_zero_fiber: true") != std::string::npos;
    CHECK(reported);

    RunResult reflected = run_cli({"quiver-check", "-", "--reflect", "1"}, sample.out);
    CHECK(reflected.code == 0);
    CHECK(reflected.out.find("reflected_dims") != std::string::npos);

    RunResult garbage = run_cli({"quiver-check", "-"}, "not json at all");
    CHECK(garbage.code == 1);
    CHECK(garbage.err.find("ParseError") != std::string::npos);

    // a point off the zero fiber is reported and rejected
    std::string off = R"({"v": [1], "w": [2],
                          "A": [], "B": [],
                          "Gamma": [[["1", "0"]]],
                          "Delta": [[["1"], ["0"]]]})";
    RunResult bad = run_cli({"quiver-check", "-"}, off);
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotOnFiber") != std::string::npos);
    CHECK(bad.out.find("on_zero_fiber: false") != std::string::npos);
}

TEST_CASE("sl2 outputs the triple and its checks") {
    RunResult r = run_cli({"sl2", "2,1", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["slice_dim"] == 4);
    CHECK(j["transversal"] == true);
    CHECK(j["x"][0][1] == "1");

    RunResult text = run_cli({"sl2", "3"});
    CHECK(text.out.find("transversal: yes") != std::string::npos);

    RunResult degenerate = run_cli({"sl2", "1,1"});
    CHECK(degenerate.code == 1);
    CHECK(degenerate.err.find("DegenerateAmbient") != std::string::npos);
}

TEST_CASE("every library operation is reachable from some verb") {
    const std::set<std::string> operations = {
        "parse",          "dual",
        "render",         "dominated_by",
        "orbit_dim",      "count_resolutions",
        "make_slice_pair", "dimension_vectors",
        "tilde_vectors",  "decompose_quiver",
        "decompose_young", "count_slice_resolutions",
        "slice_dim",      "enumerate_chambers",
        "locate",         "flop_graph",
        "slice_chambers", "moment_map",
        "is_one_stable",  "all_A_surjective",
        "theta",          "from_flag",
        "nilpotent_partition", "reflect",
        "jordan_nilpotent", "sl2_completion",
        "slodowy_slice_basis", "transversality_check",
        "slice_sample_dim", "verify_suites",
    };
    std::set<std::string> reached;
    std::set<std::string> verbs;
    for (const auto& v : cli::dispatch_table()) {
        verbs.insert(v.verb);
        for (const char* op : v.operations) reached.insert(op);
    }
    const std::set<std::string> expected_verbs = {
        "dual",   "leq",       "dim",          "count",        "decompose", "count-slice",
        "chambers", "flops",   "quiver-sample", "quiver-check", "sl2",       "verify"};
    CHECK(verbs == expected_verbs);
    for (const std::string& op : operations) {
        INFO("operation not reachable: " << op);
        CHECK(reached.count(op) == 1);
    }
}
