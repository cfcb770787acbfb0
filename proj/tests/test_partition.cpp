#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <algorithm>

#include "slodowy/liealg.hpp"
#include "slodowy/partition.hpp"
#include "slodowy/verify.hpp"

using namespace slodowy;

TEST_CASE("construction enforces the partition shape") {
    CHECK(Partition{4, 4, 2, 1}.total() == 11);
    CHECK(error_kind([] { Partition{1, 2}; }) == ErrorKind::NotAPartition);
    CHECK(error_kind([] { Partition{3, 0}; }) == ErrorKind::NotAPartition);
    CHECK(error_kind([] { Partition(std::vector<long long>{}); }) ==
          ErrorKind::NotAPartition);
}

TEST_CASE("parsing") {
    CHECK(Partition::parse("4,4,2,1") == Partition{4, 4, 2, 1});
    CHECK(Partition::parse("5, 4, 3") == Partition{5, 4, 3});
    CHECK(error_kind([] { Partition::parse("1,2"); }) == ErrorKind::NotAPartition);
    CHECK(error_kind([] { Partition::parse("a,b"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { Partition::parse("3,,1"); }) == ErrorKind::ParseError);
}

TEST_CASE("dual transposes the diagram") {
    CHECK(dual(Partition{4, 4, 2, 1}) == Partition{4, 3, 2, 2});
    CHECK(dual(Partition{1}) == Partition{1});
    CHECK(dual(Partition{5, 4, 3, 1}) == Partition{4, 3, 3, 2, 1});
}

TEST_CASE("orbit-closure order by prefix sums") {
    CHECK(dominated_by(Partition{4, 4, 4, 2, 2, 1, 1}, Partition{5, 4, 3, 3, 2, 1}));
    Partition p{3, 2, 1};
    CHECK(dominated_by(p, p));
    CHECK(dominated_by(Partition{3, 3}, Partition{4, 2}));
    CHECK_FALSE(dominated_by(Partition{4, 2}, Partition{3, 3}));
    // classic incomparable pair: neither direction holds
    CHECK_FALSE(dominated_by(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominated_by(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK(error_kind([] { dominated_by(Partition{2}, Partition{3}); }) ==
          ErrorKind::SizeMismatch);
}

TEST_CASE("orbit dimensions") {
    CHECK(orbit_dim(Partition{2}) == 2);
    CHECK(orbit_dim(Partition{1, 1, 1, 1}) == 0);
    CHECK(orbit_dim(Partition{3, 2}) == 16);

    // independent oracle: rank of ad on the full matrix space
    for (long long n = 2; n <= 6; ++n)
        for (const Partition& d : all_partitions(n)) {
            Mat ad = ad_matrix(jordan_nilpotent(d));
            CHECK(orbit_dim(d) == static_cast<long long>(ad.rank()));
        }
}

TEST_CASE("resolution counts") {
    CHECK(count_resolutions(Partition{3, 2, 1}) == 6);
    CHECK(count_resolutions(Partition{5, 4, 3, 1}) == 60);
    CHECK(count_resolutions(Partition{3, 2}) == 3);
    CHECK(count_resolutions(Partition{1, 1, 1}) == 1);

    // brute force over all rearrangements for duals of width <= 7
    for (long long n = 1; n <= 8; ++n)
        for (const Partition& d : all_partitions(n))
            if (d[0] <= 7) CHECK(count_resolutions(d) == count_resolutions_brute(d));

    // the count leaves 64-bit range without overflow: 21 distinct columns
    Partition staircase{21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
    Count c = count_resolutions(staircase);
    CHECK(c == Count("51090942171709440000")); // 21!
}

TEST_CASE("rendering") {
    CHECK(Partition{2, 1}.diagram(true) == "##\n#");
    CHECK(Partition{2, 1}.diagram() == "██\n█");
    CHECK(Partition::parse(Partition{5, 4, 3, 3, 2, 1}.to_string()) ==
          Partition{5, 4, 3, 3, 2, 1});
}

TEST_CASE("property suite passes") {
    SuiteResult r = partition_suite(2024, 300);
    INFO(r.detail);
    CHECK(r.pass);
}
