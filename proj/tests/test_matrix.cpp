#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slodowy/matrix.hpp"
#include "slodowy/rng.hpp"

using namespace slodowy;

TEST_CASE("rref and rank on hand-checked matrices") {
    Mat a{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    CHECK(a.rank() == 2);

    Mat id = Mat::identity(4);
    CHECK(id.rank() == 4);
    CHECK(Mat::zero(3, 5).rank() == 0);

    Mat b{{0, 1}, {1, 0}};
    Mat c = b;
    auto piv = c.rref();
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(c == Mat::identity(2));
}

TEST_CASE("nullspace columns are killed and complete") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(1, 6));
        std::size_t c = static_cast<std::size_t>(rng.int_in(1, 6));
        Mat a = Mat::random_int(r, c, rng, -5, 5);
        Mat k = a.nullspace();
        CHECK((a * k).is_zero());
        CHECK(k.cols() + a.rank() == c);
        CHECK(k.rank() == k.cols());
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.int_in(1, 5));
        Mat a = Mat::random_int(r, c, rng, -4, 4);
        Mat x = Mat::random_int(c, 2, rng, -4, 4);
        Mat b = a * x;
        auto sol = Mat::solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }

    Mat a{{1, 0}, {0, 0}};
    Mat b{{0}, {1}};
    CHECK_FALSE(Mat::solve(a, b).has_value());
}

TEST_CASE("inverse round trip") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        Mat g = Mat::random_invertible(n, rng);
        auto inv = g.inverse();
        REQUIRE(inv.has_value());
        CHECK(g * *inv == Mat::identity(n));
        CHECK(*inv * g == Mat::identity(n));
    }
    CHECK_FALSE(Mat{{1, 1}, {1, 1}}.inverse().has_value());
}

TEST_CASE("subspace predicates") {
    Mat u{{1, 0}, {0, 1}, {0, 0}};
    Mat v{{1}, {1}, {0}};
    Mat w{{0}, {0}, {1}};
    CHECK(subspace_contains(u, v));
    CHECK_FALSE(subspace_contains(u, w));
    CHECK(subspace_equal(u, Mat{{1, 1}, {1, -1}, {0, 0}}));
    CHECK(intersection_dim(u, Mat::hstack(v, w)) == 1);
}

TEST_CASE("pivot complement completes a basis deterministically") {
    Mat u{{1, 0}, {0, 0}, {0, 1}};
    Mat c = pivot_complement(u);
    REQUIRE(c.cols() == 1);
    CHECK(c(1, 0) == 1);
    CHECK(Mat::hstack(u, c).rank() == 3);

    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        std::size_t k = static_cast<std::size_t>(rng.int_in(0, static_cast<long long>(n)));
        Mat m = Mat::random_int(n, k, rng, -3, 3);
        Mat basis = m.column_basis();
        Mat comp = pivot_complement(basis);
        CHECK(basis.cols() + comp.cols() == n);
        CHECK(Mat::hstack(basis, comp).rank() == n);
    }
}

TEST_CASE("exact arithmetic survives fraction growth") {
    // Hilbert-style matrix: notoriously ill conditioned in floating point
    std::size_t n = 6;
    Mat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(1, static_cast<long long>(i + j + 1));
    CHECK(h.rank() == n);
    auto inv = h.inverse();
    REQUIRE(inv.has_value());
    CHECK(h * *inv == Mat::identity(n));
}
