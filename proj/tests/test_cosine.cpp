#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permstat/cosine.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;

TEST_CASE("excluded set") {
    const auto& ex = excluded_cosines();
    CHECK(ex.size() == 16);
    for (long long k : ex) CHECK_FALSE(cosine_achievable(k));
    CHECK(cosine_achievable(1));
    CHECK(cosine_achievable(4));
    CHECK(cosine_achievable(35));
    CHECK_FALSE(cosine_achievable(0));
    CHECK_FALSE(cosine_achievable(-7));
}

TEST_CASE("rank_for brackets k between consecutive tetrahedral numbers") {
    CHECK(rank_for(1) == 1);
    CHECK(rank_for(20) == 4);   // C(6,3) = 20
    CHECK(rank_for(34) == 4);
    CHECK(rank_for(35) == 5);   // C(7,3) = 35
    CHECK(rank_for(100) == 7);  // C(9,3) = 84 <= 100 < C(10,3) = 120
    const long long big = 1000000000000LL;
    const long long n = rank_for(big);
    const auto tetra = [](long long m) { return m * (m - 1) * (m - 2) / 6; };
    CHECK(tetra(n + 2) <= big);
    CHECK(big < tetra(n + 3));
    CHECK_THROWS_AS(rank_for(0), OutOfRange);
}

TEST_CASE("rank-4 witness table") {
    for (int m = 0; m <= 10; ++m) {
        CHECK(nu(m).rank() == 4);
        CHECK(ninvsum(nu(m)) == m);
    }
    CHECK_THROWS_AS(nu(11), OutOfRange);
}

TEST_CASE("small-k witnesses") {
    CHECK(cosine(eta(1)) == 1);
    CHECK(cosine(eta(10)) == 10);
    CHECK(cosine(eta(25)) == 25);
    CHECK_THROWS_AS(eta(2), NotAchievable);
    CHECK_THROWS_AS(eta(35), NotAchievable);
}

TEST_CASE("zeta hits every non-inversion sum") {
    for (int n = 4; n <= 7; ++n) {
        const long long top = static_cast<long long>(n + 1) * n * (n - 1) / 6;
        for (long long m = 0; m <= top; ++m) {
            const Permutation p = zeta(m, n);
            CHECK(p.rank() == n);
            CHECK(ninvsum(p) == m);
        }
    }
    CHECK_THROWS_AS(zeta(0, 3), OutOfRange);
    CHECK_THROWS_AS(zeta(-1, 4), OutOfRange);
    CHECK_THROWS_AS(zeta(11, 4), OutOfRange);
}

TEST_CASE("construct") {
    CHECK(construct(50) == Permutation::parse("1 3 5 2 4"));
    CHECK(construct(1) == Permutation::parse("1"));
    for (long long k = 1; k <= 2000; ++k) {
        if (!cosine_achievable(k)) {
            CHECK_THROWS_AS(construct(k), NotAchievable);
            continue;
        }
        CHECK(cosine(construct(k)) == k);
    }
}

TEST_CASE("counting witnesses") {
    CHECK(count_with_cosine(2, 6) == 0);
    CHECK(count_with_cosine(56, 6) == 1);  // reverse identity of rank 6, uniquely
    CHECK(count_with_cosine(55, 5) == 1);  // identity of rank 5, uniquely
    CHECK(count_with_cosine(50, 6) == 6);
    CHECK_THROWS_AS(count_with_cosine(60, 5), RankCapExceeded);
    CHECK_THROWS_AS(count_with_cosine(0, 6), OutOfRange);
}
