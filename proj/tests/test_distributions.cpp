#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paper_tables.hpp"
#include "permstat/distributions.hpp"

using namespace permstat;

namespace {

StatisticSpec spec(StatisticSpec::Tag tag, std::optional<int> k = {},
                   std::optional<int> k2 = {}, std::optional<int> d = {}) {
    StatisticSpec s;
    s.tag = tag;
    s.k = k;
    s.k2 = k2;
    s.d = d;
    return s;
}

using Tag = StatisticSpec::Tag;

}  // namespace

TEST_CASE("brute distribution basics") {
    CHECK(dist_brute(spec(Tag::Ninvsum), 3) == IntPoly::from_ints({1, 2, 0, 2, 1}));
    CHECK(dist_brute(spec(Tag::Invsum), 3) == IntPoly::from_ints({1, 2, 0, 2, 1}));
    CHECK(dist_brute(spec(Tag::InvK, 1), 3) == IntPoly::from_ints({1, 4, 1}));
}

TEST_CASE("worker count never changes the result") {
    const StatisticSpec s = spec(Tag::Ninvsum);
    const IntPoly serial = dist_brute(s, 6, 1);
    for (int jobs : {2, 3, 5, 8}) CHECK(dist_brute(s, 6, jobs) == serial);
}

TEST_CASE("recurrence reproduces the printed N table") {
    for (const auto& row : tables::table_N())
        if (row.n <= 7) CHECK(N_recurrence(row.n) == row.poly);
}

TEST_CASE("closed k-step form reproduces the printed H table") {
    for (const auto& row : tables::table_H()) CHECK(H_closed(row.n, row.k) == row.poly);
}

TEST_CASE("k-step closed form beyond the rank") {
    CHECK(H_closed(3, 5) == IntPoly::constant(6));
    CHECK(H_closed(4, 4) == IntPoly::constant(24));
    CHECK(I_nk0(11, 4) == 92400);
}

TEST_CASE("extremal (k1,k2) prediction") {
    const auto [deg, lead] = H_k1k2_extremal(5, 3, 3);
    CHECK(deg == 2);
    CHECK(lead == 2);  // printed entry 2(x^2 + 10x + 49)
    CHECK_THROWS_AS(H_k1k2_extremal(6, 3, 4), OutOfRegime);  // k1 = n/2 not allowed
    CHECK_THROWS_AS(H_k1k2_extremal(5, 5, 4), OutOfRegime);
}

TEST_CASE("special (<= k)-step cases") {
    CHECK(J_special(5, JSpecialCase::KEq1) == eulerian(5));
    CHECK(J_special(5, JSpecialCase::KEqNMinus1) == q_factorial(5));
    for (const auto& row : tables::table_J()) {
        if (row.k == row.n - 2 && row.n >= 3)
            CHECK(J_special(row.n, JSpecialCase::KEqNMinus2) == row.poly);
        if (row.k == row.n - 1) CHECK(J_special(row.n, JSpecialCase::KEqNMinus1) == row.poly);
        if (row.n >= 2) CHECK(row.poly.degree() == J_degree(row.n - 1, row.k));
    }
}

TEST_CASE("mod-d leading term prediction") {
    const auto [deg65, lead65] = L_leading(6, 2, 5);
    CHECK(deg65 == 1);
    CHECK(lead65 == 216);  // printed entry 72(3y + 7)
    const auto [deg74, lead74] = L_leading(7, 2, 4);
    CHECK(deg74 == 3);
    CHECK(lead74 == 6);  // printed entry 6(y^3 + 75y^2 + 387y + 377)
    CHECK_THROWS_AS(L_leading(6, 2, 3), OutOfRegime);
    CHECK_THROWS_AS(L_leading(6, 1, 5), OutOfRegime);
}

TEST_CASE("exact d=2, k=n-1 polynomial") {
    for (const auto& row : tables::table_L())
        if (row.k == row.n - 1) CHECK(L_n2_nminus1(row.n) == row.poly);
}

TEST_CASE("ipcni closed forms") {
    for (const auto& row : tables::table_K()) {
        if (row.k == row.n - 1) CHECK(K_last(row.n) == row.poly);
        if (row.k == row.n - 2 && row.n >= 4) CHECK(K_second_last(row.n) == row.poly);
        CHECK(row.poly.coeff(0) == K_constant_term(row.k));
    }
}

TEST_CASE("zone coordinate distribution") {
    CHECK(zcv_coordinate_dist(4, 2) == q_binomial(4, 2).scaled(4));
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(zcv_coordinate_brute(n, k, PairKind::NonInversions) ==
                  zcv_coordinate_dist(n, k));
            CHECK(zcv_coordinate_brute(n, k, PairKind::Inversions) ==
                  zcv_coordinate_dist(n, k));
        }
}

TEST_CASE("dispatch") {
    DistributionRequest req;
    req.stat = spec(Tag::InvK, 2);
    req.n = 5;
    req.method = DistMethod::Closed;
    CHECK(distribution(req) == H_closed(5, 2));
    req.method = DistMethod::Auto;
    CHECK(distribution(req) == H_closed(5, 2));
    req.method = DistMethod::Brute;
    CHECK(distribution(req) == H_closed(5, 2));

    // The inversion sum is covered by the recurrence, not the q-factorial.
    req.stat = spec(Tag::Invsum);
    req.method = DistMethod::Auto;
    CHECK(distribution(req) == dist_brute(req.stat, 5));
    req.method = DistMethod::Recurrence;
    CHECK(distribution(req) == N_recurrence(5));

    req.stat = spec(Tag::Cosine);
    req.method = DistMethod::Closed;
    CHECK_THROWS_AS(distribution(req), OutOfRange);
    req.method = DistMethod::Recurrence;
    CHECK_THROWS_AS(distribution(req), OutOfRange);
}
