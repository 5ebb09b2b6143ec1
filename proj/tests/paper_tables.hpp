// Reference polynomial tables, transcribed from the published factored forms.
// Everything here is data: expansion happens through IntPoly arithmetic so a
// transcription slip shows up as a test failure, not a silent pass.
#pragma once

#include <vector>

#include "permstat/polynomial.hpp"

namespace tables {

using permstat::BigInt;
using permstat::IntPoly;

// Polynomial from coefficients in descending degree order, as printed.
inline IntPoly D(std::initializer_list<long long> descending) {
    std::vector<BigInt> asc;
    for (auto it = std::rbegin(descending); it != std::rend(descending); ++it)
        asc.emplace_back(*it);
    return IntPoly(std::move(asc));
}

inline IntPoly C(long long c) { return IntPoly::constant(c); }

// Palindromic polynomial from the descending top half including the center.
inline IntPoly mirror(std::initializer_list<long long> half) {
    const std::vector<long long> head(half);
    std::vector<long long> desc = head;
    for (auto it = head.rbegin() + 1; it != head.rend(); ++it) desc.push_back(*it);
    std::vector<BigInt> asc(desc.rbegin(), desc.rend());
    return IntPoly(std::move(asc));
}

inline IntPoly pow(const IntPoly& p, int e) {
    IntPoly out = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) out *= p;
    return out;
}

struct NRow {
    int n;
    IntPoly poly;
};

// Distribution of the non-inversion sum, printed as small factors times one
// big palindromic factor.
inline std::vector<NRow> table_N() {
    const IntPoly x1 = D({1, 1});        // x + 1
    const IntPoly cyc = D({1, -1, 1});   // x^2 - x + 1
    return {
        {1, C(1)},
        {2, x1},
        {3, mirror({1, 2, 0})},
        {4, D({1, 0, 1}) * mirror({1, 3, 0, 1, 2})},
        {5, cyc * mirror({1, 5, 7, 8, 8, 6, 2, 6, 10, 14})},
        {6, x1 * pow(cyc, 2) *
                mirror({1, 6, 11, 13, 13, 6, -1, 6, 21, 30, 19, 3, -7, 14, 27, 36})},
        {7, cyc * mirror({1,  7,  16,  23,  36,  39,  38,  45,  62,  71,  83,  82,  83, 91,
                          86, 85, 128, 149, 144, 129, 132, 101, 137, 166, 204, 182, 146, 108})},
        {8, D({1, 0, 0, 0, 1}) * cyc *
                mirror({1,   8,   22,  36,  60,  71,  66,  67,  84,  94,  133, 150, 171, 182,
                        164, 135, 196, 249, 280, 278, 290, 218, 243, 270, 375, 456, 432, 326,
                        322, 329, 442, 481, 533, 464, 413, 362, 437, 489, 520, 462})},
    };
}

struct HRow {
    int n, k;
    IntPoly poly;
};

// Distribution of k-step inversions (printed rows, including the partial
// n = 9 block).
inline std::vector<HRow> table_H() {
    const IntPoly x1 = D({1, 1});
    return {
        {1, 1, C(1)},
        {2, 1, x1},
        {2, 2, C(2)},
        {3, 1, D({1, 4, 1})},
        {3, 2, C(3) * x1},
        {3, 3, C(6)},
        {4, 1, x1 * D({1, 10, 1})},
        {4, 2, C(6) * pow(x1, 2)},
        {4, 3, C(12) * x1},
        {4, 4, C(24)},
        {5, 1, D({1, 26, 66, 26, 1})},
        {5, 2, C(10) * x1 * D({1, 4, 1})},
        {5, 3, C(30) * pow(x1, 2)},
        {5, 4, C(60) * x1},
        {5, 5, C(120)},
        {6, 1, x1 * D({1, 56, 246, 56, 1})},
        {6, 2, C(20) * pow(D({1, 4, 1}), 2)},
        {6, 3, C(90) * pow(x1, 3)},
        {6, 4, C(180) * pow(x1, 2)},
        {6, 5, C(360) * x1},
        {6, 6, C(720)},
        {7, 1, D({1, 120, 1191, 2416, 1191, 120, 1})},
        {7, 2, C(35) * x1 * D({1, 4, 1}) * D({1, 10, 1})},
        {7, 3, C(210) * pow(x1, 2) * D({1, 4, 1})},
        {7, 4, C(630) * pow(x1, 3)},
        {7, 5, C(1260) * pow(x1, 2)},
        {7, 6, C(2520) * x1},
        {7, 7, C(5040)},
        {8, 1, x1 * D({1, 246, 4047, 11572, 4047, 246, 1})},
        {8, 2, C(70) * pow(x1, 2) * pow(D({1, 10, 1}), 2)},
        {8, 3, C(560) * x1 * pow(D({1, 4, 1}), 2)},
        {8, 4, C(2520) * pow(x1, 4)},
        {8, 5, C(5040) * pow(x1, 3)},
        {8, 6, C(10080) * pow(x1, 2)},
        {8, 7, C(20160) * x1},
        {8, 8, C(40320)},
        {9, 1, D({1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1})},
        {9, 2, C(126) * x1 * D({1, 10, 1}) * D({1, 26, 66, 26, 1})},
        {9, 3, C(1680) * pow(D({1, 4, 1}), 3)},
        {9, 4, C(7560) * pow(x1, 3) * D({1, 4, 1})},
    };
}

struct Hk1k2Row {
    int n, k1, k2;
    IntPoly poly;
};

// Distribution of (k1,k2)-step inversions (full printed grid, n <= 5).
inline std::vector<Hk1k2Row> table_Hk1k2() {
    return {
        {1, 1, 1, C(1)},
        {2, 1, 1, D({1, 1})},
        {2, 1, 2, C(2)},
        {2, 2, 1, C(2)},
        {2, 2, 2, C(2)},
        {3, 1, 1, D({1, 2, 3})},
        {3, 1, 2, C(2) * D({1, 2})},
        {3, 1, 3, C(6)},
        {3, 2, 1, C(2) * D({1, 2})},
        {3, 2, 2, D({1, 5})},
        {3, 2, 3, C(6)},
        {3, 3, 1, C(6)},
        {3, 3, 2, C(6)},
        {3, 3, 3, C(6)},
        {4, 1, 1, D({1, 3, 9, 11})},
        {4, 1, 2, C(2) * D({1, 4, 7})},
        {4, 1, 3, C(6) * D({1, 3})},
        {4, 1, 4, C(24)},
        {4, 2, 1, C(2) * D({1, 4, 7})},
        {4, 2, 2, C(2) * D({1, 2, 9})},
        {4, 2, 3, C(4) * D({1, 5})},
        {4, 2, 4, C(24)},
        {4, 3, 1, C(6) * D({1, 3})},
        {4, 3, 2, C(4) * D({1, 5})},
        {4, 3, 3, C(2) * D({1, 11})},
        {4, 3, 4, C(24)},
        {4, 4, 1, C(24)},
        {4, 4, 2, C(24)},
        {4, 4, 3, C(24)},
        {4, 4, 4, C(24)},
        {5, 1, 1, D({1, 4, 18, 44, 53})},
        {5, 1, 2, C(2) * D({1, 6, 21, 32})},
        {5, 1, 3, C(6) * D({1, 6, 13})},
        {5, 1, 4, C(24) * D({1, 4})},
        {5, 2, 1, C(2) * D({1, 6, 21, 32})},
        {5, 2, 2, D({1, 3}) * D({1, 4, 25})},
        {5, 2, 3, C(4) * D({1, 7, 22})},
        {5, 2, 4, C(6) * D({3, 17})},
        {5, 3, 1, C(6) * D({1, 6, 13})},
        {5, 3, 2, C(4) * D({1, 7, 22})},
        {5, 3, 3, C(2) * D({1, 10, 49})},
        {5, 3, 4, C(12) * D({1, 9})},
        {5, 4, 1, C(24) * D({1, 4})},
        {5, 4, 2, C(6) * D({3, 17})},
        {5, 4, 3, C(12) * D({1, 9})},
        {5, 4, 4, C(6) * D({1, 19})},
        {5, 5, 1, C(120)},
        {5, 5, 2, C(120)},
        {5, 5, 3, C(120)},
        {5, 5, 4, C(120)},
    };
}

struct JRow {
    int n, k;
    IntPoly poly;
};

// Distribution of (<= k)-step inversions (printed rows, n <= 7).
inline std::vector<JRow> table_J() {
    const IntPoly x1 = D({1, 1});
    return {
        {1, 1, C(1)},
        {2, 1, x1},
        {3, 1, D({1, 4, 1})},
        {3, 2, x1 * D({1, 1, 1})},
        {4, 1, x1 * D({1, 10, 1})},
        {4, 2, x1 * D({1, 2, 6, 2, 1})},
        {4, 3, x1 * D({1, 1, 1}) * D({1, 1, 1, 1})},
        {5, 1, D({1, 26, 66, 26, 1})},
        {5, 2, pow(x1, 3) * D({1, 1, 11, 1, 1})},
        {5, 3, x1 * D({1, 1, 1}) * D({1, 2, 3, 8, 3, 2, 1})},
        {5, 4, x1 * D({1, 1, 1}) * D({1, 1, 1, 1}) * D({1, 1, 1, 1, 1})},
        {6, 1, x1 * D({1, 56, 246, 56, 1})},
        {6, 2, x1 * D({1, 4, 25, 88, 124, 88, 25, 4, 1})},
        {6, 3, pow(x1, 2) * D({1, 3, 7, 22, 31, 52, 31, 22, 7, 3, 1})},
        {6, 4, x1 * D({1, 1, 1}) * D({1, 1, 1, 1}) * D({1, 2, 3, 4, 10, 4, 3, 2, 1})},
        {6, 5, x1 * D({1, 1, 1}) * D({1, 1, 1, 1}) * D({1, 1, 1, 1, 1}) *
                   D({1, 1, 1, 1, 1, 1})},
        {7, 1, D({1, 120, 1191, 2416, 1191, 120, 1})},
        {7, 2, x1 * D({1, 5, 39, 218, 562, 870, 562, 218, 39, 5, 1})},
        {7, 3, x1 * D({1, 1, 1}) * D({1, 4, 10, 38, 79, 166, 244, 166, 79, 38, 10, 4, 1})},
        {7, 4, pow(x1, 4) * D({1, 1, 1}) *
                   D({1, 1, 4, 4, 21, 0, 43, 0, 21, 4, 4, 1, 1})},
        {7, 5, x1 * D({1, 1, 1}) * D({1, 1, 1, 1}) * D({1, 1, 1, 1, 1}) *
                   D({1, 2, 3, 4, 5, 12, 5, 4, 3, 2, 1})},
        {7, 6, x1 * D({1, 1, 1}) * D({1, 1, 1, 1}) * D({1, 1, 1, 1, 1}) *
                   D({1, 1, 1, 1, 1, 1}) * D({1, 1, 1, 1, 1, 1, 1})},
    };
}

struct LRow {
    int n, k;
    IntPoly poly;  // d = 2 throughout
};

// Distribution of k-step inversions with even inversion top (printed rows,
// n <= 7, d = 2; the paper prints the variable as y).
inline std::vector<LRow> table_L() {
    const IntPoly x1 = D({1, 1});
    return {
        {1, 1, C(1)},
        {2, 1, x1},
        {2, 2, C(2)},
        {3, 1, C(2) * D({1, 2})},
        {3, 2, D({1, 5})},
        {3, 3, C(6)},
        {4, 1, C(4) * D({1, 4, 1})},
        {4, 2, C(2) * x1 * D({1, 5})},
        {4, 3, C(8) * D({1, 2})},
        {4, 4, C(24)},
        {5, 1, C(12) * D({1, 6, 3})},
        {5, 2, C(6) * x1 * D({1, 9})},
        {5, 3, C(2) * D({1, 22, 37})},
        {5, 4, C(24) * D({1, 4})},
        {5, 5, C(120)},
        {6, 1, C(36) * x1 * D({1, 8, 1})},
        {6, 2, C(4) * D({4, 55, 94, 27})},
        {6, 3, C(6) * x1 * D({1, 22, 37})},
        {6, 4, C(4) * D({1, 5}) * D({13, 17})},
        {6, 5, C(72) * D({3, 7})},
        {6, 6, C(720)},
        {7, 1, C(144) * D({1, 12, 18, 4})},
        {7, 2, C(2) * D({37, 615, 1359, 509})},
        {7, 3, C(4) * D({7, 204, 651, 398})},
        {7, 4, C(6) * D({1, 75, 387, 377})},
        {7, 5, C(12) * D({13, 154, 253})},
        {7, 6, C(360) * D({3, 11})},
        {7, 7, C(5040)},
    };
}

struct KRow {
    int n, k;
    IntPoly poly;
};

// Distribution of k-step inversions plus certified k-step non-inversions
// (printed rows, n <= 8). The (n=7, k=1) cell is omitted: the printed
// polynomial is typographically corrupted (a term boundary is missing), so
// that cell is covered by self-consistency checks instead.
inline std::vector<KRow> table_K() {
    const IntPoly x1 = D({1, 1});
    return {
        {1, 1, C(1)},
        {2, 1, x1},
        {2, 2, C(2)},
        {3, 1, D({1, 4, 1})},
        {3, 2, C(2) * D({2, 1})},
        {3, 3, C(6)},
        {4, 1, x1 * D({1, 10, 1})},
        {4, 2, C(2) * x1 * D({5, 1})},
        {4, 3, C(6) * D({3, 1})},
        {4, 4, C(24)},
        {5, 1, D({1, 26, 66, 26, 1})},
        {5, 2, C(2) * D({13, 35, 11, 1})},
        {5, 3, C(6) * D({11, 8, 1})},
        {5, 4, C(24) * D({4, 1})},
        {5, 5, C(120)},
        {6, 1, x1 * D({1, 56, 246, 56, 1})},
        {6, 2, C(2) * D({38, 183, 121, 17, 1})},
        {6, 3, C(6) * x1 * D({46, 13, 1})},
        {6, 4, C(24) * D({19, 10, 1})},
        {6, 5, C(120) * D({5, 1})},
        {6, 6, C(720)},
        {7, 2, C(2) * D({116, 969, 1100, 310, 24, 1})},
        {7, 3, C(6) * D({202, 459, 157, 21, 1})},
        {7, 4, C(24) * D({103, 89, 17, 1})},
        {7, 5, C(120) * D({29, 12, 1})},
        {7, 6, C(720) * D({6, 1})},
        {7, 7, C(5040)},
        {8, 1, x1 * D({1, 246, 4047, 11572, 4047, 246, 1})},
        {8, 2, C(2) * D({382, 5124, 9517, 4420, 684, 32, 1})},
        {8, 3, C(6) * D({986, 3454, 1925, 325, 29, 1})},
        {8, 4, C(24) * x1 * D({614, 201, 24, 1})},
        {8, 5, C(120) * D({190, 125, 20, 1})},
        {8, 6, C(720) * D({41, 14, 1})},
        {8, 7, C(5040) * D({7, 1})},
        {8, 8, C(40320)},
    };
}

}  // namespace tables
