#pragma once

#include <utility>

#include "permstat/polynomial.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

enum class DistMethod { Brute, Closed, Recurrence, Auto };

/// Exact distribution polynomial of a statistic over S_n by exhaustive
/// enumeration. The sweep may be split across `jobs` workers; the result is
/// identical for any worker count.
IntPoly dist_brute(const StatisticSpec& stat, int n, int jobs = 1);

/// Distribution of ninvsum via the zone-crossing recurrence (enumerates
/// S_{n-1} internally).
IntPoly N_recurrence(int n);

/// Closed form for the k-step inversion distribution: a product of Eulerian
/// polynomials scaled by the zero-inversion filling count. Extended to
/// k > n as the constant n!.
IntPoly H_closed(int n, int k);

/// Number of ways to fill the k-step runs with no k-step inversion
/// (the constant term of H_closed).
BigInt I_nk0(int n, int k);

/// Predicted degree and leading coefficient of the (k1,k2)-step inversion
/// distribution in the regime n/2 < k1, k2 < n.
std::pair<int, BigInt> H_k1k2_extremal(int n, int k1, int k2);

enum class JSpecialCase { KEq1, KEqNMinus2, KEqNMinus1 };

/// Closed forms for the (<= k)-step inversion distribution at the three
/// covered step sizes. The n-2 case multiplies [n-2]_x! by the symmetric
/// boundary factor (the recurrence's stated left factor has an off-by-one
/// in its subscript; the [n-2]_x! reading reproduces the reference values).
IntPoly J_special(int n, JSpecialCase which);

/// Degree of the (<= k)-step inversion distribution over S_{n+1}: k(2n-k+1)/2.
long long J_degree(int n, int k);

/// Predicted degree and leading coefficient of the mod-d inversion-top
/// distribution in the regime n/2 < k < n, 2 <= d <= n.
std::pair<int, BigInt> L_leading(int n, int d, int k);

/// Exact linear polynomial for d = 2, k = n-1.
IntPoly L_n2_nminus1(int n);

/// Closed forms for the k-step inversion-plus-certified distribution.
IntPoly K_last(int n);         // k = n-1: (n-1)! ((n-1)x + 1)
IntPoly K_second_last(int n);  // k = n-2: (n-2)! ((n^2-3n+1)x^2 + 2(n-1)x + 1)
BigInt K_constant_term(int k);  // k!

/// Distribution of the k-th coordinate of the non-inversion zone-crossing
/// vector: k!(n-k)! [n choose k]_q.
IntPoly zcv_coordinate_dist(int n, int k);

/// Brute-force distribution of the k-th zone vector coordinate (both kinds).
IntPoly zcv_coordinate_brute(int n, int k, PairKind kind, int jobs = 1);

struct DistributionRequest {
    StatisticSpec stat;
    int n = 1;
    DistMethod method = DistMethod::Auto;
    int jobs = 1;
};

/// Dispatches to a closed form or recurrence when one covers the request;
/// Auto falls back to brute force.
IntPoly distribution(const DistributionRequest& req);

}  // namespace permstat
