#include "permstat/cosine.hpp"

#include <algorithm>

#include "permstat/statistics.hpp"

namespace permstat {

namespace {

long long tetra(long long n) {  // C(n, 3)
    return n * (n - 1) * (n - 2) / 6;
}

}  // namespace

const std::array<long long, 16>& excluded_cosines() {
    static const std::array<long long, 16> ex = {2,  3,  6,  7,  8,  9,  12, 15,
                                                 16, 17, 18, 19, 31, 32, 33, 34};
    return ex;
}

bool cosine_achievable(long long k) {
    if (k < 1) return false;
    const auto& ex = excluded_cosines();
    return !std::binary_search(ex.begin(), ex.end(), k);
}

int rank_for(long long k) {
    if (k < 1) throw OutOfRange("rank_for: k must be >= 1");
    // Largest n with C(n+2,3) <= k < C(n+3,3); exact integers, no floating
    // cube roots.
    long long lo = 1, hi = 2;
    while (tetra(hi + 2) <= k) hi *= 2;
    while (lo < hi) {
        const long long mid = (lo + hi + 1) / 2;
        if (tetra(mid + 2) <= k) lo = mid;
        else hi = mid - 1;
    }
    return static_cast<int>(lo);
}

Permutation nu(int m) {
    static const std::array<const char*, 11> table = {
        "4321", "3421", "3412", "4213", "4123", "2413",
        "3214", "1423", "2143", "1243", "1234"};
    if (m < 0 || m > 10) throw OutOfRange("nu: m must be in 0..10");
    return Permutation::parse(table[static_cast<size_t>(m)]);
}

Permutation eta(long long k) {
    if (!cosine_achievable(k) || k >= 35)
        throw NotAchievable("eta: no witness for k = " + std::to_string(k));
    switch (k) {
        case 1: return Permutation::parse("1");
        case 4: return Permutation::parse("21");
        case 5: return Permutation::parse("12");
        case 10: return Permutation::parse("321");
        case 11: return Permutation::parse("312");
        case 13: return Permutation::parse("132");
        case 14: return Permutation::parse("123");
        default:
            // 20..30 come from the rank-4 table shifted by the base offset C(6,3) = 20.
            return nu(static_cast<int>(k - 20));
    }
}

Permutation zeta(long long m, int n) {
    if (n < 4) throw OutOfRange("zeta: n must be >= 4");
    if (m < 0 || m > tetra(n + 1)) throw OutOfRange("zeta: need 0 <= m <= C(n+1,3)");
    if (n == 4) return nu(static_cast<int>(m));
    if (m <= tetra(n)) return skew_sum(zeta(m, n - 1), Permutation::identity(1));
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;  // C(n,2)
    return direct_sum(Permutation::identity(1), zeta(m - pairs, n - 1));
}

Permutation construct(long long k) {
    if (!cosine_achievable(k))
        throw NotAchievable("no permutation has dot product " + std::to_string(k));
    Permutation result = [&] {
        if (k < 35) return eta(k);
        const int n = rank_for(k);
        return zeta(k - tetra(n + 2), n);
    }();
    // The recursion's branch bounds are easy to get subtly wrong; fail loudly
    // rather than return a silently wrong permutation.
    if (cosine(result) != k)
        throw Error("construct: internal check failed for k = " + std::to_string(k));
    return result;
}

long long count_with_cosine(long long k, int max_rank) {
    if (k < 1) throw OutOfRange("count_with_cosine: k must be >= 1");
    long long total = 0;
    // Over S_n the dot product with the identity spans exactly
    // [C(n+2,3), C(n+2,3) + C(n+1,3)].
    for (int n = 1;; ++n) {
        const long long lo = tetra(n + 2);
        if (lo > k) break;
        const long long hi = lo + tetra(n + 1);
        if (k > hi) continue;
        if (n > max_rank)
            throw RankCapExceeded("count_with_cosine: qualifying rank " + std::to_string(n) +
                                  " exceeds max rank " + std::to_string(max_rank));
        for_each_permutation(n, [&](const Permutation& p) {
            if (cosine(p) == k) ++total;
        });
    }
    return total;
}

}  // namespace permstat
