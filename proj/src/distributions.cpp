#include "permstat/distributions.hpp"

#include <algorithm>
#include <thread>

namespace permstat {

namespace {

IntPoly tally_to_poly(const std::vector<std::uint64_t>& tally) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(tally.size());
    for (std::uint64_t c : tally) coeffs.emplace_back(c);
    return IntPoly(std::move(coeffs));
}

void bump(std::vector<std::uint64_t>& tally, long long exponent) {
    const auto e = static_cast<size_t>(exponent);
    if (e >= tally.size()) tally.resize(e + 1, 0);
    ++tally[e];
}

/// Runs a tally over S_n split across workers; merge order does not matter
/// because each worker owns a private accumulator.
template <typename Fn>
IntPoly parallel_tally(int n, int jobs, Fn&& per_permutation) {
    if (n > enumeration_cap())
        throw RankCapExceeded("distribution sweep: rank " + std::to_string(n) +
                              " exceeds cap " + std::to_string(enumeration_cap()));
    const std::uint64_t total = factorial(n);
    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 1000) {
        std::vector<std::uint64_t> tally;
        for_each_permutation(n, [&](const Permutation& p) { per_permutation(tally, p); });
        return tally_to_poly(tally);
    }
    std::vector<std::vector<std::uint64_t>> tallies(static_cast<size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
        const std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
        workers.emplace_back([&, w, begin, end] {
            for_each_permutation_range(n, begin, end, [&, w](const Permutation& p) {
                per_permutation(tallies[static_cast<size_t>(w)], p);
            });
        });
    }
    for (auto& t : workers) t.join();
    IntPoly result;
    for (const auto& t : tallies) result += tally_to_poly(t);
    return result;
}

}  // namespace

IntPoly dist_brute(const StatisticSpec& stat, int n, int jobs) {
    return parallel_tally(n, jobs, [&stat](std::vector<std::uint64_t>& tally, const Permutation& p) {
        bump(tally, evaluate(stat, p));
    });
}

IntPoly N_recurrence(int n) {
    if (n < 1) throw OutOfRange("N_recurrence: n must be >= 1");
    if (n == 1) return IntPoly::constant(1);
    const int m = n - 1;
    if (m > enumeration_cap())
        throw RankCapExceeded("N_recurrence: inner rank exceeds cap");
    std::vector<std::uint64_t> tally;
    for_each_permutation(m, [&](const Permutation& p) {
        const auto aug = zone_vector(p, PairKind::NonInversions, true);
        const long long base = ninvsum(p);
        for (int k = 0; k <= m; ++k) {
            const long long tri = static_cast<long long>(k + 1) * k / 2;  // C(k+1,2)
            bump(tally, tri + aug[static_cast<size_t>(k)] + base);
        }
    });
    return tally_to_poly(tally);
}

BigInt I_nk0(int n, int k) {
    if (k < 1 || k > n) throw OutOfRange("I_nk0: need 1 <= k <= n");
    BigInt prod = 1;
    long long used = 0;
    for (int j = 1; j <= k - 1; ++j) {
        const long long lambda = (n - j) / k + 1;
        prod *= binomial(n - used, lambda);
        used += lambda;
    }
    return prod;
}

IntPoly H_closed(int n, int k) {
    if (k < 1) throw OutOfRange("H_closed: k must be >= 1");
    if (k > n) return IntPoly::constant(BigInt(factorial(n)));  // no k-step pairs
    const int s = n / k + 1;
    const int t = n % k;
    IntPoly h = IntPoly::constant(I_nk0(n, k));
    for (int i = 0; i < t; ++i) h *= eulerian(s);
    for (int i = 0; i < k - t; ++i) h *= eulerian(s - 1);
    return h;
}

std::pair<int, BigInt> H_k1k2_extremal(int n, int k1, int k2) {
    if (!(2 * k1 > n && k1 < n && 2 * k2 > n && k2 < n))
        throw OutOfRegime("H_k1k2_extremal: need n/2 < k1, k2 < n");
    const int ell = std::min(n - k1, n - k2);
    BigInt lead = BigInt(factorial(n - 2 * ell)) * BigInt(factorial(ell)) *
                  binomial(n - k1, ell) * binomial(n - k2, ell);
    return {ell, lead};
}

IntPoly J_special(int n, JSpecialCase which) {
    switch (which) {
        case JSpecialCase::KEq1:
            return eulerian(n);
        case JSpecialCase::KEqNMinus1:
            if (n < 2) throw OutOfRange("J_special: n must be >= 2");
            return q_factorial(n);
        case JSpecialCase::KEqNMinus2: {
            if (n < 3) throw OutOfRange("J_special: n must be >= 3 for the n-2 case");
            const int k = n - 2;
            std::vector<BigInt> factor(static_cast<size_t>(2 * k) + 1, 0);
            for (int j = 0; j <= k; ++j) {
                factor[static_cast<size_t>(j)] += j + 1;
                factor[static_cast<size_t>(2 * k - j)] += j + 1;
            }
            const IntPoly left = (k >= 2) ? q_factorial(k) : IntPoly::constant(1);
            return left * IntPoly(std::move(factor));
        }
    }
    throw OutOfRange("J_special: bad case");
}

long long J_degree(int n, int k) {
    if (k < 1 || k > n) throw OutOfRange("J_degree: need 1 <= k <= n");
    return static_cast<long long>(k) * (2LL * n - k + 1) / 2;
}

namespace {

// Sum over increasing tuples 1 <= i_1 < ... < i_ell <= top of the product
// of (d*i_j - 2j + 1).
BigInt modinv_top_sum(int d, int top, int ell, int next, int j, const BigInt& partial) {
    if (j > ell) return partial;
    BigInt acc = 0;
    for (int i = next; i <= top - (ell - j); ++i)
        acc += modinv_top_sum(d, top, ell, i + 1, j + 1,
                              partial * (static_cast<long long>(d) * i - 2 * j + 1));
    return acc;
}

}  // namespace

std::pair<int, BigInt> L_leading(int n, int d, int k) {
    if (!(2 * k > n && k < n)) throw OutOfRegime("L_leading: need n/2 < k < n");
    if (d < 2 || d > n) throw OutOfRegime("L_leading: need 2 <= d <= n");
    const int top = n / d;
    const int ell = std::min(n - k, top);
    BigInt lead = BigInt(factorial(n - 2 * ell)) * BigInt(factorial(ell)) *
                  binomial(n - k, ell) * modinv_top_sum(d, top, ell, 1, 1, 1);
    return {ell, lead};
}

IntPoly L_n2_nminus1(int n) {
    if (n < 2) throw OutOfRange("L_n2_nminus1: n must be >= 2");
    const long long half_sq = static_cast<long long>(n / 2) * (n / 2);
    IntPoly linear = IntPoly::from_ints({static_cast<long long>(n) * (n - 1) - half_sq, half_sq});
    return linear.scaled(BigInt(factorial(n - 2)));
}

IntPoly K_last(int n) {
    if (n < 2) throw OutOfRange("K_last: n must be >= 2");
    return IntPoly::from_ints({1, n - 1}).scaled(BigInt(factorial(n - 1)));
}

IntPoly K_second_last(int n) {
    if (n < 4) throw OutOfRange("K_second_last: n must be >= 4");
    IntPoly quad = IntPoly::from_ints(
        {1, 2LL * (n - 1), static_cast<long long>(n) * n - 3LL * n + 1});
    return quad.scaled(BigInt(factorial(n - 2)));
}

BigInt K_constant_term(int k) {
    if (k < 1) throw OutOfRange("K_constant_term: k must be >= 1");
    return BigInt(factorial(k));
}

IntPoly zcv_coordinate_dist(int n, int k) {
    if (k < 1 || k > n - 1) throw OutOfRange("zcv_coordinate_dist: need 1 <= k <= n-1");
    return q_binomial(n, k).scaled(BigInt(factorial(k)) * BigInt(factorial(n - k)));
}

IntPoly zcv_coordinate_brute(int n, int k, PairKind kind, int jobs) {
    if (k < 1 || k > n - 1) throw OutOfRange("zcv_coordinate_brute: need 1 <= k <= n-1");
    return parallel_tally(n, jobs, [k, kind](std::vector<std::uint64_t>& tally, const Permutation& p) {
        bump(tally, zone_vector(p, kind)[static_cast<size_t>(k) - 1]);
    });
}

namespace {

// invsum and ninvsum share a distribution: complementing a permutation turns
// each inversion into a non-inversion with the same position gap.
bool recurrence_covers(const StatisticSpec& stat) {
    return stat.tag == StatisticSpec::Tag::Ninvsum || stat.tag == StatisticSpec::Tag::Invsum;
}

std::optional<IntPoly> try_closed(const StatisticSpec& stat, int n) {
    using Tag = StatisticSpec::Tag;
    switch (stat.tag) {
        case Tag::InvK:
        case Tag::NinvK:
            // k-step non-inversions share the k-step inversion distribution.
            return H_closed(n, *stat.k);
        case Tag::InvLeK:
            if (*stat.k >= n - 1 && n >= 2) return J_special(n, JSpecialCase::KEqNMinus1);
            if (*stat.k == 1) return J_special(n, JSpecialCase::KEq1);
            if (*stat.k == n - 2 && n >= 3) return J_special(n, JSpecialCase::KEqNMinus2);
            return std::nullopt;
        case Tag::ModinvDK:
            if (*stat.d == 2 && *stat.k == n - 1 && n >= 2) return L_n2_nminus1(n);
            return std::nullopt;
        case Tag::IpcniK:
            if (*stat.k == n - 1 && n >= 2) return K_last(n);
            if (*stat.k == n - 2 && n >= 4) return K_second_last(n);
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

}  // namespace

IntPoly distribution(const DistributionRequest& req) {
    switch (req.method) {
        case DistMethod::Brute:
            return dist_brute(req.stat, req.n, req.jobs);
        case DistMethod::Recurrence:
            if (!recurrence_covers(req.stat))
                throw OutOfRange("no recurrence covers statistic " + req.stat.name());
            return N_recurrence(req.n);
        case DistMethod::Closed: {
            auto p = try_closed(req.stat, req.n);
            if (!p) throw OutOfRange("no closed form covers this request");
            return *p;
        }
        case DistMethod::Auto: {
            if (auto p = try_closed(req.stat, req.n)) return *p;
            if (recurrence_covers(req.stat)) return N_recurrence(req.n);
            return dist_brute(req.stat, req.n, req.jobs);
        }
    }
    throw OutOfRange("distribution: bad method");
}

}  // namespace permstat
