#pragma once

#include <array>

#include "permstat/permutation.hpp"

namespace permstat {

/// The 16 positive integers that are not the dot product of any permutation
/// with the identity of its rank.
const std::array<long long, 16>& excluded_cosines();

bool cosine_achievable(long long k);

/// Largest n with C(n+2,3) <= k, found by exact integer search.
int rank_for(long long k);

/// The fixed table of rank-4 permutations with ninvsum(nu(m)) = m, 0 <= m <= 10.
Permutation nu(int m);

/// Explicit small-k witness: a permutation with dot product k, for
/// achievable k < 35.
Permutation eta(long long k);

/// Permutation of rank n with non-inversion sum m, built by the direct/skew
/// sum recursion. Requires n >= 4 and 0 <= m <= C(n+1,3).
Permutation zeta(long long m, int n);

/// Permutation whose dot product with the identity of its rank equals k.
/// The result is re-verified before returning. Throws NotAchievable for the
/// 16 excluded values.
Permutation construct(long long k);

/// Number of permutations (over all qualifying ranks) whose dot product with
/// the identity equals k. Throws RankCapExceeded when a qualifying rank
/// exceeds max_rank.
long long count_with_cosine(long long k, int max_rank);

}  // namespace permstat
