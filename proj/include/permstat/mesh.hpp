#pragma once

#include <set>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// A marked mesh pattern: a classical base pattern of length <= 3 decorated
/// with shaded cells (open rectangles that must contain no letter of the
/// host) and cardinality constraints on bands between consecutive matched
/// positions or values.
struct MarkedMeshPattern {
    enum class Axis { Column, Row };
    enum class Cmp { Eq, Le, Ge };

    /// Counts host letters falling in bands lo..hi (inclusive) of the given
    /// axis; band i lies strictly between matched boundary i and i+1, with
    /// 0 and p+1 as outer sentinels.
    struct BandConstraint {
        Axis axis;
        int lo, hi;
        Cmp cmp;
        long long bound;
    };

    Permutation base;
    std::set<std::pair<int, int>> shaded;  // (column cell, row cell), 0..p each
    std::vector<BandConstraint> constraints;
};

/// Number of index tuples of the host matching the base order-isomorphically
/// with all shaded cells empty and every band constraint satisfied.
long long occurrences(const MarkedMeshPattern& pat, const Permutation& host);

enum class BuiltinPattern {
    KStepInv,       // params: k
    LeKStepInv,     // params: k
    K1K2Inv,        // params: k1 = k, k2
    ZcvCoord,       // params: k, n (host rank)
    ModinvTop,      // params: d, k, n, ell
    CertifiedKStep  // params: k (>= 2)
};

struct BuiltinParams {
    int k = 0;
    int k2 = 0;
    int d = 0;
    int n = 0;
    int ell = 0;
};

/// The pattern whose occurrence count equals the corresponding statistic
/// (for ModinvTop, the statistic is the sum of occurrences over ell >= 1).
MarkedMeshPattern builtin(BuiltinPattern which, const BuiltinParams& params);

}  // namespace permstat
