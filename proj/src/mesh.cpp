#include "permstat/mesh.hpp"

#include <algorithm>

namespace permstat {

namespace {

bool satisfies(MarkedMeshPattern::Cmp cmp, long long count, long long bound) {
    switch (cmp) {
        case MarkedMeshPattern::Cmp::Eq: return count == bound;
        case MarkedMeshPattern::Cmp::Le: return count <= bound;
        case MarkedMeshPattern::Cmp::Ge: return count >= bound;
    }
    return false;
}

bool matches(const MarkedMeshPattern& pat, const Permutation& host,
             const std::vector<int>& positions) {
    const int p = pat.base.rank();
    const int n = host.rank();

    // Order isomorphism with the base pattern.
    std::vector<int> chosen(positions.size());
    for (size_t i = 0; i < positions.size(); ++i) chosen[i] = host(positions[i]);
    if (flatten(chosen) != pat.base) return false;

    // Boundaries with outer sentinels at index 0 and p+1.
    std::vector<int> cols(static_cast<size_t>(p) + 2);
    std::vector<int> rows(static_cast<size_t>(p) + 2);
    cols[0] = rows[0] = 0;
    cols[static_cast<size_t>(p) + 1] = rows[static_cast<size_t>(p) + 1] = n + 1;
    for (int i = 1; i <= p; ++i) cols[static_cast<size_t>(i)] = positions[static_cast<size_t>(i) - 1];
    std::vector<int> sorted_vals = chosen;
    std::sort(sorted_vals.begin(), sorted_vals.end());
    for (int i = 1; i <= p; ++i) rows[static_cast<size_t>(i)] = sorted_vals[static_cast<size_t>(i) - 1];

    for (const auto& [ci, rj] : pat.shaded) {
        for (int t = cols[static_cast<size_t>(ci)] + 1; t < cols[static_cast<size_t>(ci) + 1]; ++t) {
            const int v = host(t);
            if (v > rows[static_cast<size_t>(rj)] && v < rows[static_cast<size_t>(rj) + 1])
                return false;
        }
    }

    for (const auto& c : pat.constraints) {
        long long count = 0;
        const auto& bounds = (c.axis == MarkedMeshPattern::Axis::Column) ? cols : rows;
        for (int b = c.lo; b <= c.hi; ++b)
            count += bounds[static_cast<size_t>(b) + 1] - bounds[static_cast<size_t>(b)] - 1;
        if (!satisfies(c.cmp, count, c.bound)) return false;
    }
    return true;
}

}  // namespace

long long occurrences(const MarkedMeshPattern& pat, const Permutation& host) {
    const int p = pat.base.rank();
    const int n = host.rank();
    if (p > n) return 0;
    long long count = 0;
    std::vector<int> positions(static_cast<size_t>(p));
    // p <= 3 keeps a plain nested enumeration cheap.
    const auto recurse = [&](auto&& self, int depth, int next) -> void {
        if (depth == p) {
            if (matches(pat, host, positions)) ++count;
            return;
        }
        for (int pos = next; pos <= n - (p - depth - 1); ++pos) {
            positions[static_cast<size_t>(depth)] = pos;
            self(self, depth + 1, pos + 1);
        }
    };
    recurse(recurse, 0, 1);
    return count;
}

MarkedMeshPattern builtin(BuiltinPattern which, const BuiltinParams& prm) {
    using Axis = MarkedMeshPattern::Axis;
    using Cmp = MarkedMeshPattern::Cmp;
    switch (which) {
        case BuiltinPattern::KStepInv:
            if (prm.k < 1) throw OutOfRange("builtin kstep_inv: k must be >= 1");
            return {Permutation::parse("21"), {},
                    {{Axis::Column, 1, 1, Cmp::Eq, prm.k - 1}}};
        case BuiltinPattern::LeKStepInv:
            if (prm.k < 1) throw OutOfRange("builtin le_kstep_inv: k must be >= 1");
            return {Permutation::parse("21"), {},
                    {{Axis::Column, 1, 1, Cmp::Le, prm.k - 1}}};
        case BuiltinPattern::K1K2Inv:
            if (prm.k < 1 || prm.k2 < 1) throw OutOfRange("builtin k1k2_inv: need k1, k2 >= 1");
            return {Permutation::parse("21"), {},
                    {{Axis::Column, 1, 1, Cmp::Eq, prm.k - 1},
                     {Axis::Row, 1, 1, Cmp::Eq, prm.k2 - 1}}};
        case BuiltinPattern::ZcvCoord:
            if (prm.k < 1 || prm.n < 2 || prm.k > prm.n - 1)
                throw OutOfRange("builtin zcv_coord: need 1 <= k <= n-1");
            return {Permutation::parse("21"), {},
                    {{Axis::Column, 0, 0, Cmp::Le, prm.k - 1},
                     {Axis::Column, 2, 2, Cmp::Le, prm.n - prm.k - 1}}};
        case BuiltinPattern::ModinvTop:
            if (prm.d < 2 || prm.k < 1 || prm.ell < 1 || prm.d * prm.ell > prm.n)
                throw OutOfRange("builtin modinv_top: bad parameters");
            // Row band above the inversion top pins its value to d*ell.
            return {Permutation::parse("21"), {},
                    {{Axis::Column, 1, 1, Cmp::Eq, prm.k - 1},
                     {Axis::Row, 2, 2, Cmp::Eq, prm.n - prm.d * prm.ell}}};
        case BuiltinPattern::CertifiedKStep:
            if (prm.k < 2) throw OutOfRange("builtin certified_kstep: k must be >= 2");
            // Shading keeps the middle point the interior maximum, so each
            // endpoint pair matches at most once.
            return {Permutation::parse("132"), {{1, 3}, {2, 3}},
                    {{Axis::Column, 1, 2, Cmp::Eq, prm.k - 2}}};
    }
    throw OutOfRange("builtin: unknown pattern");
}

}  // namespace permstat
