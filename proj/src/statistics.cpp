#include "permstat/statistics.hpp"

#include <algorithm>

namespace permstat {

std::vector<std::pair<int, int>> pairs(const Permutation& p, PairKind kind) {
    std::vector<std::pair<int, int>> out;
    const int n = p.rank();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const bool inv = p(a) > p(b);
            if (inv == (kind == PairKind::Inversions)) out.emplace_back(a, b);
        }
    return out;
}

long long invsum(const Permutation& p) {
    long long s = 0;
    const int n = p.rank();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (p(a) > p(b)) s += b - a;
    return s;
}

long long ninvsum(const Permutation& p) {
    long long s = 0;
    const int n = p.rank();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (p(a) < p(b)) s += b - a;
    return s;
}

long long cosine(const Permutation& p) {
    long long s = 0;
    for (int i = 1; i <= p.rank(); ++i) s += static_cast<long long>(i) * p(i);
    return s;
}

long long inv_k(const Permutation& p, int k) {
    if (k < 1) throw OutOfRange("inv_k: k must be >= 1");
    long long c = 0;
    for (int a = 1; a + k <= p.rank(); ++a)
        if (p(a) > p(a + k)) ++c;
    return c;
}

long long ninv_k(const Permutation& p, int k) {
    if (k < 1) throw OutOfRange("ninv_k: k must be >= 1");
    long long c = 0;
    for (int a = 1; a + k <= p.rank(); ++a)
        if (p(a) < p(a + k)) ++c;
    return c;
}

long long inv_k1k2(const Permutation& p, int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw OutOfRange("inv_k1k2: k1, k2 must be >= 1");
    long long c = 0;
    for (int a = 1; a + k1 <= p.rank(); ++a)
        if (p(a) - p(a + k1) == k2) ++c;
    return c;
}

long long inv_le_k(const Permutation& p, int k) {
    if (k < 1) throw OutOfRange("inv_le_k: k must be >= 1");
    long long c = 0;
    for (int a = 1; a < p.rank(); ++a)
        for (int b = a + 1; b <= std::min(p.rank(), a + k); ++b)
            if (p(a) > p(b)) ++c;
    return c;
}

long long modinv_dk(const Permutation& p, int d, int k) {
    if (d < 2) throw OutOfRange("modinv_dk: d must be >= 2");
    if (k < 1) throw OutOfRange("modinv_dk: k must be >= 1");
    long long c = 0;
    for (int a = 1; a + k <= p.rank(); ++a)
        if (p(a) > p(a + k) && p(a) % d == 0) ++c;
    return c;
}

long long certified_ninv_k(const Permutation& p, int k) {
    if (k < 2) throw OutOfRange("certified_ninv_k: k must be >= 2");
    long long c = 0;
    for (int a = 1; a + k <= p.rank(); ++a) {
        const int b = a + k;
        if (p(a) >= p(b)) continue;
        int interior_max = 0;
        for (int m = a + 1; m < b; ++m) interior_max = std::max(interior_max, p(m));
        if (interior_max > p(b)) ++c;
    }
    return c;
}

long long ipcni_k(const Permutation& p, int k) {
    if (k < 1) throw OutOfRange("ipcni_k: k must be >= 1");
    return inv_k(p, k) + (k >= 2 ? certified_ninv_k(p, k) : 0);
}

std::vector<int> lb_vector(const Permutation& p, LbVariant variant, std::optional<int> k) {
    const int n = p.rank();
    if (variant != LbVariant::Base) {
        if (!k) throw OutOfRange("lb_vector: variant requires parameter k");
        if (*k < 1) throw OutOfRange("lb_vector: k must be >= 1");
    }
    std::vector<int> out(static_cast<size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        int& coord = out[static_cast<size_t>(j) - 1];
        switch (variant) {
            case LbVariant::Base:
                for (int i = j - 1; i >= 1; --i)
                    if (p(i) > p(j)) {
                        coord = i;
                        break;
                    }
                break;
            case LbVariant::GeK:
                for (int i = j - *k; i >= 1; --i)
                    if (p(i) > p(j)) {
                        coord = i;
                        break;
                    }
                break;
            case LbVariant::LeK: {
                // Window of gaps 1..k; coordinate counts positions from the
                // window's left wall up to the rightmost inversion in it.
                const int wall = std::max(0, j - *k - 1);
                for (int i = j - 1; i > wall; --i)
                    if (p(i) > p(j)) {
                        coord = i - wall;
                        break;
                    }
                break;
            }
            case LbVariant::EqK:
                if (j > *k && p(j - *k) > p(j)) coord = 1;
                break;
        }
    }
    return out;
}

long long lbsum(const Permutation& p, LbVariant variant, std::optional<int> k) {
    long long s = 0;
    for (int c : lb_vector(p, variant, k)) s += c;
    return s;
}

std::vector<Permutation> k_step_runs(const Permutation& p, int k) {
    const int n = p.rank();
    if (k < 1 || k > n) throw OutOfRange("k_step_runs: need 1 <= k <= n");
    std::vector<Permutation> runs;
    runs.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) {
        std::vector<int> vals;
        for (int pos = i; pos <= n; pos += k) vals.push_back(p(pos));
        runs.push_back(flatten(vals));
    }
    return runs;
}

std::vector<long long> zone_vector(const Permutation& p, PairKind kind, bool augmented) {
    const int n = p.rank();
    std::vector<long long> z(static_cast<size_t>(std::max(0, n - 1)), 0);
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const bool inv = p(a) > p(b);
            if (inv != (kind == PairKind::Inversions)) continue;
            for (int c = a; c < b; ++c) ++z[static_cast<size_t>(c) - 1];
        }
    if (!augmented) return z;
    std::vector<long long> out;
    out.reserve(z.size() + 2);
    out.push_back(0);
    out.insert(out.end(), z.begin(), z.end());
    out.push_back(0);
    return out;
}

Permutation from_augmented_ninv_zone_vector(const std::vector<long long>& v) {
    if (v.size() < 2) throw NotARealizableVector("vector too short");
    if (v.front() != 0 || v.back() != 0)
        throw NotARealizableVector("augmented vector must start and end with 0");
    const int n = static_cast<int>(v.size()) - 1;
    std::vector<int> vals(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const long long pk = n - (k - 1) - (v[static_cast<size_t>(k)] - v[static_cast<size_t>(k) - 1]);
        if (pk < 1 || pk > n) throw NotARealizableVector("formula output not in 1..n");
        vals[static_cast<size_t>(k) - 1] = static_cast<int>(pk);
    }
    Permutation p = [&] {
        try {
            return Permutation(std::move(vals));
        } catch (const NotAPermutation&) {
            throw NotARealizableVector("formula output is not a permutation");
        }
    }();
    if (zone_vector(p, PairKind::NonInversions, true) != v)
        throw NotARealizableVector("round-trip mismatch: vector is not realizable");
    return p;
}

Permutation insert_max(const Permutation& p, int k) {
    const int n = p.rank();
    if (k < 0 || k > n) throw OutOfRange("insert_max: need 0 <= k <= n");
    std::vector<int> vals = p.values();
    vals.insert(vals.begin() + k, n + 1);
    return Permutation(std::move(vals));
}

StatisticSpec StatisticSpec::parse(const std::string& name, std::optional<int> k,
                                   std::optional<int> k2, std::optional<int> d,
                                   const std::optional<std::string>& variant) {
    StatisticSpec s;
    if (name == "invsum") s.tag = Tag::Invsum;
    else if (name == "ninvsum") s.tag = Tag::Ninvsum;
    else if (name == "cosine") s.tag = Tag::Cosine;
    else if (name == "inv_k") s.tag = Tag::InvK;
    else if (name == "ninv_k") s.tag = Tag::NinvK;
    else if (name == "inv_k1k2") s.tag = Tag::InvK1K2;
    else if (name == "inv_le_k") s.tag = Tag::InvLeK;
    else if (name == "modinv_dk") s.tag = Tag::ModinvDK;
    else if (name == "certified_ninv_k") s.tag = Tag::CertifiedNinvK;
    else if (name == "ipcni_k") s.tag = Tag::IpcniK;
    else if (name == "lbsum") s.tag = Tag::Lbsum;
    else throw OutOfRange("unknown statistic '" + name + "'");

    const bool needs_k = s.tag == Tag::InvK || s.tag == Tag::NinvK || s.tag == Tag::InvK1K2 ||
                         s.tag == Tag::InvLeK || s.tag == Tag::ModinvDK ||
                         s.tag == Tag::CertifiedNinvK || s.tag == Tag::IpcniK;
    if (needs_k && !k) throw OutOfRange(name + " requires --k");
    if (s.tag == Tag::InvK1K2 && !k2) throw OutOfRange("inv_k1k2 requires --k2");
    if (s.tag == Tag::ModinvDK && !d) throw OutOfRange("modinv_dk requires --d");
    s.k = k;
    s.k2 = k2;
    s.d = d;
    if (s.tag == Tag::Lbsum) {
        const std::string v = variant.value_or("base");
        if (v == "base") s.variant = LbVariant::Base;
        else if (v == "ge_k") s.variant = LbVariant::GeK;
        else if (v == "le_k") s.variant = LbVariant::LeK;
        else if (v == "eq_k") s.variant = LbVariant::EqK;
        else throw OutOfRange("unknown lbsum variant '" + v + "'");
        if (s.variant != LbVariant::Base && !k) throw OutOfRange("lbsum variant requires --k");
    }
    return s;
}

std::string StatisticSpec::name() const {
    switch (tag) {
        case Tag::Invsum: return "invsum";
        case Tag::Ninvsum: return "ninvsum";
        case Tag::Cosine: return "cosine";
        case Tag::InvK: return "inv_k";
        case Tag::NinvK: return "ninv_k";
        case Tag::InvK1K2: return "inv_k1k2";
        case Tag::InvLeK: return "inv_le_k";
        case Tag::ModinvDK: return "modinv_dk";
        case Tag::CertifiedNinvK: return "certified_ninv_k";
        case Tag::IpcniK: return "ipcni_k";
        case Tag::Lbsum: return "lbsum";
    }
    return "?";
}

long long evaluate(const StatisticSpec& spec, const Permutation& p) {
    switch (spec.tag) {
        case StatisticSpec::Tag::Invsum: return invsum(p);
        case StatisticSpec::Tag::Ninvsum: return ninvsum(p);
        case StatisticSpec::Tag::Cosine: return cosine(p);
        case StatisticSpec::Tag::InvK: return inv_k(p, *spec.k);
        case StatisticSpec::Tag::NinvK: return ninv_k(p, *spec.k);
        case StatisticSpec::Tag::InvK1K2: return inv_k1k2(p, *spec.k, *spec.k2);
        case StatisticSpec::Tag::InvLeK: return inv_le_k(p, *spec.k);
        case StatisticSpec::Tag::ModinvDK: return modinv_dk(p, *spec.d, *spec.k);
        case StatisticSpec::Tag::CertifiedNinvK: return certified_ninv_k(p, *spec.k);
        case StatisticSpec::Tag::IpcniK: return ipcni_k(p, *spec.k);
        case StatisticSpec::Tag::Lbsum: return lbsum(p, spec.variant, spec.k);
    }
    throw OutOfRange("evaluate: bad tag");
}

}  // namespace permstat
