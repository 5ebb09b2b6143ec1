#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class PairKind { Inversions, NonInversions };

/// All pairs (a, b), a < b, of the given kind.
std::vector<std::pair<int, int>> pairs(const Permutation& p, PairKind kind);

/// Sum of (b - a) over inversions / non-inversions.
long long invsum(const Permutation& p);
long long ninvsum(const Permutation& p);

/// Dot product with the identity of the same rank.
long long cosine(const Permutation& p);

/// Number of inversions (a, b) with b - a = k; likewise for non-inversions.
long long inv_k(const Permutation& p, int k);
long long ninv_k(const Permutation& p, int k);

/// Inversions with position gap k1 and value drop p(a) - p(b) = k2.
long long inv_k1k2(const Permutation& p, int k1, int k2);

/// Inversions with position gap at most k.
long long inv_le_k(const Permutation& p, int k);

/// k-step inversions whose top value p(a) is divisible by d (d >= 2).
long long modinv_dk(const Permutation& p, int d, int k);

/// Non-inversions (a, b) with gap k >= 2 whose interior maximum exceeds p(b).
long long certified_ninv_k(const Permutation& p, int k);

/// inv_k + certified_ninv_k.
long long ipcni_k(const Permutation& p, int k);

enum class LbVariant { Base, GeK, LeK, EqK };

/// Left boundary vector (one coordinate per position, 0 when no qualifying
/// earlier position exists). Non-base variants require k >= 1.
std::vector<int> lb_vector(const Permutation& p, LbVariant variant, std::optional<int> k = {});

long long lbsum(const Permutation& p, LbVariant variant, std::optional<int> k = {});

/// The k interleaved subsequences of positions congruent mod k, each
/// flattened to a permutation of its own length.
std::vector<Permutation> k_step_runs(const Permutation& p, int k);

/// Zone-crossing vector: coordinate z_k counts pairs (a, b) of the given
/// kind with a <= k < b. The augmented form pads a 0 at each end.
std::vector<long long> zone_vector(const Permutation& p, PairKind kind, bool augmented = false);

/// Reconstructs the permutation whose augmented non-inversion zone-crossing
/// vector is v, via p_k = n - (k-1) - (v_k - v_{k-1}). Throws
/// NotARealizableVector when no permutation has that vector.
Permutation from_augmented_ninv_zone_vector(const std::vector<long long>& v);

/// Inserts the new maximum n+1 between positions k and k+1 (k = 0 prepends).
Permutation insert_max(const Permutation& p, int k);

/// Tagged descriptor of a statistic; drives the generic distribution engine.
struct StatisticSpec {
    enum class Tag {
        Invsum,
        Ninvsum,
        Cosine,
        InvK,
        NinvK,
        InvK1K2,
        InvLeK,
        ModinvDK,
        CertifiedNinvK,
        IpcniK,
        Lbsum,
    };
    Tag tag = Tag::Invsum;
    std::optional<int> k, k2, d;
    LbVariant variant = LbVariant::Base;

    /// Parses the CLI spelling: invsum, ninvsum, cosine, inv_k, ninv_k,
    /// inv_k1k2, inv_le_k, modinv_dk, certified_ninv_k, ipcni_k, lbsum.
    static StatisticSpec parse(const std::string& name, std::optional<int> k,
                               std::optional<int> k2, std::optional<int> d,
                               const std::optional<std::string>& variant);
    std::string name() const;
};

long long evaluate(const StatisticSpec& spec, const Permutation& p);

}  // namespace permstat
