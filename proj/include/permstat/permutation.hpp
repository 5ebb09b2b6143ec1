#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "permstat/errors.hpp"

namespace permstat {

/// A permutation in one-line notation. Positions and values are 1-indexed;
/// rank 0 is disallowed. Immutable after construction.
class Permutation {
public:
    /// Validates that `values` is a rearrangement of 1..n, n >= 1.
    explicit Permutation(std::vector<int> values);

    /// Identity permutation 1 2 ... n.
    static Permutation identity(int n);

    /// Parses "3 1 4 5 6 2" (whitespace or commas) or a compact digit
    /// string like "314562" (accepted only when every entry is <= 9).
    static Permutation parse(const std::string& text);

    int rank() const { return static_cast<int>(vals_.size()); }

    /// Value at 1-indexed position i.
    int operator()(int i) const { return vals_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& values() const { return vals_; }

    Permutation reverse() const;
    Permutation complement() const;
    Permutation inverse() const;

    /// Composition: result(k) = (*this)(rho(k)). Ranks must match.
    Permutation compose(const Permutation& rho) const;

    /// Canonical text form with single spaces: "3 1 4 5 6 2".
    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.vals_ == b.vals_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.vals_ < b.vals_;
    }

private:
    std::vector<int> vals_;
};

enum class Symmetry { Reverse, Complement, Inverse };

Permutation symmetry(const Permutation& p, Symmetry kind);

/// pi followed by sigma with sigma's values shifted up by |pi|.
Permutation direct_sum(const Permutation& pi, const Permutation& sigma);

/// pi with its values shifted up by |sigma|, followed by sigma.
Permutation skew_sum(const Permutation& pi, const Permutation& sigma);

/// Order-isomorphic permutation of 1..length. Entries must be distinct.
Permutation flatten(std::span<const int> values);

/// Sum of pi(i) * rho(i). Ranks must match.
long long dot(const Permutation& pi, const Permutation& rho);

std::uint64_t factorial(int n);

/// Enumeration cap for exhaustive S_n sweeps. Defaults to 10; the
/// PERMSTAT_MAX_RANK environment variable overrides it.
int enumeration_cap();

/// Permutation at 0-based lexicographic index in S_n (factorial number system).
Permutation unrank(int n, std::uint64_t index);

/// Visits all of S_n in lexicographic order. Throws RankCapExceeded when n
/// exceeds the enumeration cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Visits the lexicographic index range [begin, end) of S_n. Used to split
/// a sweep into disjoint sub-streams for parallel consumers.
void for_each_permutation_range(int n, std::uint64_t begin, std::uint64_t end,
                                const std::function<void(const Permutation&)>& fn);

}  // namespace permstat
