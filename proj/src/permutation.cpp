#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace permstat {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = static_cast<int>(vals_.size());
    if (n == 0) throw NotAPermutation("rank-0 permutation is not allowed");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : vals_) {
        if (v < 1 || v > n)
            throw NotAPermutation("entry " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw NotAPermutation("duplicate entry " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw NotAPermutation("identity requires rank >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    const bool has_sep =
        std::any_of(cleaned.begin(), cleaned.end(), [](unsigned char c) { return std::isspace(c); });

    std::vector<int> vals;
    if (has_sep) {
        std::istringstream in(cleaned);
        std::string tok;
        while (in >> tok) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw NotAPermutation("bad token '" + tok + "'");
            }
            if (pos != tok.size() || v < 1) throw NotAPermutation("bad token '" + tok + "'");
            vals.push_back(v);
        }
    } else {
        // Compact digit form, unambiguous only when every entry is a single digit.
        for (char c : cleaned) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw NotAPermutation("bad character in compact form");
            vals.push_back(c - '0');
        }
    }
    if (vals.empty()) throw NotAPermutation("empty input");
    return Permutation(std::move(vals));
}

Permutation Permutation::reverse() const {
    std::vector<int> v(vals_.rbegin(), vals_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::complement() const {
    const int n = rank();
    std::vector<int> v(vals_.size());
    std::transform(vals_.begin(), vals_.end(), v.begin(), [n](int x) { return n + 1 - x; });
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(vals_.size());
    for (int i = 1; i <= rank(); ++i) v[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& rho) const {
    if (rank() != rho.rank()) throw RankMismatch("compose: ranks differ");
    std::vector<int> v(vals_.size());
    for (int k = 1; k <= rank(); ++k) v[static_cast<size_t>(k) - 1] = (*this)(rho(k));
    return Permutation(std::move(v));
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vals_[i]);
    }
    return out;
}

Permutation symmetry(const Permutation& p, Symmetry kind) {
    switch (kind) {
        case Symmetry::Reverse: return p.reverse();
        case Symmetry::Complement: return p.complement();
        case Symmetry::Inverse: return p.inverse();
    }
    throw OutOfRange("unknown symmetry kind");
}

Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
    std::vector<int> v = pi.values();
    const int shift = pi.rank();
    for (int x : sigma.values()) v.push_back(x + shift);
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& pi, const Permutation& sigma) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(pi.rank() + sigma.rank()));
    const int shift = sigma.rank();
    for (int x : pi.values()) v.push_back(x + shift);
    for (int x : sigma.values()) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation flatten(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotAPermutation("flatten: duplicate entries");
    std::vector<int> out(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        out[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin() + 1);
    }
    return Permutation(std::move(out));
}

long long dot(const Permutation& pi, const Permutation& rho) {
    if (pi.rank() != rho.rank()) throw RankMismatch("dot: ranks differ");
    long long s = 0;
    for (int i = 1; i <= pi.rank(); ++i) s += static_cast<long long>(pi(i)) * rho(i);
    return s;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

int enumeration_cap() {
    if (const char* env = std::getenv("PERMSTAT_MAX_RANK")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 10;
}

Permutation unrank(int n, std::uint64_t index) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    std::uint64_t rem = index;
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto digit = static_cast<size_t>(rem / block);
        rem %= block;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation(std::move(out));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    for_each_permutation_range(n, 0, factorial(n), fn);
}

void for_each_permutation_range(int n, std::uint64_t begin, std::uint64_t end,
                                const std::function<void(const Permutation&)>& fn) {
    if (n < 1) throw OutOfRange("enumerate: rank must be >= 1");
    if (n > enumeration_cap())
        throw RankCapExceeded("enumerate: rank " + std::to_string(n) + " exceeds cap " +
                              std::to_string(enumeration_cap()));
    if (begin >= end) return;
    std::vector<int> cur = unrank(n, begin).values();
    for (std::uint64_t i = begin; i < end; ++i) {
        fn(Permutation(cur));
        std::next_permutation(cur.begin(), cur.end());
    }
}

}  // namespace permstat
