#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permstat/errors.hpp"

namespace permstat {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with exact integer coefficients, stored
/// ascending (index = degree). Normalized: no trailing zero coefficient;
/// the zero polynomial is the single coefficient 0.
class IntPoly {
public:
    IntPoly() : coeffs_{0} {}
    explicit IntPoly(std::vector<BigInt> ascending);

    static IntPoly constant(BigInt c);
    /// c * x^d
    static IntPoly monomial(BigInt c, int d);
    static IntPoly from_ints(std::initializer_list<long long> ascending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    /// Coefficient of x^d (0 beyond the degree).
    const BigInt& coeff(int d) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPoly derivative() const;
    BigInt evaluate(const BigInt& x) const;
    bool palindromic() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly scaled(const BigInt& c) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// Human-readable descending form, e.g. "x^4 + 2x^3 + 2x + 1".
    std::string pretty() const;
    /// {"coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
    std::string to_json() const;
    static IntPoly from_json(const std::string& text);

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

BigInt binomial(long long n, long long k);

/// n-th Eulerian polynomial A_n(x), the descent distribution over S_n.
IntPoly eulerian(int n);

/// Gaussian binomial coefficient [n choose k]_q.
IntPoly q_binomial(int n, int k);

/// [n]_x! = product of (1 + x + ... + x^{j-1}) for j = 1..n.
IntPoly q_factorial(int n);

/// Applies nabla_k = sum_{j=0}^{k} ((j+1)/(k)_j) d^j/dx^j. Every division by
/// the falling factorial (k)_j must be exact; otherwise InexactDivision.
IntPoly nabla(int k, const IntPoly& p);

}  // namespace permstat
