#include "permstat/polynomial.hpp"

#include <algorithm>

#include <json.hpp>

namespace permstat {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    normalize();
}

void IntPoly::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    return IntPoly(std::vector<BigInt>{std::move(c)});
}

IntPoly IntPoly::monomial(BigInt c, int d) {
    std::vector<BigInt> v(static_cast<size_t>(d) + 1, 0);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_ints(std::initializer_list<long long> ascending) {
    std::vector<BigInt> v;
    v.reserve(ascending.size());
    for (long long c : ascending) v.emplace_back(c);
    return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(int d) const {
    static const BigInt zero = 0;
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(d)];
}

IntPoly IntPoly::derivative() const {
    if (degree() == 0) return IntPoly();
    std::vector<BigInt> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<int>(i);
    return IntPoly(std::move(v));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool IntPoly::palindromic() const {
    const size_t m = coeffs_.size();
    for (size_t i = 0; i < m / 2; ++i)
        if (coeffs_[i] != coeffs_[m - 1 - i]) return false;
    return true;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
    std::vector<BigInt> v(coeffs_);
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = coeff(d);
        if (c == 0) continue;
        const bool first = out.empty();
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (mag != 1 || d == 0) out += mag.str();
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

std::string IntPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.str());
    return nlohmann::json{{"coeffs", arr}}.dump();
}

IntPoly IntPoly::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<BigInt> v;
    for (const auto& s : j.at("coeffs")) v.emplace_back(s.get<std::string>());
    return IntPoly(std::move(v));
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

IntPoly eulerian(int n) {
    if (n < 1) throw OutOfRange("eulerian: n must be >= 1");
    // A_n = (1 + (n-1)x) A_{n-1} + x(1-x) A'_{n-1}
    IntPoly a = IntPoly::constant(1);
    for (int m = 2; m <= n; ++m) {
        const IntPoly lead = IntPoly::from_ints({1, m - 1});
        const IntPoly x_minus_x2 = IntPoly::from_ints({0, 1, -1});
        a = lead * a + x_minus_x2 * a.derivative();
    }
    return a;
}

IntPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) throw OutOfRange("q_binomial: need 0 <= k <= n");
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<IntPoly> row(static_cast<size_t>(n) + 1);
    row[0] = IntPoly::constant(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            IntPoly upper = (j <= m - 1) ? row[static_cast<size_t>(j)] : IntPoly();
            row[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j) - 1] + IntPoly::monomial(1, j) * upper;
        }
    }
    return row[static_cast<size_t>(k)];
}

IntPoly q_factorial(int n) {
    if (n < 1) throw OutOfRange("q_factorial: n must be >= 1");
    IntPoly p = IntPoly::constant(1);
    for (int j = 2; j <= n; ++j) {
        std::vector<BigInt> ones(static_cast<size_t>(j), 1);
        p *= IntPoly(std::move(ones));
    }
    return p;
}

IntPoly nabla(int k, const IntPoly& p) {
    if (k < 1) throw OutOfRange("nabla: k must be >= 1");
    IntPoly acc;
    IntPoly deriv = p;
    BigInt falling = 1;  // (k)_j
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            deriv = deriv.derivative();
            falling *= (k - (j - 1));
        }
        std::vector<BigInt> term(deriv.coeffs());
        for (auto& c : term) {
            c *= (j + 1);
            if (falling != 1) {
                if (c % falling != 0)
                    throw InexactDivision("nabla: coefficient not divisible by (k)_" +
                                          std::to_string(j));
                c /= falling;
            }
        }
        acc += IntPoly(std::move(term));
        if (deriv.is_zero()) break;
    }
    return acc;
}

}  // namespace permstat
