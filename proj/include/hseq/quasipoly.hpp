#pragma once

// Period-6 quasipolynomials for h_{n, d_n - k}.
//
// With m the first valid modulus above the threshold in the class b = n mod 3,
//   h_{n, d_n - k} = sum_l h_{m, d_m - l} * C(d_n - d_m, k - l)      (n >= m).
// On each residue class mod 6, d_n is linear in n, so substituting it into the
// binomials (as polynomials) gives an exact rational polynomial in n.

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fast_count.hpp"
#include "numbers.hpp"
#include "ri_core.hpp"

namespace hseq {

/// Coefficients in ascending degree.
using Polynomial = std::vector<Rational>;

namespace poly {

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void add_scaled(Polynomial& acc, const Polynomial& p, const Rational& scale) {
    if (acc.size() < p.size()) acc.resize(p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += scale * p[i];
}

inline void trim(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// C(t, j) = t (t - 1) ... (t - j + 1) / j! with t itself a polynomial.
inline Polynomial binomial_of(const Polynomial& t, Int j) {
    Polynomial out{Rational(1)};
    BigInt factorial = 1;
    for (Int i = 0; i < j; ++i) {
        Polynomial factor = t;
        if (factor.empty()) factor.push_back(Rational(0));
        factor[0] -= i;
        out = multiply(out, factor);
        factorial *= i + 1;
    }
    for (auto& c : out) c /= Rational(factorial);
    return out;
}

}  // namespace poly

/// d_n on the residue class of n mod 6, as (n - c) / 6.
inline Polynomial d_polynomial(Int residue) {
    static constexpr std::array<Int, 6> shift{6, 1, 2, 3, 4, -1};
    const Int r = mod_floor(residue, 6);
    return {Rational(-shift[static_cast<std::size_t>(r)], 6), Rational(1, 6)};
}

/// d_n through its quasilinear form; equals floor((n-1)/2) - floor(n/3).
inline Int d_closed_form(Int n) {
    if (n < 1) throw std::invalid_argument("d_closed_form: n must be positive");
    Rational v = poly::evaluate(d_polynomial(n % 6), Rational(n));
    return static_cast<Int>(numerator(v) / denominator(v));
}

/// sum_l tail[l] * C(d_n - d_m, k - l), where tail[l] = h_{m, d_m - l} and k = |tail| - 1.
inline BigInt recurrence_eval(Int m, const std::vector<BigInt>& tail, Int n) {
    if (tail.empty()) throw std::invalid_argument("recurrence_eval: empty tail");
    if (mod_floor(n - m, 3) != 0)
        throw std::invalid_argument("recurrence_eval: n = " + std::to_string(n) + " and m = " +
                                    std::to_string(m) + " differ mod 3");
    if (n < m) throw std::invalid_argument("recurrence_eval: n must be >= m");
    const Int k = static_cast<Int>(tail.size()) - 1;
    const Int gap = d_of(n) - d_of(m);
    BigInt total = 0;
    for (Int l = 0; l <= k; ++l) total += tail[static_cast<std::size_t>(l)] * binomial(gap, k - l);
    return total;
}

class Quasipolynomial {
public:
    static constexpr Int period = 6;

    struct Branch {
        Polynomial coeffs;  // ascending degree
        Int n_min = 0;      // valid for n >= n_min in this class

        friend bool operator==(const Branch&, const Branch&) = default;
    };

    void set_branch(Int residue, Branch branch) {
        poly::trim(branch.coeffs);
        branches_[index(residue)] = std::move(branch);
    }

    const std::optional<Branch>& branch(Int residue) const { return branches_[index(residue)]; }

    bool covers(Int n) const {
        const auto& br = branches_[index(n)];
        return br && n >= br->n_min;
    }

    /// Exact value at n; throws if n is outside every branch or the value is not an integer.
    BigInt eval(Int n) const {
        const auto& br = branches_[index(n)];
        if (!br) throw std::domain_error("qp_eval: residue " + std::to_string(mod_floor(n, period)) + " not covered");
        if (n < br->n_min)
            throw std::domain_error("qp_eval: n = " + std::to_string(n) + " below validity bound " +
                                    std::to_string(br->n_min));
        Rational v = poly::evaluate(br->coeffs, Rational(n));
        if (denominator(v) != 1)
            throw std::logic_error("qp_eval: non-integral value at n = " + std::to_string(n));
        return numerator(v);
    }

    friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;

private:
    static std::size_t index(Int residue) { return static_cast<std::size_t>(mod_floor(residue, period)); }

    std::array<std::optional<Branch>, period> branches_{};
};

inline BigInt qp_eval(const Quasipolynomial& q, Int n) { return q.eval(n); }

/// Quasipolynomial on the two residues mod 6 of class b, from the values
/// tail[l] = h_{m, d_m - l} at m = first_valid(k, b).
inline Quasipolynomial extract_from_tail(Int k, Int b, const std::vector<BigInt>& tail) {
    if (k < 0 || b < 0 || b > 2) throw std::invalid_argument("extract: need k >= 0 and b in {0,1,2}");
    if (static_cast<Int>(tail.size()) != k + 1) throw std::invalid_argument("extract: tail must have k + 1 entries");
    const Int m = first_valid(k, b);
    const Int dm = d_of(m);
    Quasipolynomial q;
    for (Int r : {b, b + 3}) {
        Polynomial gap = d_polynomial(r);
        gap[0] -= dm;
        Polynomial sum;
        for (Int l = 0; l <= k; ++l)
            poly::add_scaled(sum, poly::binomial_of(gap, k - l), Rational(tail[static_cast<std::size_t>(l)]));
        Int n_min = threshold(k, b) + 1;
        while (mod_floor(n_min, 6) != r || n_min < 1) ++n_min;
        q.set_branch(r, {std::move(sum), n_min});
    }
    return q;
}

/// Computes the tail with fast_h at the first valid modulus, then expands.
inline Quasipolynomial extract(Int k, Int b, unsigned jobs = 0) {
    if (k < 0 || b < 0 || b > 2) throw std::invalid_argument("extract: need k >= 0 and b in {0,1,2}");
    const Int m = first_valid(k, b);
    std::vector<BigInt> tail;
    for (Int l = 0; l <= k; ++l) tail.push_back(fast_h(m, l, jobs));
    return extract_from_tail(k, b, tail);
}

/// Common denominator and integer numerator coefficients (ascending) of a polynomial.
struct IntegerForm {
    std::vector<BigInt> numerator;
    BigInt denominator;
};

inline IntegerForm integer_form(const Polynomial& p) {
    BigInt den = 1;
    for (const auto& c : p) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    IntegerForm out{{}, den};
    for (const auto& c : p) out.numerator.push_back(boost::multiprecision::numerator(c * Rational(den)));
    return out;
}

/// "r mod 6: (n^3 + 315n - 2268)/648 for n >= 87", one line per covered residue.
inline std::string to_string(const Quasipolynomial& q) {
    std::ostringstream out;
    for (Int r = 0; r < Quasipolynomial::period; ++r) {
        const auto& br = q.branch(r);
        if (!br) continue;
        const IntegerForm f = integer_form(br->coeffs);
        std::string num;
        for (std::size_t i = f.numerator.size(); i-- > 0;) {
            const BigInt& c = f.numerator[i];
            if (c == 0) continue;
            const BigInt mag = abs(c);
            if (num.empty())
                num += c < 0 ? "-" : "";
            else
                num += c < 0 ? " - " : " + ";
            if (mag != 1 || i == 0) num += mag.str();
            if (i >= 1) num += "n";
            if (i >= 2) num += "^" + std::to_string(i);
        }
        if (num.empty()) num = "0";
        out << r << " mod 6: (" << num << ")/" << f.denominator.str() << " for n >= " << br->n_min << '\n';
    }
    return out.str();
}

}  // namespace hseq
