#pragma once

// Random generating sets: each of 1..M is included independently with probability p.
//
// Three views of E[e(S)], the expected embedding dimension:
//   - the series sum_{n<=M} p (1-p)^floor(n/2) sum_i h_{n,i} p^i over h-rows,
//   - an exhaustive sum over all 2^M subsets (small M only),
//   - a seeded Monte Carlo estimate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "semigroup.hpp"

namespace hseq {

struct ModelConfig {
    Int M = 1;
    double p = 0.5;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (M < 1) throw std::invalid_argument("ModelConfig: M must be positive");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ModelConfig: p must lie in [0, 1]");
        if (trials < 1) throw std::invalid_argument("ModelConfig: trials must be positive");
    }
};

/// Rows keyed by n.
using RowTable = std::map<Int, HRow>;

/// Draw `draw_index` of the model. Its stream is seeded from (seed, draw_index)
/// alone, so a draw never depends on which worker produced it.
inline GenSet sample(const ModelConfig& cfg, std::uint64_t draw_index) {
    cfg.validate();
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(draw_index), static_cast<std::uint32_t>(draw_index >> 32)};
    std::mt19937_64 rng(seq);
    std::bernoulli_distribution coin(cfg.p);
    std::vector<Int> elems;
    for (Int x = 1; x <= cfg.M; ++x)
        if (coin(rng)) elems.push_back(x);
    return GenSet(std::move(elems));
}

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Sample mean and standard error of e(S) over cfg.trials draws.
///
/// Embedding dimensions are integers, so the sums are accumulated exactly and the
/// estimate is identical for every worker count.
inline Estimate mc_embedding_dim(const ModelConfig& cfg, unsigned jobs = 0) {
    cfg.validate();
    constexpr std::uint64_t chunk = 4096;
    const std::uint64_t n_chunks = (cfg.trials + chunk - 1) / chunk;
    struct Sums {
        std::uint64_t s1 = 0, s2 = 0;
    };
    auto partial = parallel_map(static_cast<std::size_t>(n_chunks), jobs, [&](std::size_t c) {
        Sums s;
        const std::uint64_t begin = c * chunk, end = std::min(cfg.trials, begin + chunk);
        for (std::uint64_t t = begin; t < end; ++t) {
            auto e = static_cast<std::uint64_t>(embedding_dimension(sample(cfg, t)));
            s.s1 += e;
            s.s2 += e * e;
        }
        return s;
    });
    Sums total;
    for (auto s : partial) {
        total.s1 += s.s1;
        total.s2 += s.s2;
    }
    const double n = static_cast<double>(cfg.trials);
    const double mean = static_cast<double>(total.s1) / n;
    if (cfg.trials < 2) return {mean, 0.0};
    // Unbiased variance from exact integer moments.
    const long double num = static_cast<long double>(total.s2) -
                            static_cast<long double>(total.s1) * static_cast<long double>(total.s1) / n;
    const double var = std::max(0.0, static_cast<double>(num / (n - 1)));
    return {mean, std::sqrt(var / n)};
}

namespace detail {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

inline const HRow& row_for(const RowTable& rows, Int n) {
    auto it = rows.find(n);
    if (it == rows.end()) throw MissingRowError(n);
    return it->second;
}

}  // namespace detail

/// sum_{n=1}^{M} p (1-p)^floor(n/2) (h_{n,0} + h_{n,1} p + ...), in double precision.
inline double expectation_series(Int M, double p, const RowTable& rows) {
    if (M < 1) throw std::invalid_argument("expectation_series: M must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("expectation_series: p must lie in [0, 1]");
    detail::CompensatedSum total;
    for (Int n = 1; n <= M; ++n) {
        const HRow& row = detail::row_for(rows, n);
        double inner = 0.0;
        for (auto it = row.values.rbegin(); it != row.values.rend(); ++it)
            inner = inner * p + static_cast<double>(*it);
        total.add(p * std::pow(1.0 - p, static_cast<double>(n / 2)) * inner);
    }
    return total.value();
}

/// The same series in exact rational arithmetic.
inline Rational expectation_series_exact(Int M, const Rational& p, const RowTable& rows) {
    if (M < 1) throw std::invalid_argument("expectation_series: M must be positive");
    if (p < 0 || p > 1) throw std::invalid_argument("expectation_series: p must lie in [0, 1]");
    Rational total = 0;
    Rational q_pow = 1;  // (1-p)^floor(n/2)
    for (Int n = 1; n <= M; ++n) {
        if (n % 2 == 0) q_pow *= 1 - p;
        const HRow& row = detail::row_for(rows, n);
        Rational inner = 0;
        for (auto it = row.values.rbegin(); it != row.values.rend(); ++it) inner = inner * p + Rational(*it);
        total += p * q_pow * inner;
    }
    return total;
}

inline constexpr Int kMaxExactM = 22;

/// weights[s] = sum of e(A) over all A ⊆ {1..M} with |A| = s.
inline std::vector<std::uint64_t> embedding_profile(Int M) {
    if (M < 1 || M > kMaxExactM)
        throw std::domain_error("embedding_profile: M must lie in [1, " + std::to_string(kMaxExactM) + "]");
    std::vector<std::uint64_t> weights(static_cast<std::size_t>(M) + 1, 0);
    // Decide 1..M in order; a chosen x is a minimal generator iff x is not yet generated.
    auto walk = [&](auto& self, Int x, const MembershipTable& table, std::size_t size, std::uint64_t dim) -> void {
        if (x > M) {
            weights[size] += dim;
            return;
        }
        self(self, x + 1, table, size, dim);
        if (table.test(x))
            self(self, x + 1, table, size + 1, dim);
        else
            self(self, x + 1, table.extended(x), size + 1, dim + 1);
    };
    walk(walk, 1, MembershipTable(M), 0, 0);
    return weights;
}

/// sum over all A ⊆ {1..M} of p^|A| (1-p)^(M-|A|) e(A); M <= 22.
inline double expectation_exact(Int M, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("expectation_exact: p must lie in [0, 1]");
    const auto weights = embedding_profile(M);
    detail::CompensatedSum total;
    for (std::size_t s = 0; s < weights.size(); ++s)
        total.add(static_cast<double>(weights[s]) * std::pow(p, static_cast<double>(s)) *
                  std::pow(1.0 - p, static_cast<double>(M - static_cast<Int>(s))));
    return total.value();
}

inline Rational expectation_exact_rational(Int M, const Rational& p) {
    const auto weights = embedding_profile(M);
    Rational total = 0;
    for (std::size_t s = 0; s < weights.size(); ++s) {
        Rational term = Rational(weights[s]);
        for (std::size_t i = 0; i < s; ++i) term *= p;
        for (Int i = 0; i < M - static_cast<Int>(s); ++i) term *= 1 - p;
        total += term;
    }
    return total;
}

}  // namespace hseq
