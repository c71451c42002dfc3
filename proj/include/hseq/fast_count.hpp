#pragma once

// h_{m, d_m - k} above the strong-boundedness threshold.
//
// Past 24k + 12 - 8b every set of size d_m - k that works for m is strongly
// m-bounded, and its inserting offsets lie in {b - 2k - 1, ..., 0}. For such sets
// working is equivalent to b not being a sum of three offsets, which in turn is a
// constraint system on the removing set. So the count is a sum, over inserting
// sets I, of the number of removing sets of size |I| + k meeting I's constraints.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"
#include "parallel.hpp"
#include "ri_core.hpp"

namespace hseq {

namespace detail {

// Counts subsets T of `free_elems` that hit every clause, bucketed by |T| <= max_size.
class ClauseCoverCounter {
public:
    ClauseCoverCounter(const std::vector<Int>& elems, const std::vector<std::pair<Int, Int>>& clauses,
                       std::size_t max_size)
        : partners_(elems.size()), chosen_(elems.size(), false), counts_(max_size + 1, 0) {
        auto index_of = [&](Int e) {
            return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
        };
        // Record each clause at its later element, so it can be checked once both are decided.
        for (auto [y, z] : clauses) {
            const std::size_t iy = index_of(y), iz = index_of(z);  // y < z
            partners_[iz].push_back(iy);
        }
    }

    const std::vector<std::uint64_t>& run() {
        descend(0, 0);
        return counts_;
    }

private:
    void descend(std::size_t i, std::size_t size) {
        if (i == chosen_.size()) {
            ++counts_[size];
            return;
        }
        if (size + 1 < counts_.size()) {
            chosen_[i] = true;
            descend(i + 1, size + 1);
            chosen_[i] = false;
        }
        bool can_skip = std::all_of(partners_[i].begin(), partners_[i].end(),
                                    [&](std::size_t j) { return chosen_[j]; });
        if (can_skip) descend(i + 1, size);
    }

    std::vector<std::vector<std::size_t>> partners_;
    std::vector<bool> chosen_;
    std::vector<std::uint64_t> counts_;
};

}  // namespace detail

/// Number of R ⊆ {1, ..., d} with |R| = target_size, forced ⊆ R, and every clause hit.
///
/// Only the constrained offsets are enumerated; the remaining d - |U| offsets are
/// free and contribute a binomial factor.
inline BigInt count_completions(const ConstraintSystem& cs, Int target_size, Int d) {
    if (d < 0 || target_size < 0) throw std::invalid_argument("count_completions: negative size");
    if (cs.max_offset() > d)
        throw std::out_of_range("count_completions: constrained offset " + std::to_string(cs.max_offset()) +
                                " exceeds d = " + std::to_string(d));
    if (!cs.forced.empty() && cs.forced.front() < 1)
        throw std::invalid_argument("count_completions: constrained offsets must be positive");

    const Int n_forced = static_cast<Int>(cs.forced.size());
    if (n_forced > target_size) return 0;

    std::vector<Int> clause_elems;
    for (auto [y, z] : cs.clauses) {
        clause_elems.push_back(y);
        clause_elems.push_back(z);
    }
    std::sort(clause_elems.begin(), clause_elems.end());
    clause_elems.erase(std::unique(clause_elems.begin(), clause_elems.end()), clause_elems.end());

    const Int universe = n_forced + static_cast<Int>(clause_elems.size());
    const Int free_slots = d - universe;
    const Int budget = target_size - n_forced;

    detail::ClauseCoverCounter counter(clause_elems, cs.clauses, static_cast<std::size_t>(budget));
    const auto& by_size = counter.run();

    BigInt total = 0;
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        if (by_size[s] == 0) continue;
        const Int rest = budget - static_cast<Int>(s);
        if (rest > free_slots) continue;
        total += BigInt(by_size[s]) * binomial(free_slots, rest);
    }
    return total;
}

/// h_{m, d_m - k}; requires m > 24k + 12 - 8b and k <= d_m.
///
/// Inserting sets are the parallel axis. The per-set counts are summed in subset
/// order, so the result is the same for every `jobs`.
inline BigInt fast_h(Int m, Int k, unsigned jobs = 0) {
    if (m < 1) throw std::invalid_argument("fast_h: m must be positive");
    if (k < 0) throw std::invalid_argument("fast_h: k must be nonnegative");
    const NFrame f = frame(m);
    const Int bound = threshold(k, f.b);
    if (m <= bound) throw ThresholdError(m, k, bound);
    if (k > f.d)
        throw std::invalid_argument("fast_h: k = " + std::to_string(k) + " exceeds d_m = " + std::to_string(f.d));

    // Inserting offsets range over {lo, ..., 0}; lo > 0 leaves only the empty set.
    const Int lo = p_of_k(k, f.b);
    const Int width = lo > 0 ? 0 : 1 - lo;
    if (width > 40) throw std::length_error("fast_h: too many inserting offsets");
    const std::uint64_t n_subsets = std::uint64_t{1} << width;

    auto per_subset = [&](std::size_t mask) -> BigInt {
        OffsetSet inserting;
        for (Int bit = 0; bit < width; ++bit)
            if ((mask >> bit) & 1u) inserting.push_back(lo + bit);
        const Int target = static_cast<Int>(inserting.size()) + k;
        if (target > f.d) return 0;
        auto cs = constraint_system(inserting, f.b);
        if (!cs) return 0;
        return count_completions(*cs, target, f.d);
    };

    auto counts = parallel_map(static_cast<std::size_t>(n_subsets), jobs, per_subset);
    BigInt total = 0;
    for (const auto& c : counts) total += c;
    return total;
}

}  // namespace hseq
