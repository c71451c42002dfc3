#pragma once

// Exact rows h_{n,0..d_n} by exhaustive search.
//
// Every set that works for n is reached exactly once by a depth-first search that
// appends elements in increasing order: a child appends x > max(A) with x < n/2 and
// x not already in <A> (appending a larger element never makes a smaller one
// redundant), and a branch is cut as soon as n enters <A> since membership only
// grows along a path. Each node visited is a counted set.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "numbers.hpp"
#include "parallel.hpp"
#include "ri_core.hpp"
#include "semigroup.hpp"

namespace hseq {

struct HRow {
    Int n = 0;
    std::vector<BigInt> values;  // values[i] = h_{n,i}, i = 0..d_n

    Int d() const { return static_cast<Int>(values.size()) - 1; }

    /// h_{n,i}, or 0 outside 0..d_n.
    BigInt at(Int i) const {
        return (i < 0 || i >= static_cast<Int>(values.size())) ? BigInt(0) : values[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const HRow&, const HRow&) = default;
};

/// Checks the row length against d_n.
inline void check_row(const HRow& row) {
    if (row.n < 1) throw std::invalid_argument("HRow: n must be positive");
    if (row.d() != d_of(row.n))
        throw std::invalid_argument("HRow: row " + std::to_string(row.n) + " has " +
                                    std::to_string(row.values.size()) + " entries, expected " +
                                    std::to_string(d_of(row.n) + 1));
}

struct SearchStats {
    std::uint64_t nodes = 0;
};

namespace detail {

struct SubtreeCounts {
    std::vector<std::uint64_t> by_size;
    std::uint64_t nodes = 0;
};

inline void count_subtree(Int n, const MembershipTable& table, Int last, std::size_t depth,
                          SubtreeCounts& out) {
    ++out.nodes;
    if (depth >= out.by_size.size()) out.by_size.resize(depth + 1, 0);
    ++out.by_size[depth];
    for (Int x = last + 1; 2 * x < n; ++x) {
        if (table.test(x)) continue;
        MembershipTable next = table.extended(x);
        if (next.test(n)) continue;
        count_subtree(n, next, x, depth + 1, out);
    }
}

template <class Visit>
void visit_subtree(Int n, const MembershipTable& table, std::vector<Int>& path, Visit& visit) {
    visit(GenSet(path));
    const Int last = path.empty() ? 0 : path.back();
    for (Int x = last + 1; 2 * x < n; ++x) {
        if (table.test(x)) continue;
        MembershipTable next = table.extended(x);
        if (next.test(n)) continue;
        path.push_back(x);
        visit_subtree(n, next, path, visit);
        path.pop_back();
    }
}

}  // namespace detail

/// Row n, computed by the pruned search split over the first chosen element.
/// Partial rows are summed in element order, so the result does not depend on `jobs`.
inline HRow h_row(Int n, unsigned jobs = 0, SearchStats* stats = nullptr) {
    if (n < 1) throw std::invalid_argument("h_row: n must be positive");
    const MembershipTable root(n);
    std::vector<Int> firsts;
    for (Int x = 1; 2 * x < n; ++x) firsts.push_back(x);

    auto partials = parallel_map(firsts.size(), jobs, [&](std::size_t i) {
        detail::SubtreeCounts counts;
        const Int x = firsts[i];
        MembershipTable table = root.extended(x);
        if (!table.test(n)) detail::count_subtree(n, table, x, 1, counts);
        return counts;
    });

    const std::size_t len = static_cast<std::size_t>(d_of(n)) + 1;
    std::vector<std::uint64_t> totals(len, 0);
    totals[0] = 1;  // the empty set
    std::uint64_t nodes = 1;
    for (const auto& part : partials) {
        if (part.by_size.size() > len)
            throw std::logic_error("h_row: found a working set larger than d_n for n = " + std::to_string(n));
        for (std::size_t i = 0; i < part.by_size.size(); ++i) totals[i] += part.by_size[i];
        nodes += part.nodes;
    }
    if (stats) stats->nodes = nodes;

    HRow row{n, {}};
    row.values.reserve(len);
    for (auto v : totals) row.values.emplace_back(v);
    return row;
}

inline BigInt row_sum(const HRow& row) {
    return std::accumulate(row.values.begin(), row.values.end(), BigInt(0));
}

/// Calls visit(A) for every A that works for n, in depth-first increasing order.
template <class Visit>
void for_each_working_set(Int n, Visit&& visit) {
    if (n < 1) throw std::invalid_argument("for_each_working_set: n must be positive");
    std::vector<Int> path;
    detail::visit_subtree(n, MembershipTable(n), path, visit);
}

}  // namespace hseq
