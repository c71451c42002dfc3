#pragma once

// Offset coordinates around floor(n/3).
//
// For n >= 1 let X_n be the integers strictly between n/3 and n/2. Shifting by
// floor(n/3) maps X_n onto {1, ..., d_n}; elements at or below floor(n/3) land on
// nonpositive offsets. A candidate set A is then described by the offsets removed
// from X_n and the nonpositive offsets inserted.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numbers.hpp"
#include "semigroup.hpp"

namespace hseq {

/// Number of integers strictly between n/3 and n/2; the length of row n is d_n + 1.
constexpr Int d_of(Int n) { return floor_div(n - 1, 2) - floor_div(n, 3); }

struct NFrame {
    Int n;
    Int b;         // n mod 3
    Int floor_n3;  // floor(n/3)
    Int d;         // |X_n|

    Int first() const { return floor_n3 + 1; }
    Int last() const { return floor_n3 + d; }

    GenSet x_set() const {
        std::vector<Int> xs;
        for (Int x = first(); x <= last(); ++x) xs.push_back(x);
        return GenSet(std::move(xs));
    }
};

inline NFrame frame(Int n) {
    if (n < 1) throw std::invalid_argument("frame: n must be positive");
    return NFrame{n, n % 3, n / 3, d_of(n)};
}

/// Sorted set of signed offsets.
using OffsetSet = std::vector<Int>;

inline OffsetSet offset_form(const GenSet& a, Int n) {
    OffsetSet out;
    out.reserve(a.size());
    for (Int x : a) out.push_back(x - n / 3);
    return out;
}

/// Removing and inserting sets for a fixed n, both in offset form.
struct RIPair {
    OffsetSet removing;   // subset of {1, ..., d}
    OffsetSet inserting;  // subset of {1 - floor(n/3), ..., 0}

    friend bool operator==(const RIPair&, const RIPair&) = default;
};

inline void check_ri_pair(const RIPair& p, const NFrame& f) {
    auto sorted_unique = [](const OffsetSet& s) {
        return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
    };
    if (!sorted_unique(p.removing) || !sorted_unique(p.inserting))
        throw std::invalid_argument("RIPair: offsets must be strictly increasing");
    if (!p.removing.empty() && (p.removing.front() < 1 || p.removing.back() > f.d))
        throw std::invalid_argument("RIPair: removing offset outside {1, ..., d}");
    // Offset -floor(n/3) would be the integer 0, which is not a generator.
    if (!p.inserting.empty() && (p.inserting.front() < 1 - f.floor_n3 || p.inserting.back() > 0))
        throw std::invalid_argument("RIPair: inserting offset outside {1 - floor(n/3), ..., 0}");
}

/// (X_n \ A, A \ X_n) in offset form. Rejects A with an element >= n/2.
inline RIPair to_ri_pair(const GenSet& a, Int n) {
    const NFrame f = frame(n);
    RIPair p;
    for (Int x : a) {
        if (2 * x >= n)
            throw std::invalid_argument("to_ri_pair: element " + std::to_string(x) + " is not below n/2");
        if (x <= f.floor_n3) p.inserting.push_back(x - f.floor_n3);
    }
    for (Int off = 1; off <= f.d; ++off)
        if (!a.has(f.floor_n3 + off)) p.removing.push_back(off);
    return p;
}

/// (X_n \ R) ∪ I.
inline GenSet from_ri_pair(const RIPair& p, Int n) {
    const NFrame f = frame(n);
    check_ri_pair(p, f);
    std::vector<Int> elems;
    for (Int off : p.inserting) elems.push_back(f.floor_n3 + off);
    for (Int off = 1; off <= f.d; ++off)
        if (!std::binary_search(p.removing.begin(), p.removing.end(), off)) elems.push_back(f.floor_n3 + off);
    return GenSet(std::move(elems));
}

/// A lies strictly inside (n/4, n/2).
inline bool is_strongly_bounded(const GenSet& a, Int n) {
    return std::all_of(a.begin(), a.end(), [n](Int x) { return 4 * x > n && 2 * x < n; });
}

/// b = x + y + z for some x, y, z in `offsets`, repetition allowed.
inline bool in_3sumset(Int b, const OffsetSet& offsets) {
    std::set<Int> s(offsets.begin(), offsets.end());
    for (auto i = s.begin(); i != s.end(); ++i)
        for (auto j = i; j != s.end(); ++j) {
            Int z = b - *i - *j;
            if (z < *j) break;
            if (s.count(z)) return true;
        }
    return false;
}

/// Requirements on the removing set implied by an inserting set.
///
/// Every forced offset must be removed from X_n, and every clause {y, z} must have
/// at least one of its offsets removed. Offsets above d never belong to the set in
/// the first place, so they are satisfied for free by any frame with d below them.
struct ConstraintSystem {
    OffsetSet forced;                           // sorted, all >= 1
    std::vector<std::pair<Int, Int>> clauses;   // y < z, sorted, none touching `forced`

    /// Largest offset mentioned, or 0 when unconstrained.
    Int max_offset() const {
        Int m = forced.empty() ? 0 : forced.back();
        for (auto [y, z] : clauses) m = std::max(m, z);
        return m;
    }

    /// True iff removing exactly `removing` from {1, ..., d} satisfies every requirement.
    bool satisfied_by(const OffsetSet& removing, Int d) const {
        auto excluded = [&](Int e) {
            return e > d || std::binary_search(removing.begin(), removing.end(), e);
        };
        return std::all_of(forced.begin(), forced.end(), excluded) &&
               std::all_of(clauses.begin(), clauses.end(),
                           [&](auto c) { return excluded(c.first) || excluded(c.second); });
    }

    friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

/// Builds the removal requirements for inserting offsets `inserting` (all <= 0) and
/// residue b. Returns nullopt when a requirement lands on a nonpositive offset, which
/// no removing set can satisfy (only b = 0 with offset 0 inserted does this).
inline std::optional<ConstraintSystem> constraint_system(const OffsetSet& inserting, Int b) {
    std::set<Int> forced;
    for (auto i = inserting.begin(); i != inserting.end(); ++i) {
        const Int alpha = *i;
        if (alpha > 0) throw std::invalid_argument("constraint_system: inserting offsets must be <= 0");
        forced.insert(b - 2 * alpha);                                // alpha + alpha + z
        if (mod_floor(alpha - b, 2) == 0) forced.insert((b - alpha) / 2);  // alpha + y + y
        for (auto j = std::next(i); j != inserting.end(); ++j)       // alpha + beta + z
            forced.insert(b - alpha - *j);
    }
    if (!forced.empty() && *forced.begin() < 1) return std::nullopt;

    std::set<std::pair<Int, Int>> clauses;
    for (Int alpha : inserting) {
        const Int c = b - alpha;
        for (Int y = 1; 2 * y < c; ++y) {  // alpha + y + (c - y), y < c - y
            if (forced.count(y) || forced.count(c - y)) continue;
            clauses.emplace(y, c - y);
        }
    }
    return ConstraintSystem{OffsetSet(forced.begin(), forced.end()),
                            std::vector<std::pair<Int, Int>>(clauses.begin(), clauses.end())};
}

/// b_n is not in 3A for the set A described by p, checked on A's offsets directly.
inline bool compatible_direct(const RIPair& p, Int n) {
    const NFrame f = frame(n);
    check_ri_pair(p, f);
    OffsetSet offsets = p.inserting;
    for (Int off = 1; off <= f.d; ++off)
        if (!std::binary_search(p.removing.begin(), p.removing.end(), off)) offsets.push_back(off);
    return !in_3sumset(f.b, offsets);
}

/// Same predicate, decided through the removal requirements of p.inserting.
inline bool compatible_by_constraints(const RIPair& p, Int n) {
    const NFrame f = frame(n);
    check_ri_pair(p, f);
    auto cs = constraint_system(p.inserting, f.b);
    return cs && cs->satisfied_by(p.removing, f.d);
}

inline bool compatible(const RIPair& p, Int n) { return compatible_direct(p, n); }

/// 1 + ceil((b - alpha - 1) / 2): the fewest removals that make inserting alpha
/// alone compatible. For b = 0 and alpha = 0 no removing set works at all
/// (0 + 0 + 0 = b); the formula still evaluates to 1 there.
constexpr Int removal_degree(Int alpha, Int b) {
    if (alpha > 0) throw std::invalid_argument("removal_degree: alpha must be <= 0");
    return 1 + ceil_div(b - alpha - 1, 2);
}

/// Smallest inserting offset a set of size >= d_n - k can use: b - 2k - 1.
constexpr Int p_of_k(Int k, Int b) { return b - 2 * k - 1; }

/// Sets of size d_n - k that work for n are strongly n-bounded once n exceeds this.
constexpr Int threshold(Int k, Int b) { return 24 * k + 12 - 8 * b; }

/// Smallest m > threshold(k, b) with m = b (mod 3) and m >= 1.
constexpr Int first_valid(Int k, Int b) {
    Int m = std::max<Int>(threshold(k, b) + 1, 1);
    while (m % 3 != b) ++m;
    return m;
}

}  // namespace hseq
