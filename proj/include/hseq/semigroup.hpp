#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numbers.hpp"

namespace hseq {

/// A finite set of positive integers, kept sorted and duplicate free.
///
/// The empty set is a valid value and generates the trivial semigroup {0}.
class GenSet {
public:
    GenSet() = default;

    GenSet(std::initializer_list<Int> elems) : GenSet(std::vector<Int>(elems)) {}

    /// Accepts any order and drops duplicates; throws on a non-positive element.
    explicit GenSet(std::vector<Int> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (!elems_.empty() && elems_.front() < 1)
            throw std::invalid_argument("GenSet: elements must be positive, got " +
                                        std::to_string(elems_.front()));
    }

    std::span<const Int> elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    Int min() const { return elems_.front(); }
    Int max() const { return elems_.back(); }

    bool has(Int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    friend bool operator==(const GenSet&, const GenSet&) = default;

private:
    std::vector<Int> elems_;
};

/// Indicator of <A> restricted to [0, bound], one bit per integer.
class MembershipTable {
public:
    /// Table of the trivial semigroup {0} on [0, bound].
    explicit MembershipTable(Int bound) : bound_(bound), words_(word_count(bound), 0) {
        if (bound < 0) throw std::invalid_argument("MembershipTable: negative bound");
        words_[0] = 1;
    }

    MembershipTable(const GenSet& gens, Int bound) : MembershipTable(bound) {
        for (Int g : gens) add_in_place(g);
    }

    Int bound() const noexcept { return bound_; }

    bool test(Int t) const {
        if (t < 0 || t > bound_) throw std::out_of_range("MembershipTable: index out of range");
        return (words_[t >> 6] >> (t & 63)) & 1u;
    }

    /// Table of <A ∪ {g}>.
    MembershipTable extended(Int g) const {
        MembershipTable copy = *this;
        copy.add_in_place(g);
        return copy;
    }

    /// Number of members of <A> in [0, bound].
    Int count() const {
        Int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }

    friend bool operator==(const MembershipTable&, const MembershipTable&) = default;

private:
    static std::size_t word_count(Int bound) { return static_cast<std::size_t>(bound / 64 + 1); }

    // Closing under +g: OR in shifts by g, 2g, 4g, ... so that after the shift by
    // 2^j g every multiple c*g with c < 2^(j+1) has been added.
    void add_in_place(Int g) {
        if (g < 1) throw std::invalid_argument("MembershipTable: generator must be positive");
        for (Int s = g; s <= bound_; s *= 2) {
            shift_or(s);
            if (s > bound_ / 2) break;
        }
    }

    void shift_or(Int s) {
        const std::size_t q = static_cast<std::size_t>(s >> 6);
        const unsigned r = static_cast<unsigned>(s & 63);
        if (q >= words_.size()) return;
        for (std::size_t src = words_.size() - q; src-- > 0;) {
            std::uint64_t v = words_[src] << r;
            if (r != 0 && src > 0) v |= words_[src - 1] >> (64 - r);
            words_[src + q] |= v;
        }
        const unsigned tail = static_cast<unsigned>((bound_ & 63) + 1);
        if (tail < 64) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    Int bound_;
    std::vector<std::uint64_t> words_;
};

/// True iff t is a nonnegative integer combination of elements of A.
inline bool contains(const GenSet& a, Int t) {
    if (t < 0) throw std::invalid_argument("contains: t must be nonnegative");
    return MembershipTable(a, t).test(t);
}

/// {a in A : a not in <A \ {a}>}.
///
/// An element can only be generated by strictly smaller ones, so a single pass in
/// increasing order with an incrementally extended table suffices.
inline GenSet minimal_generators(const GenSet& a) {
    if (a.empty()) return {};
    MembershipTable table(a.max());
    std::vector<Int> kept;
    for (Int x : a) {
        if (table.test(x)) continue;
        kept.push_back(x);
        table = table.extended(x);
    }
    return GenSet(std::move(kept));
}

inline Int embedding_dimension(const GenSet& a) {
    return static_cast<Int>(minimal_generators(a).size());
}

/// A works for n: n is not in <A>, every element is below n/2, and A is minimal.
inline bool works_for(const GenSet& a, Int n) {
    if (n < 1) throw std::invalid_argument("works_for: n must be positive");
    if (!a.empty() && 2 * a.max() >= n) return false;
    if (contains(a, n)) return false;
    return minimal_generators(a) == a;
}

}  // namespace hseq
