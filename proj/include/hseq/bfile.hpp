#pragma once

// OEIS b-files: one "index value" pair per line, '#' starts a comment line.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"
#include "ri_core.hpp"

namespace hseq {

struct BFile {
    std::string id;
    std::vector<std::pair<Int, BigInt>> entries;  // indices strictly increasing

    std::optional<BigInt> value(Int index) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), index,
                                   [](const auto& e, Int i) { return e.first < i; });
        if (it == entries.end() || it->first != index) return std::nullopt;
        return it->second;
    }

    Int first_index() const { return entries.empty() ? 0 : entries.front().first; }
};

namespace detail {

inline bool is_integer_token(std::string_view tok) {
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) tok.remove_prefix(1);
    return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace detail

inline BFile parse_bfile(std::string_view text, std::string id = {}) {
    BFile out{std::move(id), {}};
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first.front() == '#') continue;
        std::string second, extra;
        if (!(fields >> second)) throw ParseError(line_no, "expected \"index value\"");
        if (fields >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
        if (!detail::is_integer_token(first)) throw ParseError(line_no, "non-integer index '" + first + "'");
        if (!detail::is_integer_token(second)) throw ParseError(line_no, "non-integer value '" + second + "'");
        Int index = 0;
        try {
            index = std::stoll(first);
        } catch (const std::out_of_range&) {
            throw ParseError(line_no, "index out of range '" + first + "'");
        }
        if (!out.entries.empty() && index <= out.entries.back().first)
            throw ParseError(line_no, "indices must be strictly increasing");
        out.entries.emplace_back(index, BigInt((second.front() == '+' ? second.substr(1) : second).c_str()));
    }
    return out;
}

inline BFile read_bfile(const std::string& path, std::string id = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read b-file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str(), std::move(id));
}

/// Position of h_{n,i} in the row-by-row linearization whose first entry,
/// h_{1,0}, sits at `first_index`. Rows have d_n + 1 entries.
inline Int linear_index(Int n, Int i, Int first_index) {
    if (n < 1 || i < 0 || i > d_of(n)) throw std::out_of_range("linear_index: (n, i) outside the triangle");
    Int pos = first_index;
    for (Int r = 1; r < n; ++r) pos += d_of(r) + 1;
    return pos + i;
}

}  // namespace hseq
