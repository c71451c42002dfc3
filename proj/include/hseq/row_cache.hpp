#pragma once

// Plain-text row cache: one line per n, "n: v0,v1,...,vd", sorted by n.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "errors.hpp"
#include "numbers.hpp"
#include "oracle.hpp"

namespace hseq {

inline std::string format_row(const HRow& row, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
        if (i) out += sep;
        out += row.values[i].str();
    }
    return out;
}

inline HRow parse_row_line(const std::string& line, std::size_t line_no) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected \"n: v0,v1,...\"");
    HRow row;
    try {
        std::size_t used = 0;
        row.n = std::stoll(line.substr(0, colon), &used);
        if (line.find_first_not_of(" \t", used) < colon) throw std::invalid_argument("n");
    } catch (const std::logic_error&) {
        throw ParseError(line_no, "bad row index");
    }
    std::istringstream values(line.substr(colon + 1));
    std::string tok;
    while (std::getline(values, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t\r"), e = tok.find_last_not_of(" \t\r");
        if (b == std::string::npos) throw ParseError(line_no, "empty value");
        tok = tok.substr(b, e - b + 1);
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(line_no, "non-integer value '" + tok + "'");
        row.values.emplace_back(tok.c_str());
    }
    try {
        check_row(row);
    } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, err.what());
    }
    return row;
}

class RowCache {
public:
    explicit RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// $HSEQ_CACHE_DIR, or ./.hseq-cache.
    static RowCache from_environment() {
        const char* env = std::getenv("HSEQ_CACHE_DIR");
        return RowCache(env && *env ? std::filesystem::path(env) : std::filesystem::path(".hseq-cache"));
    }

    const std::filesystem::path& directory() const noexcept { return dir_; }
    std::filesystem::path file() const { return dir_ / "rows.txt"; }

    std::map<Int, HRow> load() const {
        std::map<Int, HRow> rows;
        std::ifstream in(file());
        if (!in) {
            if (std::filesystem::exists(file())) throw std::runtime_error("cannot read " + file().string());
            return rows;
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            HRow row = parse_row_line(line, line_no);
            const Int n = row.n;
            if (!rows.emplace(n, std::move(row)).second) throw ParseError(line_no, "duplicate row " + std::to_string(n));
        }
        return rows;
    }

    std::optional<HRow> get(Int n) const {
        auto rows = load();
        auto it = rows.find(n);
        if (it == rows.end()) return std::nullopt;
        return it->second;
    }

    /// Merges `row` into the cache; the file is replaced by rename.
    void store(const HRow& row) const {
        check_row(row);
        auto rows = load();
        rows[row.n] = row;
        write_all(rows);
    }

    void write_all(const std::map<Int, HRow>& rows) const {
        std::filesystem::create_directories(dir_);
        const auto tmp = dir_ / "rows.txt.tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            for (const auto& [n, row] : rows) out << n << ": " << format_row(row) << '\n';
            if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, file());
    }

private:
    std::filesystem::path dir_;
};

}  // namespace hseq
