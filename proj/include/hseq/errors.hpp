#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hseq {

// Precondition of the fast counter: n must exceed 24k + 12 - 8b.
class ThresholdError : public std::domain_error {
public:
    ThresholdError(long long n, long long k, long long bound)
        : std::domain_error("threshold not met: need n > " + std::to_string(bound) + " (got n = " +
                            std::to_string(n) + ", k = " + std::to_string(k) + ")"),
          bound_(bound) {}

    long long bound() const noexcept { return bound_; }

private:
    long long bound_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A row needed by a computation is absent from the supplied table.
class MissingRowError : public std::out_of_range {
public:
    explicit MissingRowError(long long n)
        : std::out_of_range("missing h-row for n = " + std::to_string(n)), n_(n) {}

    long long n() const noexcept { return n_; }

private:
    long long n_;
};

}  // namespace hseq
