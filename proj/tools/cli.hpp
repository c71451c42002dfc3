#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error, 3 I/O or parse error.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hseq/hseq.hpp>

namespace hseq::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3 };

// Rows from the on-disk cache, computing and recording whatever is missing.
class RowStore {
public:
    RowStore(RowCache cache, unsigned jobs) : cache_(std::move(cache)), rows_(cache_.load()), jobs_(jobs) {}

    const HRow& get(Int n) {
        auto it = rows_.find(n);
        if (it != rows_.end()) return it->second;
        dirty_ = true;
        return rows_.emplace(n, h_row(n, jobs_)).first->second;
    }

    RowTable table(Int max_n) {
        RowTable out;
        for (Int n = 1; n <= max_n; ++n) out.emplace(n, get(n));
        return out;
    }

    void flush() {
        if (dirty_) cache_.write_all(rows_);
        dirty_ = false;
    }

private:
    RowCache cache_;
    std::map<Int, HRow> rows_;
    unsigned jobs_;
    bool dirty_ = false;
};

inline int verify(RowStore& store, const std::string& rows_path, const std::string& sums_path, Int max_n,
                  std::ostream& out, std::ostream& err) {
    std::optional<BFile> rows_bfile, sums_bfile;
    if (!rows_path.empty()) rows_bfile = read_bfile(rows_path, "A319608");
    if (!sums_path.empty()) sums_bfile = read_bfile(sums_path, "A158206");

    for (Int n = 1; n <= max_n; ++n) {
        const HRow& row = store.get(n);
        if (rows_bfile) {
            for (Int i = 0; i <= row.d(); ++i) {
                const Int idx = linear_index(n, i, rows_bfile->first_index());
                auto expected = rows_bfile->value(idx);
                if (!expected) {
                    err << "mismatch at (n, i) = (" << n << ", " << i << "): A319608 b-file has no index " << idx
                        << '\n';
                    return kMismatch;
                }
                if (*expected != row.at(i)) {
                    err << "mismatch at (n, i) = (" << n << ", " << i << "): computed " << row.at(i)
                        << ", A319608 has " << *expected << '\n';
                    return kMismatch;
                }
            }
        }
        if (sums_bfile) {
            auto expected = sums_bfile->value(n);
            const BigInt sum = row_sum(row);
            if (!expected) {
                err << "mismatch at n = " << n << ": A158206 b-file has no index " << n << '\n';
                return kMismatch;
            }
            if (*expected != sum) {
                err << "mismatch at n = " << n << ": row sum " << sum << ", A158206 has " << *expected << '\n';
                return kMismatch;
            }
        }
    }
    out << "ok: n = 1.." << max_n << " match" << (rows_bfile ? " A319608" : "")
        << (rows_bfile && sums_bfile ? " and" : "") << (sums_bfile ? " A158206" : "") << '\n';
    return kOk;
}

inline int xcheck(RowStore& store, Int max_n, Int max_k, unsigned jobs, std::ostream& out, std::ostream& err) {
    int status = kOk;
    out << "m,k,fast,oracle,recurrence\n";
    for (Int k = 0; k <= max_k; ++k) {
        for (Int b = 0; b < 3; ++b) {
            const Int base = first_valid(k, b);
            if (base > max_n) continue;
            std::vector<BigInt> tail;
            for (Int l = 0; l <= k; ++l) tail.push_back(fast_h(base, l, jobs));
            for (Int m = base; m <= max_n; m += 3) {
                if (k > d_of(m)) continue;
                const BigInt fast = fast_h(m, k, jobs);
                const BigInt oracle = store.get(m).at(d_of(m) - k);
                const BigInt rec = recurrence_eval(base, tail, m);
                out << m << ',' << k << ',' << fast << ',' << oracle << ',' << rec << '\n';
                if (fast != oracle || fast != rec) {
                    err << "mismatch at (m, k) = (" << m << ", " << k << ")\n";
                    status = kMismatch;
                }
            }
        }
    }
    return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of working generating sets h_{n,i}"};
    app.require_subcommand(1);

    unsigned jobs = 0;
    Int n = 0, k = 0, b = 0, max_n = 0, max_k = 0, M = 0;
    double p = 0.0;
    std::uint64_t trials = 100000, seed = 12345;
    std::string rows_path, sums_path;

    auto* row_cmd = app.add_subcommand("row", "Compute (and cache) the row h_{n,0..d_n}");
    row_cmd->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
    row_cmd->add_option("--jobs", jobs, "worker threads (0 = all)");

    auto* fast_cmd = app.add_subcommand("fast", "h_{n, d_n - k} by the fast counter");
    fast_cmd->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
    fast_cmd->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    fast_cmd->add_option("--jobs", jobs, "worker threads (0 = all)");

    auto* qp_cmd = app.add_subcommand("qp", "Quasipolynomial for h_{n, d_n - k} on n = b (mod 3)");
    qp_cmd->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    qp_cmd->add_option("--b", b, "residue of n mod 3")->required()->check(CLI::Range(0, 2));
    qp_cmd->add_option("--jobs", jobs, "worker threads (0 = all)");

    auto* verify_cmd = app.add_subcommand("verify", "Compare rows and row sums with OEIS b-files");
    verify_cmd->add_option("--rows-bfile", rows_path, "A319608 b-file");
    verify_cmd->add_option("--sums-bfile", sums_path, "A158206 b-file");
    verify_cmd->add_option("--max-n", max_n, "largest n checked")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all)");

    auto* expect_cmd = app.add_subcommand("expect", "Expected embedding dimension of a random semigroup");
    expect_cmd->add_option("--M", M, "largest candidate generator")->required()->check(CLI::PositiveNumber);
    expect_cmd->add_option("--p", p, "inclusion probability")->required()->check(CLI::Range(0.0, 1.0));
    expect_cmd->add_option("--trials", trials, "Monte Carlo draws")->check(CLI::PositiveNumber);
    expect_cmd->add_option("--seed", seed, "Monte Carlo seed");
    expect_cmd->add_option("--jobs", jobs, "worker threads (0 = all)");

    auto* xcheck_cmd = app.add_subcommand("xcheck", "Oracle vs fast counter vs recurrence");
    xcheck_cmd->add_option("--max-n", max_n, "largest n")->required()->check(CLI::PositiveNumber);
    xcheck_cmd->add_option("--max-k", max_k, "largest k")->required()->check(CLI::NonNegativeNumber);
    xcheck_cmd->add_option("--jobs", jobs, "worker threads (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*fast_cmd) {
            out << fast_h(n, k, jobs) << '\n';
            return kOk;
        }
        if (*qp_cmd) {
            out << to_string(extract(k, b, jobs));
            return kOk;
        }

        RowStore store(RowCache::from_environment(), jobs);
        int status = kOk;
        if (*row_cmd) {
            out << format_row(store.get(n)) << '\n';
        } else if (*verify_cmd) {
            if (rows_path.empty() && sums_path.empty()) {
                err << "error: verify needs --rows-bfile and/or --sums-bfile\n";
                return kUsage;
            }
            status = verify(store, rows_path, sums_path, max_n, out, err);
        } else if (*expect_cmd) {
            const RowTable rows = store.table(M);
            store.flush();
            const double analytic = expectation_series(M, p, rows);
            if (M <= kMaxExactM)
                err << "exact," << std::setprecision(17) << expectation_exact(M, p) << '\n';
            const Estimate mc = mc_embedding_dim(ModelConfig{M, p, trials, seed}, jobs);
            out << "M,p,analytic,mc_mean,mc_stderr,trials,seed\n"
                << M << ',' << p << ',' << std::setprecision(17) << analytic << ',' << mc.mean << ','
                << mc.std_error << ',' << trials << ',' << seed << '\n';
        } else if (*xcheck_cmd) {
            status = xcheck(store, max_n, max_k, jobs, out, err);
        }
        store.flush();
        return status;
    } catch (const ThresholdError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::logic_error& e) {  // invalid_argument, domain_error, out_of_range, ...
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
}

}  // namespace hseq::cli
