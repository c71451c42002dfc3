#include <gtest/gtest.h>

#include <cmath>

#include <hseq/random_model.hpp>

using namespace hseq;

namespace {

RowTable rows_upto(Int max_n) {
    RowTable rows;
    for (Int n = 1; n <= max_n; ++n) rows.emplace(n, h_row(n));
    return rows;
}

// E[e(S)] by summing over every subset with its probability, one subset at a time.
double subset_by_subset(Int M, double p) {
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << M); ++mask) {
        std::vector<Int> elems;
        for (Int x = 1; x <= M; ++x)
            if ((mask >> (x - 1)) & 1u) elems.push_back(x);
        const auto s = static_cast<double>(elems.size());
        total += std::pow(p, s) * std::pow(1 - p, static_cast<double>(M) - s) *
                 static_cast<double>(embedding_dimension(GenSet(elems)));
    }
    return total;
}

}  // namespace

TEST(Sample, DegenerateProbabilities) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        EXPECT_TRUE(sample(ModelConfig{30, 0.0, 1, 9}, i).empty());
        EXPECT_EQ(sample(ModelConfig{30, 1.0, 1, 9}, i).size(), 30u);
    }
}

TEST(Sample, Reproducible) {
    const ModelConfig cfg{40, 0.3, 1, 2024};
    for (std::uint64_t i = 0; i < 20; ++i) EXPECT_EQ(sample(cfg, i), sample(cfg, i));
    EXPECT_NE(sample(cfg, 0), sample(cfg, 1));
    EXPECT_NE(sample(cfg, 0), sample(ModelConfig{40, 0.3, 1, 2025}, 0));
}

TEST(Sample, RejectsBadConfig) {
    EXPECT_THROW(sample(ModelConfig{0, 0.5, 1, 0}, 0), std::invalid_argument);
    EXPECT_THROW(sample(ModelConfig{5, 1.5, 1, 0}, 0), std::invalid_argument);
    EXPECT_THROW(mc_embedding_dim(ModelConfig{5, 0.5, 0, 0}), std::invalid_argument);
}

TEST(MonteCarlo, SmallModels) {
    auto within = [](Estimate e, double exact) { return std::abs(e.mean - exact) <= 4 * e.std_error; };
    EXPECT_TRUE(within(mc_embedding_dim(ModelConfig{1, 0.5, 20000, 1}), 0.5));
    EXPECT_TRUE(within(mc_embedding_dim(ModelConfig{2, 0.5, 20000, 2}), 0.75));
    EXPECT_TRUE(within(mc_embedding_dim(ModelConfig{20, 0.1, 100000, 3}), expectation_exact(20, 0.1)));
}

TEST(MonteCarlo, IndependentOfWorkerCount) {
    const ModelConfig cfg{25, 0.2, 20000, 77};
    const Estimate serial = mc_embedding_dim(cfg, 1);
    for (unsigned jobs : {2u, 3u, 0u}) {
        const Estimate e = mc_embedding_dim(cfg, jobs);
        EXPECT_EQ(e.mean, serial.mean);
        EXPECT_EQ(e.std_error, serial.std_error);
    }
}

TEST(MonteCarlo, CoverageAcrossSeeds) {
    const double exact = expectation_exact(12, 0.25);
    int inside = 0;
    const int reps = 200;
    for (int seed = 0; seed < reps; ++seed) {
        Estimate e = mc_embedding_dim(ModelConfig{12, 0.25, 2000, static_cast<std::uint64_t>(seed)});
        inside += std::abs(e.mean - exact) <= 4 * e.std_error;
    }
    EXPECT_GE(inside, reps * 99 / 100);
}

TEST(ExpectationExact, Examples) {
    EXPECT_DOUBLE_EQ(expectation_exact(1, 0.3), 0.3);
    EXPECT_DOUBLE_EQ(expectation_exact(2, 0.5), 0.75);
    EXPECT_THROW(expectation_exact(23, 0.5), std::domain_error);
    for (Int M = 1; M <= 12; ++M)
        for (double p : {0.1, 0.5, 0.8}) EXPECT_NEAR(expectation_exact(M, p), subset_by_subset(M, p), 1e-12);
}

TEST(ExpectationExact, ThreeElementsPolynomial) {
    // e = [1 in A] + [2 in A, 1 not] + [3 in A, 1 not]: p + 2p(1-p).
    for (int i = 0; i <= 10; ++i) {
        const Rational p(i, 10);
        EXPECT_EQ(expectation_exact_rational(3, p), p + 2 * p * (1 - p));
    }
}

TEST(ExpectationSeries, Examples) {
    const RowTable rows = rows_upto(22);
    EXPECT_DOUBLE_EQ(expectation_series(1, 0.4, rows), 0.4);
    EXPECT_DOUBLE_EQ(expectation_series(2, 0.4, rows), 2 * 0.4 - 0.4 * 0.4);
    EXPECT_NEAR(expectation_series(20, 0.1, rows), expectation_exact(20, 0.1), 1e-9 * expectation_exact(20, 0.1));
}

TEST(ExpectationSeries, MissingRowIsNamed) {
    RowTable rows = rows_upto(10);
    rows.erase(7);
    try {
        expectation_series(10, 0.5, rows);
        FAIL() << "expected MissingRowError";
    } catch (const MissingRowError& e) {
        EXPECT_EQ(e.n(), 7);
    }
}

TEST(ExpectationSeries, EqualsExhaustiveSumExactly) {
    const RowTable rows = rows_upto(14);
    for (Int M = 1; M <= 14; ++M)
        for (int i = 1; i < 20; ++i) {
            const Rational p(i, 20);
            ASSERT_EQ(expectation_series_exact(M, p, rows), expectation_exact_rational(M, p)) << "M = " << M;
        }
}

TEST(ExpectationSeries, MatchesExhaustiveInDoublePrecision) {
    const RowTable rows = rows_upto(20);
    for (Int M = 1; M <= 20; ++M)
        for (int i = 1; i <= 19; ++i) {
            const double p = 0.05 * i;
            const double exact = expectation_exact(M, p);
            ASSERT_LE(std::abs(expectation_series(M, p, rows) - exact), 1e-9 * exact) << "M = " << M << " p = " << p;
        }
}
