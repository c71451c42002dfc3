#include <gtest/gtest.h>

#include <random>

#include <hseq/semigroup.hpp>

#include "test_support.hpp"

using namespace hseq;
using hseq::testing::naive_contains;

TEST(GenSet, NormalizesOrderAndDuplicates) {
    GenSet a{20, 6, 9, 6};
    EXPECT_EQ(std::vector<Int>(a.begin(), a.end()), (std::vector<Int>{6, 9, 20}));
    EXPECT_THROW(GenSet({0, 3}), std::invalid_argument);
    EXPECT_TRUE(GenSet{}.empty());
}

TEST(Contains, McNuggetExamples) {
    const GenSet nuggets{6, 9, 20};
    EXPECT_TRUE(contains(nuggets, 18));
    EXPECT_TRUE(contains(nuggets, 32));
    EXPECT_FALSE(contains(nuggets, 11));
    EXPECT_FALSE(contains(nuggets, 43));  // largest gap
    EXPECT_TRUE(contains(nuggets, 44));
}

TEST(Contains, EmptySetGeneratesOnlyZero) {
    EXPECT_TRUE(contains(GenSet{}, 0));
    EXPECT_FALSE(contains(GenSet{}, 5));
    EXPECT_THROW(contains(GenSet{}, -1), std::invalid_argument);
}

TEST(Contains, AgreesWithCoefficientEnumeration) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> size(1, 4), elem(1, 60);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Int> raw;
        for (Int i = size(rng); i > 0; --i) raw.push_back(elem(rng));
        GenSet a(raw);
        std::vector<Int> gens(a.begin(), a.end());
        MembershipTable table(a, 120);
        for (Int t = 0; t <= 120; ++t) ASSERT_EQ(table.test(t), naive_contains(gens, t)) << "t = " << t;
    }
}

TEST(MembershipTable, WordBoundaryShifts) {
    // Generators straddling and exceeding 64-bit words.
    for (Int g : {1, 63, 64, 65, 127, 128, 130}) {
        MembershipTable t(GenSet{g}, 400);
        for (Int x = 0; x <= 400; ++x) ASSERT_EQ(t.test(x), x % g == 0) << g << " " << x;
    }
}

TEST(MembershipTable, ExtensionIsMonotone) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> elem(2, 90);
    for (int trial = 0; trial < 100; ++trial) {
        MembershipTable t(200);
        for (int step = 0; step < 4; ++step) {
            MembershipTable next = t.extended(elem(rng));
            for (Int x = 0; x <= 200; ++x)
                if (t.test(x)) {
                    ASSERT_TRUE(next.test(x));
                }
            t = next;
        }
    }
}

TEST(MinimalGenerators, Examples) {
    EXPECT_EQ(minimal_generators(GenSet{6, 9, 18, 20, 32}), (GenSet{6, 9, 20}));
    EXPECT_EQ(minimal_generators(GenSet{1, 2}), GenSet{1});
    EXPECT_EQ(minimal_generators(GenSet{}), GenSet{});
    EXPECT_EQ(embedding_dimension(GenSet{6, 9, 18, 20, 32}), 3);
    EXPECT_EQ(embedding_dimension(GenSet{}), 0);
    EXPECT_EQ(embedding_dimension(GenSet{2, 3}), 2);
}

TEST(MinimalGenerators, IdempotentAndSameSemigroup) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        GenSet a(hseq::testing::random_subset(rng, 2, 40, 0.2));
        GenSet m = minimal_generators(a);
        ASSERT_EQ(minimal_generators(m), m);
        if (a.empty()) continue;
        ASSERT_EQ(MembershipTable(m, 2 * a.max()), MembershipTable(a, 2 * a.max()));
    }
}

TEST(WorksFor, Examples) {
    EXPECT_TRUE(works_for(GenSet{2}, 11));
    EXPECT_TRUE(works_for(GenSet{4, 5}, 11));
    EXPECT_FALSE(works_for(GenSet{4, 6}, 11));  // 11 not representable, but 6 >= 11/2
    EXPECT_FALSE(works_for(GenSet{2, 4}, 11));  // not minimal
    EXPECT_FALSE(works_for(GenSet{3, 4}, 11));  // 11 = 3 + 4 + 4
    for (Int n = 1; n <= 30; ++n) EXPECT_FALSE(works_for(GenSet{1}, n));
}

TEST(WorksFor, AgreesWithNaiveDefinition) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        auto gens = hseq::testing::random_subset(rng, 1, 20, 0.15);
        Int n = std::uniform_int_distribution<Int>(1, 45)(rng);
        ASSERT_EQ(works_for(GenSet(gens), n), hseq::testing::naive_works(gens, n));
    }
}
