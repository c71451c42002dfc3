#include <gtest/gtest.h>

#include <hseq/oracle.hpp>
#include <hseq/quasipoly.hpp>

#include "golden.hpp"

using namespace hseq;

namespace {

Polynomial golden_polynomial(const golden::Branch& g) {
    Polynomial p;
    for (auto it = g.numerator_desc.rbegin(); it != g.numerator_desc.rend(); ++it)
        p.push_back(Rational(*it, g.denominator));
    poly::trim(p);
    return p;
}

BigInt factorial(Int k) {
    BigInt f = 1;
    for (Int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

TEST(DClosedForm, Examples) {
    EXPECT_EQ(d_closed_form(90), 14);
    EXPECT_EQ(d_closed_form(87), 14);
    EXPECT_EQ(d_closed_form(68), 11);
    for (Int n = 1; n <= 600; ++n) ASSERT_EQ(d_closed_form(n), d_of(n)) << n;
}

TEST(RecurrenceEval, Examples) {
    const std::vector<BigInt> tail{2, 31, 228, 1055};
    EXPECT_EQ(recurrence_eval(87, tail, 87), 1055);
    EXPECT_EQ(recurrence_eval(87, tail, 93), 1283);
    EXPECT_EQ(BigInt(93 * 93 * 93 + 315 * 93 - 2268) / 648, 1283);
    const Int n = 90;
    EXPECT_EQ(recurrence_eval(87, tail, n), BigInt(n * n * n - 9 * n * n + 342 * n - 3240) / 648);
    EXPECT_THROW(recurrence_eval(87, tail, 91), std::invalid_argument);
    EXPECT_THROW(recurrence_eval(87, tail, 84), std::invalid_argument);
}

TEST(Extract, Examples) {
    auto q = extract(1, 2);
    EXPECT_EQ(q.branch(2)->coeffs, (Polynomial{Rational(16, 6), Rational(1, 6)}));
    EXPECT_EQ(q.branch(2)->n_min, 26);
    EXPECT_EQ(q.branch(5)->coeffs, (Polynomial{Rational(19, 6), Rational(1, 6)}));
    EXPECT_EQ(q.branch(5)->n_min, 23);
    EXPECT_FALSE(q.branch(0));

    auto c = extract(0, 1);
    EXPECT_EQ(c.branch(1)->coeffs, Polynomial{Rational(2)});
    EXPECT_EQ(c.branch(4)->coeffs, Polynomial{Rational(2)});

    EXPECT_EQ(to_string(extract(3, 0)),
              "0 mod 6: (n^3 - 9n^2 + 342n - 3240)/648 for n >= 90\n"
              "3 mod 6: (n^3 + 315n - 2268)/648 for n >= 87\n");
}

TEST(Extract, ReproducesFrozenClosedForms) {
    for (Int k = 0; k <= 4; ++k)
        for (Int b = 0; b < 3; ++b) {
            const Quasipolynomial q = extract(k, b);
            for (Int r : {b, b + 3}) {
                const auto& expected = golden::closed_forms()[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
                ASSERT_TRUE(q.branch(r));
                EXPECT_EQ(q.branch(r)->coeffs, golden_polynomial(expected)) << "k = " << k << ", r = " << r;
                EXPECT_EQ(q.branch(r)->n_min, expected.n_min) << "k = " << k << ", r = " << r;
            }
        }
}

TEST(Extract, LeadingCoefficient) {
    for (Int k = 0; k <= 4; ++k)
        for (Int b = 0; b < 3; ++b) {
            const Quasipolynomial q = extract(k, b);
            const Rational expected = Rational(b == 2 ? 1 : 2) / Rational(factorial(k) * boost::multiprecision::pow(BigInt(6), static_cast<unsigned>(k)));
            for (Int r : {b, b + 3}) {
                EXPECT_EQ(static_cast<Int>(q.branch(r)->coeffs.size()) - 1, k);
                EXPECT_EQ(q.branch(r)->coeffs.back(), expected) << "k = " << k << ", r = " << r;
            }
        }
}

TEST(QpEval, ThreeRoutesAgree) {
    for (Int k = 0; k <= 4; ++k)
        for (Int b = 0; b < 3; ++b) {
            const Int m = first_valid(k, b);
            std::vector<BigInt> tail;
            for (Int l = 0; l <= k; ++l) tail.push_back(fast_h(m, l));
            const Quasipolynomial q = extract_from_tail(k, b, tail);
            for (Int r : {b, b + 3}) {
                Int n = q.branch(r)->n_min;
                for (int i = 0; i < 20; ++i, n += 6) {
                    const BigInt via_qp = qp_eval(q, n);
                    ASSERT_EQ(via_qp, recurrence_eval(m, tail, n)) << "n = " << n << ", k = " << k;
                    ASSERT_EQ(via_qp, fast_h(n, k)) << "n = " << n << ", k = " << k;
                }
            }
        }
}

TEST(QpEval, MatchesOracleAtFirstValidPoints) {
    for (Int k = 0; k <= 4; ++k)
        for (Int b = 0; b < 3; ++b) {
            const Quasipolynomial q = extract(k, b);
            for (Int r : {b, b + 3}) {
                const Int n = q.branch(r)->n_min;
                const HRow row = h_row(n);
                EXPECT_EQ(qp_eval(q, n), row.at(row.d() - k)) << "n = " << n << ", k = " << k;
            }
        }
}

TEST(QpEval, IntegralAcrossManyPoints) {
    for (Int k = 0; k <= 4; ++k)
        for (Int b = 0; b < 3; ++b) {
            const Quasipolynomial q = extract(k, b);
            for (Int r : {b, b + 3})
                for (Int n = q.branch(r)->n_min, i = 0; i < 1000; ++i, n += 6) ASSERT_GE(qp_eval(q, n), 1);
        }
}

TEST(QpEval, Examples) {
    EXPECT_EQ(qp_eval(extract(2, 2), 68), 91);
    EXPECT_EQ(qp_eval(extract(0, 2), 23), 1);
    const Quasipolynomial q4 = extract(4, 2);
    const Int m = first_valid(4, 2);
    std::vector<BigInt> tail;
    for (Int l = 0; l <= 4; ++l) tail.push_back(fast_h(m, l));
    EXPECT_EQ(qp_eval(q4, 95), recurrence_eval(m, tail, 95));
}

TEST(QpEval, RejectsUncoveredInputs) {
    const Quasipolynomial q = extract(1, 0);
    EXPECT_THROW(qp_eval(q, 43), std::domain_error);  // residue 1 not covered
    EXPECT_THROW(qp_eval(q, 36), std::domain_error);  // below n_min = 42
    Quasipolynomial bad;
    bad.set_branch(0, {{Rational(1, 2)}, 0});
    EXPECT_THROW(qp_eval(bad, 6), std::logic_error);
}
