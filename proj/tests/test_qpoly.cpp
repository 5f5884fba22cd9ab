#include <doctest.h>

#include <random>

#include "qrc/bipoly.hpp"
#include "qrc/qnumbers.hpp"
#include "qrc/qpoly.hpp"
#include "qrc/qrat.hpp"

using namespace qrc;

namespace {

// Fixed-seed random Laurent polynomials for the property checks.
std::mt19937 rng(0x5eed);

QPoly random_poly(int max_terms = 5, int max_exp = 6, int max_coeff = 9) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exps(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeffs(-max_coeff, max_coeff);
    QPoly p;
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) p.add_term(exps(rng), coeffs(rng));
    return p;
}

}  // namespace

TEST_CASE("q_int basics") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == QPoly::one());
    CHECK(q_int(3) == QPoly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK_THROWS_AS(q_int(-1), std::domain_error);
}

TEST_CASE("q_falling and q_factorial") {
    CHECK(q_falling(3, 2) == QPoly({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    CHECK(q_falling(7, 0) == QPoly::one());
    CHECK(q_falling(4, 4) == q_factorial(4));
    CHECK(q_factorial(3) == q_int(3) * q_int(2));
    CHECK_THROWS_AS(q_falling(2, 3), std::domain_error);
}

TEST_CASE("q_binomial values") {
    // [4 over 2] by long division of [4][3] by [2][1].
    CHECK(q_binomial(4, 2) == QPoly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(q_binomial(5, 0) == QPoly::one());
    CHECK(q_binomial(6, 6) == QPoly::one());
}

TEST_CASE("q_binomial symmetry and q-Pascal") {
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            if (n >= 1 && k >= 1 && k <= n - 1) {
                const QPoly pascal =
                    q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k);
                CHECK(q_binomial(n, k) == pascal);
            }
        }
    }
}

TEST_CASE("q = 1 specializations") {
    CHECK(q_int(6).eval_at_one() == 6);
    CHECK(q_falling(5, 3).eval_at_one() == 60);
    CHECK(q_binomial(6, 2).eval_at_one() == 15);
}

TEST_CASE("exact_div") {
    const QPoly a({{0, 1}, {1, 2}, {2, 2}, {3, 1}});  // [3][2]
    CHECK(exact_div(a, q_int(2)) == q_int(3));
    const QPoly p = random_poly();
    CHECK(exact_div(p, QPoly::one()) == p);
    CHECK_THROWS_AS(exact_div(QPoly::one(), QPoly::zero()), std::domain_error);
    const QPoly odd({{0, 1}, {2, 1}});  // 1 + q^2
    CHECK_THROWS_AS(exact_div(odd, q_int(2)), InexactDivision);
    try {
        exact_div(odd, q_int(2));
    } catch (const InexactDivision& e) {
        CHECK(!e.remainder.is_zero());
    }
}

TEST_CASE("ring axioms on random triples") {
    for (int trial = 0; trial < 400; ++trial) {
        const QPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("exact_div undoes multiplication") {
    for (int trial = 0; trial < 300; ++trial) {
        const QPoly a = random_poly();
        QPoly b = random_poly();
        if (b.is_zero()) b = q_int(2);
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("is_palindromic") {
    CHECK(is_palindromic(QPoly({{1, 2}, {2, 2}})));  // 2q + 2q^2
    CHECK(!is_palindromic(QPoly({{0, 1}, {1, 2}})));
    CHECK(is_palindromic(QPoly::monomial(3)));
    CHECK(is_palindromic(QPoly::zero()));
    CHECK(is_palindromic(QPoly({{0, 1}, {2, 1}})));   // gap counts as 0
    CHECK(!is_palindromic(QPoly({{0, 1}, {1, 1}, {3, 1}})));
}

TEST_CASE("q_pochhammer_x") {
    CHECK(q_pochhammer_x(0) == BiPoly::one());
    CHECK(q_pochhammer_x(1) == BiPoly::one() - BiPoly::t());
    // (1 - t)(1 - tq) = 1 - t - tq + t^2 q
    BiPoly expect = BiPoly::one();
    expect -= BiPoly::monomial(1, 0);
    expect -= BiPoly::monomial(1, 1);
    expect += BiPoly::monomial(2, 1);
    CHECK(q_pochhammer_x(2) == expect);
}

TEST_CASE("BiPoly substitutions") {
    for (int k = 0; k <= 4; ++k) {
        // (t; q)_k at t = q turns into (q; q)_k = [k]! (1-q)^k up to sign bookkeeping:
        // check against the direct product instead.
        QPoly direct = QPoly::one();
        for (int i = 1; i <= k; ++i) direct *= (QPoly::one() - QPoly::monomial(i));
        CHECK(q_pochhammer_x(k).subst_t_q_power(1) == direct);
    }
    const BiPoly p = q_pochhammer_x(3);
    CHECK(p.subst_t_times_q_power(2).subst_t_q_power(0) == p.subst_t_q_power(2));
}

TEST_CASE("QRat normalization and equality") {
    const QRat a(q_int(2) * q_int(3), q_int(3));
    CHECK(a == QRat(q_int(2)));
    CHECK(a.is_polynomial());
    // (a/b == c/d) iff ad == cb, on random pairs.
    for (int trial = 0; trial < 200; ++trial) {
        QPoly n1 = random_poly(), n2 = random_poly();
        QPoly d1 = random_poly(), d2 = random_poly();
        if (d1.is_zero()) d1 = QPoly::one();
        if (d2.is_zero()) d2 = QPoly::one();
        const bool eq = QRat(n1, d1) == QRat(n2, d2);
        CHECK(eq == (n1 * d2 == n2 * d1));
    }
    CHECK_THROWS_AS(QRat(QPoly::one(), QPoly::zero()), std::domain_error);
}

TEST_CASE("QRat Laurent detection") {
    const QRat a(-(q_int(2)), QPoly::monomial(2));  // -(1+q)/q^2
    QPoly cleared;
    CHECK(a.is_laurent(&cleared));
    CHECK(cleared == QPoly({{-2, -1}, {-1, -1}}));
    const QRat b(QPoly::one(), q_int(2));
    CHECK(!b.is_laurent());
}

TEST_CASE("QRat arithmetic") {
    const QRat half(QPoly::one(), q_int(2));
    CHECK(half + half == QRat(QPoly(2), q_int(2)));
    CHECK(half - half == QRat());
    CHECK(half * QRat(q_int(2)) == QRat(QPoly::one()));
    CHECK(QRat(q_int(3)) / QRat(q_int(3)) == QRat(QPoly::one()));
    CHECK_THROWS_AS(QRat(QPoly::one()) / QRat(), std::domain_error);
}
