#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qrc/qnumbers.hpp"
#include "qrc/sympoly.hpp"

using namespace qrc;

namespace {

// Test-only oracle: expand e_{N-j} e_j literally in N variables and read off
// monomial coefficients, independent of the combinatorial formula in
// e_two_column.
SymPoly e_product_brute(int N, int j) {
    const int a = N - j, b = j;
    MultiPoly ea(N), eb(N);
    // elementary symmetric polynomial e_k in N variables
    auto elementary = [N](int k) {
        MultiPoly f(N);
        std::vector<int> idx(k);
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == k) {
                std::vector<int> exps(N, 0);
                for (int i : idx) exps[i] = 1;
                f.add_term(exps, QPoly::one());
                return;
            }
            for (int v = start; v < N; ++v) {
                idx[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
        return f;
    };
    ea = elementary(a);
    eb = elementary(b);
    // multiply
    MultiPoly prod(N);
    for (const auto& [e1, c1] : ea.coeffs())
        for (const auto& [e2, c2] : eb.coeffs()) {
            std::vector<int> e(N);
            for (int i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
            prod.add_term(e, c1 * c2);
        }
    // read off partition-indexed coefficients
    SymPoly f(N);
    for (const auto& [e, c] : prod.coeffs()) {
        std::vector<int> sorted;
        for (int v : e)
            if (v > 0) sorted.push_back(v);
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        const Partition mu(sorted);
        if (f.coeff(mu).is_zero()) f.add_term(mu, c);
    }
    return f;
}

}  // namespace

TEST_CASE("e_two_column small cases") {
    SymPoly e2 = e_two_column(2, 0);
    CHECK(e2.coeff(Partition::parse("1,1")) == QPoly::one());
    CHECK(e2.coeff(Partition::parse("2")).is_zero());

    SymPoly e11 = e_two_column(2, 1);
    CHECK(e11.coeff(Partition::parse("2")) == QPoly::one());
    CHECK(e11.coeff(Partition::parse("1,1")) == QPoly(2));

    SymPoly e22 = e_two_column(4, 2);
    CHECK(e22.coeff(Partition::parse("2,2")) == QPoly::one());
    CHECK(e22.coeff(Partition::parse("2,1,1")) == QPoly(2));
    CHECK(e22.coeff(Partition::parse("1,1,1,1")) == QPoly(6));

    CHECK_THROWS_AS(e_two_column(4, 3), std::domain_error);
}

TEST_CASE("e_two_column against the brute-force expansion") {
    for (int N = 1; N <= 7; ++N)
        for (int j = 0; 2 * j <= N; ++j)
            CHECK(e_two_column(N, j) == e_product_brute(N, j));
}

TEST_CASE("to_elementary_two_column is inverse on the basis") {
    for (int N = 2; N <= 10; ++N) {
        for (int j = 0; 2 * j <= N; ++j) {
            const std::vector<QRat> c = to_elementary_two_column(e_two_column(N, j));
            for (size_t h = 0; h < c.size(); ++h)
                CHECK(c[h] == (static_cast<int>(h) == j ? QRat(QPoly::one()) : QRat()));
        }
    }
    const std::vector<QRat> zero = to_elementary_two_column(SymPoly(5));
    for (const QRat& c : zero) CHECK(c.is_zero());
}

TEST_CASE("round trip through the e-coefficients") {
    // Random-ish combinations reconstruct exactly.
    for (int N = 2; N <= 8; ++N) {
        SymPoly f(N);
        for (int j = 0; 2 * j <= N; ++j)
            f += e_two_column(N, j) * QPoly({{0, 1 + j}, {1, j}, {2, 1}});
        CHECK(from_elementary_two_column(N, to_elementary_two_column(f)) == f);
    }
}

TEST_CASE("out-of-span support is rejected with residual") {
    SymPoly f(3);
    f.add_term(Partition::parse("3"), QPoly::one());
    CHECK_THROWS_AS(to_elementary_two_column(f), OutOfSpan);
    try {
        to_elementary_two_column(f);
    } catch (const OutOfSpan& e) {
        CHECK(!e.residual.is_zero());
    }
}

TEST_CASE("schur coefficients") {
    // e_{N-j,j} -> ones in positions 0..j.
    for (int N = 2; N <= 8; ++N) {
        for (int j = 0; 2 * j <= N; ++j) {
            const std::vector<QRat> d = to_schur_two_column(e_two_column(N, j));
            for (size_t i = 0; i < d.size(); ++i)
                CHECK(d[i] == (static_cast<int>(i) <= j ? QRat(QPoly::one()) : QRat()));
        }
    }
    const std::vector<QRat> zero = to_schur_two_column(SymPoly(4));
    for (const QRat& c : zero) CHECK(c.is_zero());
}

TEST_CASE("symmetry_check") {
    MultiPoly sym(2);
    sym.add_term({2, 1}, QPoly::one());
    sym.add_term({1, 2}, QPoly::one());
    CHECK(symmetry_check(sym));

    MultiPoly asym(2);
    asym.add_term({2, 1}, QPoly::one());
    CHECK(!symmetry_check(asym));

    MultiPoly wrong(2);
    wrong.add_term({2, 1}, QPoly::one());
    wrong.add_term({1, 2}, QPoly(2));
    CHECK(!symmetry_check(wrong));

    CHECK(symmetry_check(MultiPoly(3)));
}

TEST_CASE("MultiPoly plumbing") {
    MultiPoly f(2);
    f.add_term({1, 0}, QPoly::one());
    const MultiPoly g = f.times_variable_power(2, 2);
    CHECK(g.coeffs().count({1, 2}) == 1);
    const MultiPoly w = f.widened(3);
    CHECK(w.coeffs().count({1, 0, 0}) == 1);
    CHECK_THROWS_AS(f.add_term({1, 2, 3}, QPoly::one()), std::domain_error);
}
