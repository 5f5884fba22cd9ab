#include <doctest.h>

#include <stdexcept>

#include "qrc/rookhit.hpp"

using namespace qrc;

namespace {

const Partition kTwoOne = Partition::parse("2,1");

QPoly poly(std::initializer_list<std::pair<int, Int>> terms) { return QPoly(terms); }

}  // namespace

TEST_CASE("q-rook numbers of small shapes") {
    CHECK(qrook(Partition(), 0) == QPoly::one());
    CHECK(qrook(Partition::parse("2,2"), 1) == poly({{1, 1}, {2, 2}, {3, 1}}));
    CHECK(qrook(Partition::parse("2,2"), 2) == q_int(2));
    CHECK(qrook(kTwoOne, 0) == QPoly::monomial(3));  // R_0 = q^{|λ|}
    CHECK(qrook(kTwoOne, 5).is_zero());
    CHECK(qrook(kTwoOne, -1).is_zero());
}

TEST_CASE("rectangle rook closed form") {
    CHECK(qrook_rect(2, 2, 2) == q_int(2));
    CHECK(qrook_rect(2, 2, 1) == poly({{1, 1}, {2, 2}, {3, 1}}));
    CHECK(qrook_rect(3, 2, 0) == QPoly::monomial(6));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int k = 0; k <= std::min(a, b); ++k)
                CHECK(qrook_rect(a, b, k) == qrook(Partition::rectangle(a, b), k));
    CHECK_THROWS_AS(qrook_rect(2, 2, 3), std::domain_error);
}

TEST_CASE("rook generating function identity") {
    for (const Partition& shape : partitions_in_box(4, 4))
        CHECK(rook_gen_lhs(shape) == rook_gen_rhs(shape));
    CHECK(rook_gen_lhs(Partition()) == BiPoly::one());
}

TEST_CASE("hit numbers of the running 2x3 example") {
    const Board b(3, 2, kTwoOne);
    const QPoly h1 = poly({{1, 2}, {2, 2}});  // 2q + 2q^2
    for (HitVariant v : {HitVariant::Stat, HitVariant::Basis, HitVariant::Delcon}) {
        CHECK(qhit(b, 0, v) == QPoly::one());
        CHECK(qhit(b, 1, v) == h1);
        CHECK(qhit(b, 2, v) == QPoly::monomial(3));
    }
}

TEST_CASE("hit numbers on degenerate boards") {
    const Board one(1, 1, Partition::parse("1"));
    CHECK(qhit_stat(one, 1) == QPoly::one());
    CHECK(qhit_basis(one, 0).is_zero());
    CHECK(qhit_delcon(one, 1) == QPoly::one());
    const Board empty23(3, 2, Partition());
    CHECK(qhit_basis(empty23, 0) == q_falling(3, 2));
    CHECK(qhit_delcon(empty23, 0) == q_falling(3, 2));
    CHECK(qhit_basis(empty23, 1).is_zero());
    const Board emptynm(4, 2, Partition());
    CHECK(qhit_basis(emptynm, 0) == q_falling(4, 2));
}

TEST_CASE("routes agree everywhere at desk scale") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= m; ++n) {
            for (const Partition& shape : partitions_in_box(n, m)) {
                const Board b(m, n, shape);
                QPoly total;
                for (int j = 0; j <= n; ++j) {
                    const QPoly hs = qhit_stat(b, j);
                    CHECK(hs == qhit_basis(b, j));
                    CHECK(hs == qhit_delcon(b, j));
                    CHECK(is_palindromic(hs));
                    CHECK(!hs.has_negative_coefficient());
                    total += hs;
                }
                CHECK(total == q_falling(m, n));
            }
        }
    }
}

TEST_CASE("Garsia-Remmel variant") {
    const Board b(3, 3, kTwoOne);
    CHECK(qhit_gr(b, 2) == QPoly::one());
    CHECK(qhit_gr(b, 1) == poly({{1, 2}, {2, 2}}));
    const Board empty(2, 2, Partition());
    CHECK(qhit_gr(empty, 0) == q_factorial(2));
    // Both routes and the power-of-q relation against our hit numbers.
    for (int N = 1; N <= 4; ++N) {
        for (const Partition& shape : partitions_in_box(N, N)) {
            const Board sq(N, N, shape);
            for (int j = 0; j <= N; ++j) {
                const QPoly gr = qhit_gr(sq, j);
                CHECK(gr == qhit_gr_dstat(sq, j));
                CHECK(gr == qhit_basis(sq, j).shifted(shape.size() - j * N));
            }
        }
    }
    CHECK_THROWS_AS(qhit_gr(Board(3, 2, kTwoOne), 1), std::domain_error);
}

TEST_CASE("square rectangle hit closed form") {
    CHECK(qhit_rect_square(3, 3, 0, 0) == q_factorial(3));
    for (int N = 1; N <= 4; ++N)
        for (int mm = 0; mm <= N; ++mm)
            for (int j = 0; j <= N; ++j)
                for (int k = 0; k <= N; ++k)
                    CHECK(qhit_rect_square(N, mm, j, k) ==
                          qhit_basis(Board(N, N, Partition::rectangle(mm, j)), k));
}

TEST_CASE("thin rectangle hit closed form") {
    CHECK(qhit_thin_rect(3, 2, 1, 1) == (q_int(2) * q_int(2)).shifted(1));
    CHECK(qhit_thin_rect(3, 2, 1, 0) == q_int(2));
    CHECK(qhit_thin_rect(3, 2, 1, 2).is_zero());
    // Their total is Mahonian as well.
    CHECK(qhit_thin_rect(3, 2, 1, 0) + qhit_thin_rect(3, 2, 1, 1) == q_falling(3, 2));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n)
            for (int k = 0; k <= n; ++k)
                for (int r = 0; r <= n; ++r)
                    CHECK(qhit_thin_rect(m, n, k, r) ==
                          qhit_stat(Board(m, n, Partition::rectangle(m - 1, k)), r));
}

TEST_CASE("hit polynomial") {
    const Board b(3, 2, kTwoOne);
    BiPoly expect = BiPoly::one();
    expect += BiPoly::monomial(1, 1) * Int(2);
    expect += BiPoly::monomial(1, 2) * Int(2);
    expect += BiPoly::monomial(2, 3);
    CHECK(hit_polynomial(b) == expect);
    CHECK(hit_polynomial(Board(4, 2, Partition())) == BiPoly(q_falling(4, 2)));
    // Evaluation at t = 1 is the Mahonian total.
    for (const Partition& shape : partitions_in_box(2, 3))
        CHECK(hit_polynomial(Board(3, 2, shape)).at_t_one() == q_falling(3, 2));
}

TEST_CASE("rooks from hits round trip") {
    const Board b(3, 2, kTwoOne);
    CHECK(rooks_from_hits(b, 0) == QPoly::monomial(3));
    CHECK(rooks_from_hits(b, 2) == qrook(kTwoOne, 2));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n)
            for (const Partition& shape : partitions_in_box(n, m))
                for (int k = 0; k <= n; ++k)
                    CHECK(rooks_from_hits(Board(m, n, shape), k) == qrook(shape, k));
}

TEST_CASE("delcon corner choice does not matter") {
    // The recursion applied at every corner must reproduce the memoized
    // deterministic-corner values.
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= m; ++n) {
            for (const Partition& shape : partitions_in_box(n, m)) {
                if (shape.empty() || shape.size() > 6) continue;
                const Board b(m, n, shape);
                for (int corner : shape.corner_rows()) {
                    const Partition del = shape.delete_corner(corner);
                    const Partition con = shape.contract_corner(corner);
                    const int shift = con.size() - shape.size() + m - 1;
                    for (int j = 0; j <= n; ++j) {
                        const QPoly inner = qhit_delcon(Board(m - 1, n - 1, con), j - 1) -
                                            qhit_delcon(Board(m - 1, n - 1, con), j).shifted(1);
                        const QPoly rhs =
                            qhit_delcon(Board(m, n, del), j) + inner.shifted(shift + j);
                        CHECK(qhit_delcon(b, j) == rhs);
                    }
                }
            }
        }
    }
}
