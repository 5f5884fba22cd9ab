#include <doctest.h>

#include <stdexcept>

#include "qrc/checks.hpp"
#include "qrc/jsonio.hpp"
#include "qrc/suites.hpp"

using namespace qrc;

namespace {
const Partition kTwoOne = Partition::parse("2,1");
const Partition kThreeOne = Partition::parse("3,1");
}  // namespace

TEST_CASE("generating function checkers") {
    CHECK(check_F_ratio(Partition()).holds);
    CHECK(check_F_ratio(kThreeOne).holds);
    CHECK(check_DF(Partition()).holds);
    CHECK(check_DF(kThreeOne).holds);
}

TEST_CASE("rook identity checkers") {
    CHECK(check_rook_linear_col(Partition(), 2, 0).holds);
    CHECK(check_rook_linear_col(kThreeOne, 4, 1).holds);
    CHECK(check_rook_linear_row(kThreeOne, 3, 1).holds);
    CHECK(check_rook_quadratic(kThreeOne, 0).holds);
    CHECK(check_rook_quadratic(kThreeOne, 1).holds);
    CHECK(check_rook_gen(kThreeOne).holds);
    CHECK(check_rook_conjugation(kThreeOne).holds);
}

TEST_CASE("hit identity checkers") {
    CHECK(check_hit_linear_col(kTwoOne, 3, 2, 1).holds);
    CHECK(check_hit_linear_row(kTwoOne, 3, 2, 0).holds);
    CHECK(check_hit_linear_row(kThreeOne, 4, 3, 1).holds);
    CHECK(check_hit_quadratic(kThreeOne, 4, 3, 1).holds);
    CHECK_THROWS_AS(check_hit_linear_col(kTwoOne, 2, 2, 0), std::domain_error);
}

TEST_CASE("key relations") {
    CHECK(check_keyrel(kTwoOne, 3, 2, 2).holds);  // r = length(λ)
    CHECK(check_keyrel(kTwoOne, 3, 2, 1).holds);
    CHECK(check_keyrel(kTwoOne, 3, 2, 0).holds);
    CHECK(check_keyrel(Partition(), 3, 2, 0).holds);
    CHECK(check_keyrel(kThreeOne, 4, 3, 1).holds);
}

TEST_CASE("q-binomial identity") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n)
            for (int r = 0; r <= n; ++r)
                for (int i = r; i <= n; ++i) CHECK(check_qbinom_identity(m, n, r, i).holds);
}

TEST_CASE("deletion-contraction checkers") {
    CHECK(check_delcon_hit(kTwoOne, 3, 2, 1).holds);
    CHECK(check_delcon_hit(kTwoOne, 3, 2, 2).holds);
    CHECK(check_delcon_gr(kTwoOne, 3, 2, 2).holds);
    CHECK(check_delcon_square(kThreeOne, 4, 1).holds);
    CHECK(check_delcon_square(Partition::parse("1"), 1, 1).holds);
}

TEST_CASE("conjecture checkers report CONFIRMED") {
    const VerificationReport a = check_conjecture_69(kTwoOne, 3, 2, 1);
    CHECK(a.holds);
    CHECK(a.conjecture);
    const VerificationReport b = check_conjecture_poly(kTwoOne, 3, 2, 2);
    CHECK(b.holds);
    CHECK(b.conjecture);
    CHECK(check_conjecture_poly(Partition::parse("1"), 1, 1, 1).holds);
    CHECK(check_conjecture_poly(Partition::parse("1"), 2, 2, 1).holds);
}

TEST_CASE("statistics checker") {
    CHECK(check_stat_dstat(1).holds);
    CHECK(check_stat_dstat(3).holds);
}

TEST_CASE("consistency and resizing checkers") {
    CHECK(check_qhit_consistency(kTwoOne, 3, 2).holds);
    CHECK(check_qhit_consistency(Partition(), 2, 1).holds);
    CHECK(check_board_resize(kTwoOne, 3, 2).holds);
    CHECK(check_board_resize(kTwoOne, 4, 2).holds);
    CHECK(check_complement(kTwoOne, 3).holds);
    CHECK(check_complement(Partition(), 2).holds);
}

TEST_CASE("rectangle checkers") {
    CHECK(check_rect_rook_closed(3, 2).holds);
    CHECK(check_rect_hit_closed(3, 3, 1).holds);
    CHECK(check_thin_rect_closed(3, 2, 1).holds);
    CHECK(check_gp_rectangle(3, 2, 1).holds);
    CHECK(check_gp_rectangle(3, 2, 0).holds);
    CHECK(check_gp_rectangle_inverse(3, 2, 2).holds);
    CHECK(check_an_rectangle(3, 2, 2).holds);
    CHECK(check_y_function(3, 2, 1).holds);
    CHECK(check_y_function(3, 2, 2).holds);  // i = n with m > n
}

TEST_CASE("llt checkers") {
    CHECK(check_llt_gp(kTwoOne, 3, 2).holds);
    CHECK(check_llt_gp(Partition(), 2, 1).holds);
    CHECK(check_llt_an(kTwoOne, 3, 2).holds);
    CHECK(check_llt_an(Partition(), 2, 2).holds);
}

TEST_CASE("staircase checkers") {
    CHECK(check_staircase_matrices(3, 2).holds);
    CHECK(check_staircase_matrices(4, 3).holds);
    CHECK(check_staircase_coeffs(Partition::parse("3"), 3, 2).holds);
    CHECK(check_eulerian_correspondence(2).holds);
    CHECK(check_eulerian_correspondence(3).holds);
}

TEST_CASE("suite runner aggregates and sorts deterministically") {
    const SuiteResult r1 = run_suite("qbinom", 3, 2);
    const SuiteResult r2 = run_suite("qbinom", 3, 1);
    CHECK(r1.ok());
    CHECK(r1.identities_failed == 0);
    CHECK(r1.reports.size() == r2.reports.size());
    for (size_t i = 0; i < r1.reports.size(); ++i)
        CHECK(to_json(r1.reports[i]).dump() == to_json(r2.reports[i]).dump());
    CHECK_THROWS_AS(run_suite("nonsense", 2, 1), std::domain_error);
    CHECK(suite_names().size() == 17);
}

TEST_CASE("json round trip for qpoly") {
    const QPoly p({{-2, -1}, {0, 3}, {5, 7}});
    CHECK(qpoly_from_json(to_json(p)) == p);
    CHECK(to_json(QPoly::zero()).dump() == "{}");
    const QPoly h1({{1, 2}, {2, 2}});
    CHECK(to_json(h1).dump() == "{\"1\":\"2\",\"2\":\"2\"}");
}

TEST_CASE("report json carries witness only on failure") {
    VerificationReport r;
    r.identity = "x";
    r.holds = true;
    CHECK(!to_json(r).contains("witness"));
    r.holds = false;
    r.witness = "bad";
    CHECK(to_json(r)["witness"] == "bad");
}
