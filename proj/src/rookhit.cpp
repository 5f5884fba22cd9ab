#include "qrc/rookhit.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "qrc/memo.hpp"

namespace qrc {

namespace {

using ShapeKey = std::vector<int>;
using BoardKey = std::tuple<int, int, std::vector<int>>;

Memo<ShapeKey, std::vector<QPoly>>& rook_memo() {
    static Memo<ShapeKey, std::vector<QPoly>> memo;
    return memo;
}

Memo<BoardKey, std::vector<QPoly>>& delcon_memo() {
    static Memo<BoardKey, std::vector<QPoly>> memo;
    return memo;
}

std::vector<QPoly> rook_table(const Partition& shape) {
    const ShapeKey key = shape.parts();
    std::vector<QPoly> table;
    if (rook_memo().find(key, table)) return table;
    table.assign(shape.length() + 1, QPoly::zero());
    const int side = std::max(shape.first_part(), shape.length());
    const Board b(side, side, shape);
    for (int k = 0; k <= shape.length(); ++k) {
        QPoly sum;
        for_each_placement_on_shape(b, k, [&](const RookPlacement& p) {
            sum.add_term(inv(p, shape), 1);
        });
        table[k] = sum;
    }
    rook_memo().insert(key, table);
    return table;
}

}  // namespace

QPoly qrook(const Partition& shape, int k) {
    if (k < 0 || k > shape.length()) return QPoly::zero();
    return rook_table(shape)[k];
}

QPoly qrook_rect(int a, int b, int k) {
    if (a < 0 || b < 0 || k < 0 || k > std::min(a, b))
        throw std::domain_error("qrook_rect: need 0 <= k <= min(a, b)");
    QPoly p = q_falling(a, k) * q_falling(b, k);
    return exact_div(p, q_factorial(k)).shifted((a - k) * (b - k));
}

BiPoly rook_gen_lhs(const Partition& shape) {
    const int len = shape.length();
    const QPoly one_minus_q = QPoly::one() - QPoly::monomial(1);
    BiPoly sum;
    for (int k = 0; k <= len; ++k) {
        QPoly coeff = qrook(shape, k);
        for (int i = 0; i < k; ++i) coeff *= one_minus_q;
        BiPoly term(coeff);
        for (int i = 0; i < len - k; ++i) term *= (BiPoly::one() - BiPoly::monomial(1, -i));
        sum += term;
    }
    return sum;
}

BiPoly rook_gen_rhs(const Partition& shape) {
    const int len = shape.length();
    BiPoly prod = BiPoly::one();
    for (int i = 1; i <= len; ++i)
        prod *= (BiPoly::one() - BiPoly::monomial(1, shape.part(len - i + 1) - i + 1));
    return prod;
}

const char* hit_variant_name(HitVariant v) {
    switch (v) {
        case HitVariant::Stat: return "stat";
        case HitVariant::Basis: return "basis";
        case HitVariant::Delcon: return "delcon";
        case HitVariant::GR: return "gr";
    }
    throw std::logic_error("hit_variant_name");
}

HitVariant hit_variant_from_name(const std::string& name) {
    if (name == "stat") return HitVariant::Stat;
    if (name == "basis") return HitVariant::Basis;
    if (name == "delcon") return HitVariant::Delcon;
    if (name == "gr") return HitVariant::GR;
    throw std::domain_error("unknown hit variant '" + name + "'");
}

QPoly qhit_stat(const Board& b, int j) {
    if (j < 0 || j > b.n()) return QPoly::zero();
    QPoly sum;
    for_each_full_placement(b, j, [&](const RookPlacement& p) { sum.add_term(stat(p, b), 1); });
    return sum;
}

QPoly qhit_basis(const Board& b, int j) {
    if (j < 0 || j > b.n()) return QPoly::zero();
    const int m = b.m(), n = b.n();
    const Partition& shape = b.shape();
    QPoly sum;
    const int top = std::min(n, shape.length());
    for (int i = j; i <= top; ++i) {
        QPoly term = qrook(shape, i) * q_factorial(m - i) * q_binomial(i, j);
        term = term.shifted(m * i - i * (i - 1) / 2);
        if ((i + j) % 2 != 0) term = -term;
        sum += term;
    }
    sum = sum.shifted(j * (j - 1) / 2 - shape.size());
    QPoly h = exact_div(sum, q_factorial(m - n));
    if (h.has_negative_exponent())
        throw std::logic_error("qhit_basis: result has negative exponents");
    return h;
}

namespace {

std::vector<QPoly> delcon_table(const Board& b) {
    const BoardKey key{b.m(), b.n(), b.shape().parts()};
    std::vector<QPoly> table;
    if (delcon_memo().find(key, table)) return table;

    const int m = b.m(), n = b.n();
    table.assign(n + 1, QPoly::zero());
    if (b.shape().empty()) {
        table[0] = q_falling(m, n);
    } else {
        const int corner = b.shape().length();  // deterministic corner choice
        const Partition del = b.shape().delete_corner(corner);
        const Partition con = b.shape().contract_corner(corner);
        const std::vector<QPoly> hdel = delcon_table(Board(m, n, del));
        const std::vector<QPoly> hcon = delcon_table(Board(m - 1, n - 1, con));
        const int shift = con.size() - b.shape().size() + m - 1;
        auto hcon_at = [&](int idx) {
            return (idx < 0 || idx >= static_cast<int>(hcon.size())) ? QPoly::zero() : hcon[idx];
        };
        for (int j = 0; j <= n; ++j) {
            QPoly inner = hcon_at(j - 1) - hcon_at(j).shifted(1);
            table[j] = hdel[j] + inner.shifted(shift + j);
        }
    }
    delcon_memo().insert(key, table);
    return table;
}

}  // namespace

QPoly qhit_delcon(const Board& b, int j) {
    if (j < 0 || j > b.n()) return QPoly::zero();
    return delcon_table(b)[j];
}

QPoly qhit(const Board& b, int j, HitVariant v) {
    switch (v) {
        case HitVariant::Stat: return qhit_stat(b, j);
        case HitVariant::Basis: return qhit_basis(b, j);
        case HitVariant::Delcon: return qhit_delcon(b, j);
        case HitVariant::GR: return qhit_gr(b, j);
    }
    throw std::logic_error("qhit: bad variant");
}

QPoly qhit_gr(const Board& b, int j) {
    if (b.m() != b.n()) throw std::domain_error("qhit_gr: square board required");
    if (j < 0 || j > b.n()) return QPoly::zero();
    const int N = b.n();
    BiPoly poly;
    const int top = std::min(N, b.shape().length());
    for (int i = 0; i <= top; ++i) {
        BiPoly term(qrook(b.shape(), i) * q_factorial(N - i));
        for (int k = N - i + 1; k <= N; ++k)
            term *= (BiPoly::t() - BiPoly::monomial(0, k));
        poly += term;
    }
    return poly.t_coeff(j);
}

QPoly qhit_gr_dstat(const Board& b, int j) {
    if (b.m() != b.n()) throw std::domain_error("qhit_gr_dstat: square board required");
    if (j < 0 || j > b.n()) return QPoly::zero();
    QPoly sum;
    for_each_full_placement(b, j, [&](const RookPlacement& p) { sum.add_term(dstat(p, b), 1); });
    return sum;
}

QPoly qhit_rect_square(int N, int m, int j, int k) {
    if (N < 0 || m < 0 || m > N || j < 0 || j > N || k < 0)
        throw std::domain_error("qhit_rect_square: parameters out of range");
    if (k > j || k > m) return QPoly::zero();
    if (j - k > N - m) return QPoly::zero();  // the falling factorial hits [0]
    QPoly p = q_falling(m, k) * q_factorial(N - j) * q_falling(N - m, j - k) * q_binomial(j, k);
    return p.shifted((N - j - m + k) * k);
}

QPoly qhit_thin_rect(int m, int n, int k, int r) {
    if (m < 1 || n < 0 || n > m || k < 0 || k > n)
        throw std::domain_error("qhit_thin_rect: parameters out of range");
    if (r == k) return (q_int(m - k) * q_falling(m - 1, n - 1)).shifted(k);
    if (r == k - 1) return q_int(k) * q_falling(m - 1, n - 1);
    return QPoly::zero();
}

BiPoly hit_polynomial(const Board& b) {
    BiPoly p;
    for (int j = 0; j <= b.n(); ++j) p += BiPoly::monomial(j, 0) * qhit_basis(b, j);
    return p;
}

QPoly rooks_from_hits(const Board& b, int k) {
    if (k < 0 || k > b.n()) throw std::domain_error("rooks_from_hits: k out of range");
    const int m = b.m(), n = b.n();
    QPoly sum;
    for (int i = k; i <= n; ++i) sum += qhit_basis(b, i) * q_binomial_q_inverse(i, k);
    sum = (sum * q_factorial(m - n)).shifted(b.shape().size() - m * k);
    return exact_div(sum, q_factorial(m - k));
}

}  // namespace qrc
