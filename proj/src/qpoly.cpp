#include "qrc/qpoly.hpp"

#include <sstream>
#include <vector>

namespace qrc {

Int QPoly::eval_at(const Int& x) const {
    if (min_exp() < 0) throw std::domain_error("eval_at: Laurent polynomial needs unit argument");
    // Horner over the dense range; sparse gaps contribute via the power chain.
    Int s = 0;
    int prev = max_exp();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (int k = prev; k > it->first; --k) s *= x;
        s += it->second;
        prev = it->first;
    }
    for (int k = prev; k > 0; --k) s *= x;
    return s;
}

std::string QPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return QPoly();
    // q^k is a unit: shift both operands to ordinary polynomials and put the
    // net shift back on the quotient.
    const int shift = a.min_exp() - b.min_exp();
    QPoly rem = a.shifted(-a.min_exp());
    const QPoly d = b.shifted(-b.min_exp());
    const int db = d.max_exp();
    const Int lead = d.leading_coeff();
    QPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= db) {
        const Int& lr = rem.leading_coeff();
        if (lr % lead != 0)
            throw InexactDivision("exact_div: leading coefficient not divisible", rem.shifted(shift));
        const Int c = lr / lead;
        const int e = rem.max_exp() - db;
        quot.add_term(e, c);
        rem -= d.shifted(e) * c;
    }
    if (!rem.is_zero()) throw InexactDivision("exact_div: nonzero remainder", rem.shifted(shift));
    return quot.shifted(shift);
}

namespace {

// Pseudo-remainder of r by d, reduced to primitive form after every step to
// keep the coefficients from exploding (gcd is only defined up to scalars).
QPoly pseudo_rem(QPoly r, const QPoly& d) {
    const int db = d.max_exp();
    const Int lead = d.leading_coeff();
    while (!r.is_zero() && r.max_exp() >= db) {
        const int e = r.max_exp() - db;
        const Int c = r.leading_coeff();
        r = r * lead - d.shifted(e) * c;
        const Int content = r.content();
        if (content > 1) r = exact_div(r, QPoly(content));
    }
    return r;
}

QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    QPoly q = p.shifted(-p.min_exp());
    Int c = q.content();
    if (q.leading_coeff() < 0) c = -c;
    return exact_div(q, QPoly(c));
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return primitive_part(b) * b.content();
    if (b.is_zero()) return primitive_part(a) * a.content();
    const Int cont = int_gcd(a.content(), b.content());
    QPoly x = primitive_part(a);
    QPoly y = primitive_part(b);
    if (x.max_exp() < y.max_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        QPoly r = primitive_part(pseudo_rem(x, y));
        x = y;
        y = r;
    }
    return x * cont;
}

bool is_palindromic(const QPoly& p) {
    if (p.is_zero()) return true;
    const int lo = p.min_exp(), hi = p.max_exp();
    for (int i = 0; lo + i <= hi - i; ++i)
        if (p.coeff(lo + i) != p.coeff(hi - i)) return false;
    return true;
}

}  // namespace qrc
