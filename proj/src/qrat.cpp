#include "qrc/qrat.hpp"

#include <stdexcept>

namespace qrc {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    // q-power units move from den to num.
    const int s = den_.min_exp();
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
    const QPoly g = poly_gcd(num_, den_);
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool QRat::is_laurent(QPoly* out) const {
    if (den_.coeffs().size() != 1) return false;
    // den = c * q^k with k = 0 after normalization; c need not be 1 in
    // general, but reduction makes c coprime to num's content, so only c = 1
    // yields a Laurent polynomial.
    if (!den_.is_one()) return false;
    if (out) *out = num_;
    return true;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QRat operator-(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QRat operator*(const QRat& a, const QRat& b) { return QRat(a.num_ * b.num_, a.den_ * b.den_); }
QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("QRat: division by zero");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qrc
