#pragma once

#include <string>

#include "qrc/qpoly.hpp"

namespace qrc {

/// Rational function num/den in q, kept in a canonical reduced form so that
/// equality is structural: num and den share no polynomial factor, their
/// integer contents are coprime, den has lowest exponent 0 and positive
/// leading coefficient. den is never zero.
class QRat {
public:
    QRat() : num_(), den_(QPoly::one()) {}
    QRat(const QPoly& p) : num_(p), den_(QPoly::one()) {}  // NOLINT(google-explicit-constructor)
    QRat(long c) : QRat(QPoly(c)) {}                       // NOLINT(google-explicit-constructor)
    QRat(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// The value as a QPoly; throws InexactDivision unless den | num
    /// (in particular succeeds whenever den is 1).
    QPoly to_poly() const { return exact_div(num_, den_); }

    /// True iff this is a Laurent polynomial, i.e. den is a monomial c*q^k;
    /// if so *out (when given) receives the cleared Laurent polynomial.
    bool is_laurent(QPoly* out = nullptr) const;

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();

    QPoly num_;
    QPoly den_;
};

}  // namespace qrc
