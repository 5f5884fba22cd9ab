#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qrc/bigint.hpp"

namespace qrc {

/// Sparse Laurent polynomial in q with arbitrary-precision integer
/// coefficients. Canonical form: no zero coefficient is ever stored, so
/// equality is exact map equality. Values are immutable in spirit; all
/// operations return fresh polynomials.
class QPoly {
public:
    using Coeffs = std::map<int, Int>;

    QPoly() = default;
    QPoly(const Int& c) { set(0, c); }            // NOLINT(google-explicit-constructor)
    QPoly(long c) { set(0, Int(c)); }             // NOLINT(google-explicit-constructor)
    QPoly(std::initializer_list<std::pair<int, Int>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Int(1)); }
    /// c * q^e
    static QPoly monomial(int e, Int c = Int(1)) {
        QPoly p;
        p.set(e, std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.count(0) && coeffs_.at(0) == 1; }

    const Coeffs& coeffs() const { return coeffs_; }

    Int coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    Int leading_coeff() const { return coeffs_.empty() ? Int(0) : coeffs_.rbegin()->second; }

    void add_term(int e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    QPoly operator-() const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    QPoly operator*(const Int& s) const {
        QPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c * s);
        return r;
    }

    /// this * q^k
    QPoly shifted(int k) const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
        return r;
    }

    /// Substitute q -> 1/q (flips exponents).
    QPoly subst_q_inverse() const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
        return r;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    Int eval_at(const Int& x) const;

    /// gcd of the coefficients, >= 0; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : coeffs_) g = int_gcd(g, c);
        return g;
    }

    bool has_negative_exponent() const { return !coeffs_.empty() && min_exp() < 0; }
    bool has_negative_coefficient() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return true;
        return false;
    }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    bool operator<(const QPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Ascending-exponent human-readable form, e.g. "1 + 2*q + q^3" or "0".
    std::string str() const;

private:
    void set(int e, Int c) {
        if (c != 0) coeffs_.emplace(e, std::move(c));
    }

    Coeffs coeffs_;
};

inline QPoly operator*(const Int& s, const QPoly& p) { return p * s; }

/// Exact division failed; carries the nonzero remainder.
class InexactDivision : public std::runtime_error {
public:
    InexactDivision(std::string what, QPoly remainder)
        : std::runtime_error(std::move(what)), remainder(std::move(remainder)) {}
    QPoly remainder;
};

/// Exact quotient a/b in Z[q,1/q]; throws InexactDivision if b does not
/// divide a, std::domain_error if b = 0.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// gcd over Z[q] up to units of the Laurent ring, normalized to lowest
/// exponent 0 and positive leading coefficient. Includes the integer
/// content gcd. gcd(0,0) = 0.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// True iff the coefficient sequence between lowest and highest exponent
/// (zeros included) reads the same in both directions. Zero is palindromic.
bool is_palindromic(const QPoly& p);

}  // namespace qrc
