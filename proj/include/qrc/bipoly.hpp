#pragma once

#include <map>
#include <string>
#include <utility>

#include "qrc/qpoly.hpp"

namespace qrc {

/// Polynomial in t with Laurent-polynomial-in-q coefficients, stored sparsely
/// by (t-exponent >= 0, q-exponent). The variable t stands for either the
/// hit-polynomial variable x or the substitution q^x, depending on context.
class BiPoly {
public:
    /// (t-exponent, q-exponent)
    using Key = std::pair<int, int>;
    using Coeffs = std::map<Key, Int>;

    BiPoly() = default;
    BiPoly(const QPoly& p) {  // NOLINT(google-explicit-constructor)
        for (const auto& [e, c] : p.coeffs()) coeffs_.emplace(Key{0, e}, c);
    }
    BiPoly(long c) : BiPoly(QPoly(c)) {}  // NOLINT(google-explicit-constructor)

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(QPoly::one()); }
    /// c * t^a q^b
    static BiPoly monomial(int a, int b, Int c = Int(1)) {
        BiPoly p;
        p.add_term(a, b, c);
        return p;
    }
    static BiPoly t() { return monomial(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    const Coeffs& coeffs() const { return coeffs_; }

    void add_term(int texp, int qexp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(Key{texp, qexp}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    int t_degree() const {
        int d = 0;
        for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
        return d;
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly operator*(const QPoly& p) const { return *this * BiPoly(p); }
    BiPoly operator*(const Int& s) const {
        BiPoly r;
        if (s == 0) return r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, c * s);
        return r;
    }

    /// Coefficient of t^j as a QPoly.
    QPoly t_coeff(int j) const {
        QPoly p;
        for (const auto& [k, c] : coeffs_)
            if (k.first == j) p.add_term(k.second, c);
        return p;
    }

    /// Substitute t = q^c (a Laurent specialization).
    QPoly subst_t_q_power(int c) const {
        QPoly p;
        for (const auto& [k, v] : coeffs_) p.add_term(k.first * c + k.second, v);
        return p;
    }

    /// Substitute t -> t * q^c.
    BiPoly subst_t_times_q_power(int c) const {
        BiPoly r;
        for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(Key{k.first, k.second + k.first * c}, v);
        return r;
    }

    QPoly at_t_one() const { return subst_t_q_power(0); }

    bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    Coeffs coeffs_;
};

inline BiPoly operator*(const QPoly& p, const BiPoly& b) { return b * p; }

/// (t; q)_k = prod_{i=0..k-1} (1 - t q^i).
BiPoly q_pochhammer_x(int k);

}  // namespace qrc
