#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrc/partition.hpp"
#include "qrc/qpoly.hpp"
#include "qrc/qrat.hpp"

namespace qrc {

/// Homogeneous symmetric function of degree N stored by monomial-basis
/// coefficients keyed by partitions of N. No zero values stored.
class SymPoly {
public:
    using Coeffs = std::map<Partition, QPoly>;

    explicit SymPoly(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    QPoly coeff(const Partition& mu) const {
        auto it = coeffs_.find(mu);
        return it == coeffs_.end() ? QPoly::zero() : it->second;
    }

    void add_term(const Partition& mu, const QPoly& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    SymPoly operator*(const QPoly& s) const;

    bool operator==(const SymPoly& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    int degree_;
    Coeffs coeffs_;
};

inline SymPoly operator*(const QPoly& s, const SymPoly& f) { return f * s; }

/// Monomial expansion of e_{N-j} * e_j. Requires 0 <= j <= N - j; only
/// partitions with parts <= 2 receive coefficients.
SymPoly e_two_column(int N, int j);

/// The residual of a failed two-column basis change.
class OutOfSpan : public std::runtime_error {
public:
    OutOfSpan(std::string what, SymPoly residual)
        : std::runtime_error(std::move(what)), residual(std::move(residual)) {}
    SymPoly residual;
};

/// Coefficients c_j, j = 0..floor(N/2), with f = Σ_j c_j e_{N-j,j}.
/// Throws OutOfSpan if f is supported outside partitions with parts <= 2.
std::vector<QRat> to_elementary_two_column(const SymPoly& f);

/// Schur coefficients d_i with f = Σ_i d_i s_{2^i 1^{N-2i}}, via
/// e_{N-j,j} = Σ_{i<=j} s_{2^i 1^{N-2i}}.
std::vector<QRat> to_schur_two_column(const SymPoly& f);

/// Rebuild a SymPoly from two-column e-coefficients (round-trip check).
SymPoly from_elementary_two_column(int N, const std::vector<QRat>& coeffs);

/// Polynomial in x_1..x_M with QPoly coefficients, keyed by exponent vector.
class MultiPoly {
public:
    using Coeffs = std::map<std::vector<int>, QPoly>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const std::vector<int>& exps, const QPoly& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator*(const QPoly& s) const;

    /// Multiply by x_var^power (1-based variable index).
    MultiPoly times_variable_power(int var, int power) const;

    /// Reinterpret in `nvars` variables (only adds trailing zero exponents).
    MultiPoly widened(int nvars) const;

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    int nvars_;
    Coeffs coeffs_;
};

inline MultiPoly operator*(const QPoly& s, const MultiPoly& f) { return f * s; }

/// True iff f is invariant under permuting variables: every exponent vector
/// carries the same coefficient as its sorted form, and each orbit is fully
/// present.
bool symmetry_check(const MultiPoly& f);

}  // namespace qrc
