#pragma once

#include "qrc/qpoly.hpp"

namespace qrc {

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
QPoly q_int(int n);

/// [m]_k = [m][m-1]...[m-k+1]; [m]_0 = 1. Requires 0 <= k <= m.
QPoly q_falling(int m, int k);

/// [n]! = [n]_n.
QPoly q_factorial(int n);

/// Gaussian binomial [n choose k]_q = [n]_k / [k]!. Requires 0 <= k <= n.
QPoly q_binomial(int n, int k);

/// [m]_k extended so that formulas may run off the end: 0 when k > m
/// (the product then contains [0]). Still requires k >= 0.
QPoly q_falling_or_zero(int m, int k);

/// Gaussian binomial extended by the classical conventions:
/// 0 when k < 0 or k > n.
QPoly q_binomial_ext(int n, int k);

/// [n choose k] with q replaced by 1/q, as a Laurent polynomial.
QPoly q_binomial_q_inverse(int n, int k);

}  // namespace qrc
