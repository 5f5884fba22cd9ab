#pragma once

#include <utility>
#include <vector>

#include "qrc/graph.hpp"
#include "qrc/qrat.hpp"
#include "qrc/report.hpp"
#include "qrc/rookhit.hpp"
#include "qrc/sympoly.hpp"

namespace qrc {

/// Chromatic symmetric function of g: the coefficient of m_ν is
/// Σ q^{asc(κ)} over proper colorings whose color-multiplicity vector, read
/// for colors 1, 2, ..., equals ν exactly.
SymPoly csf(const Graph& g);

/// Unicellular LLT polynomial: same sum without the properness filter.
SymPoly llt(const Graph& g);

/// Expansion of the proper-coloring sum over colorings into {1..M}.
MultiPoly csf_truncated(const Graph& g, int M);
MultiPoly llt_truncated(const Graph& g, int M);

/// Cached X_λ for abelian boards (heavy reuse across sweeps).
SymPoly csf_abelian(const Partition& shape, int m, int n);

/// [m]_n X_λ = Σ_j H_j^{m,n}(λ) X_{m^j}, checked cleared.
VerificationReport verify_gp(const Partition& shape, int m, int n);

/// The elementary-basis expansion
///   X_λ = [k]! H_k^{m+n-k}(λ) e_{m+n-k,k}
///       + Σ_{j<k} q^j [j]! [m+n-2j] H_j^{m+n-j-1}(λ) e_{m+n-j,j},
/// k = length(λ). The source statement assumes length(λ) <= λ_1; the
/// expansion verifies for every λ, so none is rejected here.
VerificationReport verify_an(const Partition& shape, int m, int n);

/// The variable-by-variable coloring recursion (weights fixed to this
/// repository's vertex labeling; see the note in csf.cpp):
///   X_λ(M) = X_λ(M-1)
///          + x_M [ Σ_c q^{c-1} X_{λ∖col c}(M-1) + Σ_r q^{m+n-r-λ_r} X_{λ∖row r}(M-1) ]
///          + x_M^2 Σ_{(r,c)∈λ} q^{(c-1)+(m+n-r-λ_r)} X_{λ/(r,c)}(M-1),
/// plus its rectangle collapse when λ = m^k. Checked as MultiPoly identities.
VerificationReport verify_coloring_recursions(const Partition& shape, int m, int n, int M);

/// The cleared (n+1)×(n+1) staircase hit matrix: entries H_j^{m,n}(δ_k) with
/// common denominator [m]_n.
struct StaircaseHitMatrix {
    QPoly denominator;
    std::vector<std::vector<QPoly>> entries;  // [j][k]
};
using StaircaseCoeffMatrix = std::vector<std::vector<QRat>>;  // [j][k]

/// The pair (H, A = H^{-1}); A is computed by fraction-free (Bareiss)
/// elimination on the cleared polynomial matrix.
std::pair<StaircaseHitMatrix, StaircaseCoeffMatrix> staircase_matrices(int m, int n);

/// Coefficients a_j with X_λ = Σ_j a_j X_{δ_j},
/// via a_j = (1/[m]_n) Σ_i H_i^{m,n}(λ) a_j(m^i).
std::vector<QRat> staircase_coeffs(const Partition& shape, int m, int n);

/// The same coefficients in cleared form: a_j = numerators[j] / denominator
/// with the common denominator det of the cleared hit matrix (unreduced).
std::pair<std::vector<QPoly>, QPoly> staircase_coeffs_cleared(const Partition& shape, int m,
                                                              int n);

/// Reports whether each a_j, cleared to a Laurent polynomial, has
/// coefficients all of one sign (conjecture status).
VerificationReport conjecture_56_check(const Partition& shape, int m, int n);

/// Σ q^{maj(w)} over permutations of S_n with exactly j descents.
QPoly q_eulerian(int n, int j);

/// Number of w in S_n with exactly j weak r-excedances (#{i : w(i) >= i+r}).
long r_excedance_count(int n, int r, int j);

/// Y_i^{m,n} = Σ_{k<=i} (-1)^{i-k} [i over k] q^{C(k,2)} X_{m^k}.
SymPoly y_function(int m, int n, int i);

/// The closed-form e-coefficients of Y_i^{m,n} (index r = 0..i):
///   c_r = q^{in} [m]! [i]! [m+n-2i-1]_{n-i-1} (-1)^{i+r}
///         q^{(r-2i)(r+1)/2} [m+n-2r] [m+n-r-i-1 over i-r].
/// For i = n the falling factorial [.]_{-1} is read as 1/[m-n] (QRat);
/// that case needs m > n.
std::vector<QRat> y_function_e_closed(int m, int n, int i);

}  // namespace qrc
