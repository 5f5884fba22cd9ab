#pragma once

#include "qrc/csf.hpp"
#include "qrc/report.hpp"

namespace qrc {

// Named checkers for the standalone q-rook / q-hit identities. Each returns
// one VerificationReport; identities stated with a symbolic x are verified in
// the (q, t) ring with t = q^x after clearing all denominators (the clearing
// factor is documented at each checker).

/// F-ratio identity, cleared by F(x;λ) and (1-q)^{ℓ+1}.
VerificationReport check_F_ratio(const Partition& shape);

/// q-derivative of the rook generating function, cleared by t (1-q)^{ℓ+1}.
VerificationReport check_DF(const Partition& shape);

/// Column-linear rook identity on an m-column board.
VerificationReport check_rook_linear_col(const Partition& shape, int m, int i);

/// Row-linear rook identity on an n-row board.
VerificationReport check_rook_linear_row(const Partition& shape, int n, int k);

/// Quadratic rook identity over the cells of λ.
VerificationReport check_rook_quadratic(const Partition& shape, int k);

/// Generating-function identity for R_k (both cleared sides agree) together
/// with the closed form for the top rook number.
VerificationReport check_rook_gen(const Partition& shape);

/// Column-linear hit identity; needs m > n for the (m-1)-column board.
VerificationReport check_hit_linear_col(const Partition& shape, int m, int n, int k);

/// Row-linear hit identity.
VerificationReport check_hit_linear_row(const Partition& shape, int m, int n, int k);

/// Quadratic hit identity over the cells of λ.
VerificationReport check_hit_quadratic(const Partition& shape, int m, int n, int k);

/// Key square-to-rectangle relations: the r = length(λ) form and the
/// r < length(λ) form.
VerificationReport check_keyrel(const Partition& shape, int m, int n, int r);

/// The q-binomial identity behind the alternate proof.
VerificationReport check_qbinom_identity(int m, int n, int r, int i);

/// Deletion-contraction for H_j^{m,n}, one corner, all j (sides computed by
/// the change-of-basis route to stay independent of qhit_delcon).
VerificationReport check_delcon_hit(const Partition& shape, int m, int n, int corner_row);

/// Deletion-contraction for q-rook numbers and for the Garsia-Remmel variant
/// H~_j^{m,n} = q^{|λ|-jm} H_j^{m,n}.
VerificationReport check_delcon_gr(const Partition& shape, int m, int n, int corner_row);

/// Square-board specialization of the hit recursion.
VerificationReport check_delcon_square(const Partition& shape, int N, int corner_row);

/// Conjectured recursion q H_j = H_j(λ\e) + q^m H_{j-1}(λ/e) - H_j(λ/e).
VerificationReport check_conjecture_69(const Partition& shape, int m, int n, int corner_row);

/// Conjectured hit-polynomial recursion, checked in the form equivalent to
/// the previous one: q P(x;λ) = P(x;λ\e) + (q^m x - 1) P(x;λ/e).
VerificationReport check_conjecture_poly(const Partition& shape, int m, int n, int corner_row);

/// stat - dstat = j·m - |λ| and dstat = cross for every full placement on
/// every λ inside m×m.
VerificationReport check_stat_dstat(int m);

/// R_k(λ) = R_k(λ') for all k (conjugation invariance).
VerificationReport check_rook_conjugation(const Partition& shape);

/// Triple route agreement stat/basis/delcon, the Mahonian total, palindromic
/// nonnegative coefficients, GR two-route agreement and its power-of-q
/// relation on square boards, and the hits -> rooks round trip.
VerificationReport check_qhit_consistency(const Partition& shape, int m, int n);

/// Board resizing: [m-n]! H_j^{m,n} = H_j^{m,m} and, when λ fits the smaller
/// board, H_j^{m,n} = [m+1-n] H_j^{m,n-1}.
VerificationReport check_board_resize(const Partition& shape, int m, int n);

/// Complementation on square boards: H_j^m(λ) = H~_{m-j}^m(complement λ).
VerificationReport check_complement(const Partition& shape, int m);

/// Closed forms: R_k(a^b), H_k^N(m^j) on square boards, H_r^{m,n}((m-1)^k),
/// each against the enumeration route.
VerificationReport check_rect_rook_closed(int a, int b);
VerificationReport check_rect_hit_closed(int N, int m, int j);
VerificationReport check_thin_rect_closed(int m, int n, int k);

/// Rectangle CSF relations: [m] X_{(m-1)^k} = q^k [m-k] X_{m^k} + [k] X_{m^{k-1}}.
VerificationReport check_gp_rectangle(int m, int n, int k);

/// Its inversion: [m-1 over k] X_{m^k} = Σ_j [m over j](-1)^{k-j} q^{-(k+j)(k-j+1)/2} X_{(m-1)^j}.
VerificationReport check_gp_rectangle_inverse(int m, int n, int k);

/// Abreu-Nigro expansion for a rectangle (full e-expansion check).
VerificationReport check_an_rectangle(int m, int n, int k);

/// Y_i e-expansion against its closed form.
VerificationReport check_y_function(int m, int n, int i);

/// LLT analogues of the two main expansions, cleared of denominators.
VerificationReport check_llt_gp(const Partition& shape, int m, int n);
VerificationReport check_llt_an(const Partition& shape, int m, int n);

/// A·H = identity for the staircase matrices.
VerificationReport check_staircase_matrices(int m, int n);

/// Reconstruction X_λ = Σ_j a_j X_{δ_j} (cleared) and Σ_j a_j = 1.
VerificationReport check_staircase_coeffs(const Partition& shape, int m, int n);

/// The q-Eulerian correspondence H_j^{n,n}(δ_n) = A_{n,j} (descent count
/// j-1) and the q=1 r-excedance specialization.
VerificationReport check_eulerian_correspondence(int n);

}  // namespace qrc
