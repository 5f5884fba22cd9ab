#pragma once

#include <string>

#include "qrc/bipoly.hpp"
#include "qrc/board.hpp"
#include "qrc/qnumbers.hpp"
#include "qrc/qpoly.hpp"

namespace qrc {

/// R_k(λ) = Σ_p q^{inv(p)} over placements of k non-attacking rooks on λ.
/// Returns 0 for k outside [0, length(λ)]; the change-of-basis formulas
/// freely sum such vanishing terms.
QPoly qrook(const Partition& shape, int k);

/// Closed form R_k(a^b) = q^{(a-k)(b-k)} [a]_k [b]_k / [k]!.
QPoly qrook_rect(int a, int b, int k);

/// Both sides of the Garsia-Remmel generating function
///   Σ_k R_k(λ) [x]_{ℓ-k} = Π_{i=1..ℓ} [x + λ_{ℓ-i+1} - i + 1],
/// with t = q^x and both sides multiplied by (1-q)^ℓ so every [x+c]
/// becomes (1 - t q^c).
BiPoly rook_gen_lhs(const Partition& shape);
BiPoly rook_gen_rhs(const Partition& shape);

enum class HitVariant { Stat, Basis, Delcon, GR };

const char* hit_variant_name(HitVariant v);
HitVariant hit_variant_from_name(const std::string& name);

/// H_j by the statistic: Σ q^{stat(p)} over full placements with j hits.
QPoly qhit_stat(const Board& b, int j);

/// H_j by the change of basis from q-rook numbers,
///   H_j = q^{C(j,2)-|λ|}/[m-n]! Σ_{i>=j} R_i(λ) [m-i]! [i over j] (-1)^{i+j} q^{mi-C(i,2)}.
/// Laurent intermediates are expected; the result is checked to be an
/// honest polynomial.
QPoly qhit_basis(const Board& b, int j);

/// H_j by the deletion-contraction recursion
///   H_j(λ) = H_j(λ\e) + q^{|λ/e|-|λ|+j+m-1} (H_{j-1}(λ/e) - q H_j(λ/e)),
/// contracting at the corner of largest row index, with base case
/// H_j(∅ in n×m) = [m]_n δ_{j,0}. Memoized on (m, n, λ).
QPoly qhit_delcon(const Board& b, int j);

QPoly qhit(const Board& b, int j, HitVariant v);

/// Garsia-Remmel variant on a square N×N board, from its hit polynomial
///   Σ_i H~_i x^i = Σ_i R_i(λ) [N-i]! Π_{k=N-i+1..N} (x - q^k).
QPoly qhit_gr(const Board& b, int j);
/// Same numbers by Dworkin's statistic: Σ q^{dstat(p)}.
QPoly qhit_gr_dstat(const Board& b, int j);

/// Closed form for square boards, H_k^{N,N}(m^j).
QPoly qhit_rect_square(int N, int m, int j, int k);

/// Closed form H_r^{m,n}((m-1)^k): q^k [m-k][m-1]_{n-1} at r = k,
/// [k][m-1]_{n-1} at r = k-1, otherwise 0.
QPoly qhit_thin_rect(int m, int n, int k, int r);

/// P(x;λ) = Σ_j H_j x^j with t playing x.
BiPoly hit_polynomial(const Board& b);

/// R_k recovered from the hit numbers,
///   R_k = q^{|λ|-mk} [m-n]!/[m-k]! Σ_{i>=k} H_i [i over k]_{1/q}.
QPoly rooks_from_hits(const Board& b, int k);

}  // namespace qrc
