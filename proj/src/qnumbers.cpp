#include "qrc/qnumbers.hpp"

#include <stdexcept>

namespace qrc {

QPoly q_int(int n) {
    if (n < 0) throw std::domain_error("q_int: n must be nonnegative");
    QPoly p;
    for (int e = 0; e < n; ++e) p.add_term(e, 1);
    return p;
}

QPoly q_falling(int m, int k) {
    if (k < 0 || m < 0) throw std::domain_error("q_falling: negative argument");
    if (k > m) throw std::domain_error("q_falling: k > m");
    QPoly p = QPoly::one();
    for (int i = 0; i < k; ++i) p *= q_int(m - i);
    return p;
}

QPoly q_factorial(int n) { return q_falling(n, n); }

QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("q_binomial: k out of range");
    // Exact division by definition; inexactness would be an arithmetic bug.
    return exact_div(q_falling(n, k), q_factorial(k));
}

QPoly q_falling_or_zero(int m, int k) {
    if (k < 0) throw std::domain_error("q_falling_or_zero: k < 0");
    if (k > m) return QPoly::zero();
    return q_falling(m, k);
}

QPoly q_binomial_ext(int n, int k) {
    if (k < 0 || k > n) return QPoly::zero();
    return q_binomial(n, k);
}

QPoly q_binomial_q_inverse(int n, int k) { return q_binomial(n, k).subst_q_inverse(); }

}  // namespace qrc
