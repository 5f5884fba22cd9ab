#include "qrc/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qrc {

std::string BiPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit) os << a.get_str();
        bool need_star = !unit;
        if (k.first != 0) {
            if (need_star) os << "*";
            os << "t";
            if (k.first != 1) os << "^" << k.first;
            need_star = true;
        }
        if (k.second != 0) {
            if (need_star) os << "*";
            os << "q";
            if (k.second != 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

BiPoly q_pochhammer_x(int k) {
    if (k < 0) throw std::domain_error("q_pochhammer_x: k must be nonnegative");
    BiPoly p = BiPoly::one();
    for (int i = 0; i < k; ++i) p *= (BiPoly::one() - BiPoly::monomial(1, i));
    return p;
}

}  // namespace qrc
