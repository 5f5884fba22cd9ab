#include "qrc/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qrc/bigint.hpp"

namespace qrc {

void SymPoly::add_term(const Partition& mu, const QPoly& c) {
    if (mu.size() != degree_) throw std::domain_error("SymPoly: partition of wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (degree_ != o.degree_) throw std::domain_error("SymPoly: degree mismatch");
    for (const auto& [mu, c] : o.coeffs_) add_term(mu, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (degree_ != o.degree_) throw std::domain_error("SymPoly: degree mismatch");
    for (const auto& [mu, c] : o.coeffs_) add_term(mu, -c);
    return *this;
}

SymPoly SymPoly::operator*(const QPoly& s) const {
    SymPoly r(degree_);
    if (s.is_zero()) return r;
    for (const auto& [mu, c] : coeffs_) r.coeffs_.emplace(mu, c * s);
    return r;
}

std::string SymPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : coeffs_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*m[" << mu.str() << "]";
        first = false;
    }
    return os.str();
}

SymPoly e_two_column(int N, int j) {
    if (j < 0 || 2 * j > N) throw std::domain_error("e_two_column: need 0 <= j <= N/2");
    SymPoly f(N);
    // Coefficient of m_{2^p 1^{N-2p}} in e_{N-j} e_j: the p doubled variables
    // lie in both sets, the N-2p single ones split C(N-2p, N-j-p) ways.
    for (int p = 0; p <= j; ++p) {
        const int r = N - 2 * p;
        const int choose = N - j - p;
        if (choose < 0 || choose > r) continue;
        std::vector<int> parts(p, 2);
        parts.insert(parts.end(), r, 1);
        f.add_term(Partition(parts), QPoly(binomial(r, choose)));
    }
    return f;
}

namespace {

// Index p <-> partition 2^p 1^(N-2p); any other support is out of span.
int two_column_index(const Partition& mu, int N) {
    int twos = 0, ones = 0;
    for (int part : mu.parts()) {
        if (part == 2)
            ++twos;
        else if (part == 1)
            ++ones;
        else
            return -1;
    }
    return (2 * twos + ones == N) ? twos : -1;
}

}  // namespace

std::vector<QRat> to_elementary_two_column(const SymPoly& f) {
    const int N = f.degree();
    const int jmax = N / 2;
    std::vector<QRat> target(jmax + 1, QRat());
    for (const auto& [mu, c] : f.coeffs()) {
        const int p = two_column_index(mu, N);
        if (p < 0) {
            SymPoly residual(N);
            residual.add_term(mu, c);
            throw OutOfSpan("to_elementary_two_column: support outside two-column span",
                            residual);
        }
        target[p] = QRat(c);
    }
    // The matrix E[j][p] = coefficient of m_{2^p...} in e_{N-j,j} is
    // unitriangular in p <= j, so back-substitution needs no division.
    std::vector<SymPoly> basis;
    basis.reserve(jmax + 1);
    for (int j = 0; j <= jmax; ++j) basis.push_back(e_two_column(N, j));
    auto entry = [&](int j, int p) {
        std::vector<int> parts(p, 2);
        parts.insert(parts.end(), N - 2 * p, 1);
        return basis[j].coeff(Partition(parts));
    };
    std::vector<QRat> out(jmax + 1, QRat());
    for (int j = jmax; j >= 0; --j) {
        QRat c = target[j];
        for (int h = j + 1; h <= jmax; ++h) c -= out[h] * QRat(entry(h, j));
        out[j] = c / QRat(entry(j, j));
    }
    return out;
}

std::vector<QRat> to_schur_two_column(const SymPoly& f) {
    std::vector<QRat> e = to_elementary_two_column(f);
    std::vector<QRat> s(e.size(), QRat());
    // e_{N-j,j} = Σ_{i=0..j} s_{2^i 1^{N-2i}}, so d_i = Σ_{j>=i} c_j.
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i; j < e.size(); ++j) s[i] += e[j];
    return s;
}

SymPoly from_elementary_two_column(int N, const std::vector<QRat>& coeffs) {
    SymPoly f(N);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        f += e_two_column(N, static_cast<int>(j)) * coeffs[j].to_poly();
    }
    return f;
}

void MultiPoly::add_term(const std::vector<int>& exps, const QPoly& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::domain_error("MultiPoly: exponent vector of wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::domain_error("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::domain_error("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const QPoly& s) const {
    MultiPoly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::times_variable_power(int var, int power) const {
    if (var < 1 || var > nvars_) throw std::domain_error("times_variable_power: bad variable");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : coeffs_) {
        std::vector<int> exps = e;
        exps[var - 1] += power;
        r.coeffs_.emplace(std::move(exps), c);
    }
    return r;
}

MultiPoly MultiPoly::widened(int nvars) const {
    if (nvars < nvars_) throw std::domain_error("widened: cannot drop variables");
    MultiPoly r(nvars);
    for (const auto& [e, c] : coeffs_) {
        std::vector<int> exps = e;
        exps.resize(nvars, 0);
        r.coeffs_.emplace(std::move(exps), c);
    }
    return r;
}

bool symmetry_check(const MultiPoly& f) {
    // Group the support by sorted exponent vector: all members of an orbit
    // must be present with one common coefficient.
    std::map<std::vector<int>, std::pair<QPoly, size_t>> orbits;
    for (const auto& [e, c] : f.coeffs()) {
        std::vector<int> key = e;
        std::sort(key.begin(), key.end(), std::greater<int>());
        auto [it, inserted] = orbits.emplace(key, std::make_pair(c, size_t{1}));
        if (!inserted) {
            if (it->second.first != c) return false;
            ++it->second.second;
        }
    }
    for (const auto& [key, info] : orbits) {
        // Count distinct rearrangements of the sorted vector.
        std::vector<int> v = key;
        std::sort(v.begin(), v.end());
        size_t count = 0;
        do {
            ++count;
        } while (std::next_permutation(v.begin(), v.end()));
        if (count != info.second) return false;
    }
    return true;
}

}  // namespace qrc
