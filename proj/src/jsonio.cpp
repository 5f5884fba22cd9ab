#include "qrc/jsonio.hpp"

namespace qrc {

json to_json(const QPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = to_string(c);
    return j;
}

QPoly qpoly_from_json(const json& j) {
    QPoly p;
    for (const auto& [key, value] : j.items())
        p.add_term(std::stoi(key), int_from_string(value.get<std::string>()));
    return p;
}

json to_json(const BiPoly& p) {
    json j = json::object();
    for (const auto& [key, c] : p.coeffs())
        j[std::to_string(key.first) + "," + std::to_string(key.second)] = to_string(c);
    return j;
}

json to_json(const QRat& r) {
    if (r.is_polynomial()) return to_json(r.num());
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const SymPoly& f) {
    json list = json::array();
    for (const auto& [mu, c] : f.coeffs())
        list.push_back(json{{"partition", mu.str()}, {"qpoly", to_json(c)}});
    return json{{"degree", f.degree()}, {"monomial", list}};
}

json to_json(const MultiPoly& f) {
    json list = json::array();
    for (const auto& [e, c] : f.coeffs())
        list.push_back(json{{"exponents", e}, {"qpoly", to_json(c)}});
    return json{{"nvars", f.nvars()}, {"terms", list}};
}

json to_json(const VerificationReport& r) {
    json j{{"identity", r.identity},
           {"params", r.params},
           {"holds", r.holds},
           {"kind", r.conjecture ? "conjecture" : "identity"},
           {"lhs", r.lhs},
           {"rhs", r.rhs}};
    if (!r.holds) j["witness"] = r.witness;
    return j;
}

json to_json(const StaircaseHitMatrix& h) {
    json rows = json::array();
    for (const auto& row : h.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        rows.push_back(std::move(r));
    }
    return json{{"denominator", to_json(h.denominator)}, {"entries", rows}};
}

json to_json(const StaircaseCoeffMatrix& a) {
    json rows = json::array();
    for (const auto& row : a) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        rows.push_back(std::move(r));
    }
    return json{{"entries", rows}};
}

}  // namespace qrc
