#pragma once

#include <json.hpp>

#include "qrc/bipoly.hpp"
#include "qrc/csf.hpp"
#include "qrc/qpoly.hpp"
#include "qrc/qrat.hpp"
#include "qrc/report.hpp"
#include "qrc/sympoly.hpp"

namespace qrc {

using json = nlohmann::json;

/// {"exponent": "coefficient"} with decimal strings; {} is zero.
json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

/// Keys "a,b" for t^a q^b.
json to_json(const BiPoly& p);

/// {"num": ..., "den": ...}; plain QPoly object when the denominator is 1.
json to_json(const QRat& r);

/// Sorted list of {"partition": "2,1", "qpoly": {...}}.
json to_json(const SymPoly& f);

/// Sorted list of {"exponents": [..], "qpoly": {...}}.
json to_json(const MultiPoly& f);

json to_json(const VerificationReport& r);

json to_json(const StaircaseHitMatrix& h);
json to_json(const StaircaseCoeffMatrix& a);

}  // namespace qrc
