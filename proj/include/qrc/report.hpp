#pragma once

#include <map>
#include <string>

namespace qrc {

/// Structured pass/fail result of one identity instance. `witness` is
/// nonempty exactly when the identity fails. Conjecture checkers set
/// `conjecture`; their failures are reported, not fatal.
struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> params;
    bool holds = false;
    bool conjecture = false;
    std::string lhs;
    std::string rhs;
    std::string witness;

    /// Deterministic sort key for aggregation.
    std::string key() const {
        std::string k = identity;
        for (const auto& [name, value] : params) k += "|" + name + "=" + value;
        return k;
    }
};

}  // namespace qrc
