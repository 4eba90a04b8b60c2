#pragma once

#include <nlohmann/json.hpp>

#include "jcm/cmnet.hpp"
#include "jcm/counterex.hpp"
#include "jcm/criteria.hpp"
#include "jcm/decomp.hpp"
#include "jcm/shifts.hpp"

namespace jcm::cli {

/// {"verdict", "witness": {"alpha", "beta", "value"}, "window": [M, N], ...}
nlohmann::json to_json(const DifferenceCertificate& cert);
DifferenceCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartialFraction& d);
nlohmann::json to_json(const QuotientResidue& d);
nlohmann::json to_json(const CriteriaReport& r);
nlohmann::json to_json(const Bracket& b);

/// Full profile with exact rationals plus the derived analyses.
nlohmann::json to_json(const ShiftProfile& prof, const SubnormalReport& sub, const EssentialNormalityReport& ess);

/// Shortest round-trip decimal for a double.
std::string format_double(double v);

}  // namespace jcm::cli
