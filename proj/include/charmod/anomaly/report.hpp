#pragma once

#include <json.hpp>

#include "charmod/anomaly/verify.hpp"

namespace charmod {

// {id, status, order, cap, witness, millis, note}
nlohmann::json report_to_json(const VerificationReport& r);
// Throws ParseError on a malformed object.
VerificationReport report_from_json(const nlohmann::json& j);

std::string report_line(const VerificationReport& r);

} // namespace charmod
