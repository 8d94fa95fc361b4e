#include "charmod/anomaly/report.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

nlohmann::json report_to_json(const VerificationReport& r)
{
    return nlohmann::json{
        {"id", std::string(identity_name(r.id))},
        {"status", r.pass ? "pass" : "fail"},
        {"order", r.order},
        {"cap", r.cap},
        {"witness", r.witness},
        {"millis", r.millis},
        {"note", r.note},
    };
}

VerificationReport report_from_json(const nlohmann::json& j)
{
    try {
        VerificationReport r;
        r.id = parse_identity(j.at("id").get<std::string>());
        const auto status = j.at("status").get<std::string>();
        if (status != "pass" && status != "fail")
            throw ParseError("status must be pass or fail, got '" + status + "'");
        r.pass = status == "pass";
        r.order = j.at("order").get<int>();
        r.cap = j.at("cap").get<int>();
        r.witness = j.at("witness").get<std::string>();
        r.millis = j.at("millis").get<long long>();
        r.note = j.value("note", "");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string report_line(const VerificationReport& r)
{
    std::string line = std::string(identity_name(r.id)) + ": " + (r.pass ? "PASS" : "FAIL") +
                       " (order " + std::to_string(r.order) + ", cap " + std::to_string(r.cap) + ", " +
                       std::to_string(r.millis) + " ms)";
    if (!r.pass)
        line += "\n  witness: " + r.witness;
    if (!r.note.empty())
        line += "\n  note: " + r.note;
    return line;
}

} // namespace charmod
