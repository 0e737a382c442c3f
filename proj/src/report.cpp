#include "qs/report.hpp"

#include <limits>
#include <sstream>

namespace qs {

bool VerificationReport::check(const Json& indices, const GradedPoly& expected, const GradedPoly& actual) {
    if (expected == actual) {
        ++cells;
        return true;
    }
    return check(indices, false, expected.str(), actual.str());
}

bool VerificationReport::check(const Json& indices, bool ok, const std::string& expected, const std::string& actual) {
    ++cells;
    if (ok) return true;
    ++failures;
    if (counterexamples.size() < kMaxStored) counterexamples.push_back({indices, expected, actual});
    return false;
}

void VerificationReport::merge(const VerificationReport& other) {
    cells += other.cells;
    failures += other.failures;
    for (const auto& c : other.counterexamples)
        if (counterexamples.size() < kMaxStored) counterexamples.push_back(c);
    for (const auto& [k, v] : other.observations) observations[k] = v;
}

Json VerificationReport::to_json(bool with_timing) const {
    Json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["params"] = params;
    j["status"] = passed() ? "pass" : "fail";
    j["cells"] = cells;
    j["failures"] = failures;
    Json ce = Json::array();
    for (const auto& c : counterexamples)
        ce.push_back(Json{{"indices", c.indices}, {"expected", c.expected}, {"actual", c.actual}});
    j["counterexamples"] = ce;
    Json obs = Json::object();
    for (const auto& [k, v] : observations) obs[k] = v;
    j["observations"] = obs;
    if (with_timing) j["wall_ms"] = wall_ms;
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << suite << " " << params.dump() << ": " << (passed() ? "PASS" : "FAIL") << " (" << cells << " cells, "
        << failures << " failures)\n";
    for (const auto& [k, v] : observations) out << "  " << k << " = " << v << "\n";
    for (const auto& c : counterexamples)
        out << "  at " << c.indices.dump() << ": expected " << c.expected << ", got " << c.actual << "\n";
    return out.str();
}

Json poly_to_json(const GradedPoly& p) {
    Json j = Json::object();
    for (const auto& [m, c] : p.terms()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            j[p.monomial_string(m)] = static_cast<long long>(c);
        else
            j[p.monomial_string(m)] = c.str();
    }
    return j;
}

}  // namespace qs
