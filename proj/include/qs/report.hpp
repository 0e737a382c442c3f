#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qs/poly.hpp"

namespace qs {

using Json = nlohmann::ordered_json;

struct Counterexample {
    Json indices;
    std::string expected;
    std::string actual;
};

// Outcome of one verification suite. Cells are individual equalities; only
// the first kMaxStored failures keep their polynomials.
struct VerificationReport {
    static constexpr std::size_t kMaxStored = 50;

    std::string suite;
    Json params = Json::object();
    std::size_t cells = 0;
    std::size_t failures = 0;
    std::vector<Counterexample> counterexamples;
    std::map<std::string, std::string> observations;
    double wall_ms = 0;

    bool passed() const { return failures == 0; }

    // Records one equality cell; returns whether it held.
    bool check(const Json& indices, const GradedPoly& expected, const GradedPoly& actual);
    bool check(const Json& indices, bool ok, const std::string& expected = "true",
               const std::string& actual = "false");
    void observe(const std::string& key, const std::string& value) { observations[key] = value; }

    // Appends another report's cells in order.
    void merge(const VerificationReport& other);

    Json to_json(bool with_timing = false) const;
    std::string to_text() const;
};

Json poly_to_json(const GradedPoly& p);

}  // namespace qs
