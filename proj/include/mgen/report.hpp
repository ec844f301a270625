/*
   Copyright 2026 The mgen Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgen/json_io.hpp"
#include "mgen/padic.hpp"

namespace mgen {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& name);

struct CaseRecord {
    std::string check;
    Json params = Json::object();
    std::string relation;
    std::string residual;                    // "zero_mod p^M", "exact", "within 1e-08", ...
    std::optional<long> residual_zero_mod;  // M for p-adic residuals
    bool pass = false;

    std::string key() const { return check + " " + params.dump(); }
};

/// Record for a p-adic residual that must vanish modulo p^required.
CaseRecord padic_case(std::string check, Json params, std::string relation, const Padic& residual, long required);

struct VerificationReport {
    std::string suite;
    std::vector<CaseRecord> cases;
    double wall_time_ms = 0.0;

    std::size_t passed() const;
    std::size_t failed() const { return cases.size() - passed(); }
    bool pass() const { return failed() == 0; }
    /// Orders cases by (check, params) so the output does not depend on evaluation order.
    void sort_cases();
};

/// JSON keeps wall_time_ms on a line of its own, outside the case records.
std::string emit_report(const VerificationReport& report, OutputFormat format);

}  // namespace mgen
