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

#include "mgen/report.hpp"

#include <algorithm>
#include <sstream>

#include "mgen/errors.hpp"

namespace mgen {

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw UsageError("unknown output format '" + name + "' (expected json, csv or text)");
}

CaseRecord padic_case(std::string check, Json params, std::string relation, const Padic& residual, long required) {
    CaseRecord rec{std::move(check), std::move(params), std::move(relation), {}, std::nullopt, false};
    const std::string base = std::to_string(residual.prime()) + "^";
    switch (residual.state()) {
        case Padic::State::exact_zero:
            rec.residual = "exact_zero";
            rec.pass = true;
            break;
        case Padic::State::bounded_zero:
            rec.residual = "zero_mod " + base + std::to_string(residual.zero_mod());
            rec.residual_zero_mod = residual.zero_mod();
            rec.pass = residual.zero_mod() >= required;
            break;
        case Padic::State::value:
            // A nonzero residual of valuation v still vanishes modulo p^v.
            rec.residual = "zero_mod " + base + std::to_string(residual.valuation()) + " (nonzero)";
            rec.residual_zero_mod = residual.valuation();
            rec.pass = residual.valuation() >= required;
            break;
    }
    return rec;
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

void VerificationReport::sort_cases() {
    std::stable_sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
}

namespace {

Json case_json(const CaseRecord& c) {
    Json j{{"check", c.check}, {"params", c.params}, {"relation", c.relation}, {"residual", c.residual}};
    j["residual_zero_mod"] = c.residual_zero_mod ? Json(*c.residual_zero_mod) : Json(nullptr);
    j["pass"] = c.pass;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string emit_report(const VerificationReport& report, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            Json cases = Json::array();
            for (const auto& c : report.cases) cases.push_back(case_json(c));
            Json j{{"suite", report.suite},
                   {"cases", std::move(cases)},
                   {"summary",
                    Json{{"total", report.cases.size()},
                         {"passed", report.passed()},
                         {"failed", report.failed()},
                         {"pass", report.pass()}}}};
            j["wall_time_ms"] = report.wall_time_ms;
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            os << "check,params,relation,residual,residual_zero_mod,pass\n";
            for (const auto& c : report.cases) {
                os << csv_field(c.check) << ',' << csv_field(c.params.dump()) << ',' << csv_field(c.relation) << ','
                   << csv_field(c.residual) << ',' << (c.residual_zero_mod ? std::to_string(*c.residual_zero_mod) : "")
                   << ',' << (c.pass ? "true" : "false") << '\n';
            }
            break;
        case OutputFormat::text:
            for (const auto& c : report.cases) {
                os << (c.pass ? "PASS " : "FAIL ") << c.check << ' ' << c.params.dump() << "  " << c.relation << "  ["
                   << c.residual << "]\n";
            }
            os << report.suite << ": " << report.passed() << '/' << report.cases.size() << " passed\n";
            break;
    }
    return os.str();
}

}  // namespace mgen
