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

#include <doctest.h>

#include <random>

#include "mgen/errors.hpp"
#include "mgen/json_io.hpp"
#include "mgen/report.hpp"

using namespace mgen;

TEST_SUITE("io") {

TEST_CASE("rational round trip") {
    for (const char* t : {"0", "7", "-9/2", "123456789012345678901234567891/7"}) {
        const auto q = Rational::parse(t);
        CHECK(to_json(q) == Json(t));
        CHECK(rational_from_json(to_json(q)) == q);
    }
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(Json::array()), UsageError);
}

TEST_CASE("cyclotomic round trip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-20, 20);
    for (long n : {1L, 2L, 3L, 4L, 12L, 15L}) {
        std::vector<Rational> raw(n);
        for (auto& c : raw) c = Rational(d(rng), 1 + std::abs(d(rng)));
        const auto z = Cyclotomic::reduce(raw, n);
        const auto j = to_json(z);
        CHECK(j["root_order"] == n);
        CHECK(cyclotomic_from_json(j) == z);
        CHECK(cyclotomic_from_json(Json::parse(j.dump())) == z);
    }
}

TEST_CASE("p-adic round trip") {
    const auto x = Padic::from_rational(Rational(-17, 12), 5, 20);
    const auto j = to_json(x);
    CHECK(j["p"] == 5);
    CHECK(j["precision"] == 20);
    CHECK(padic_from_json(j) == x);
    const auto y = Padic::from_rational(Rational(50, 3), 5, 12);
    CHECK(padic_from_json(to_json(y)) == y);
    CHECK(to_json(Padic::exact_zero(3))["zero"] == true);
    CHECK(padic_from_json(to_json(Padic::exact_zero(3))) == Padic::exact_zero(3));
    CHECK(to_json(Padic::zero_mod(7, 9))["zero_mod"] == 9);
    CHECK(padic_from_json(to_json(Padic::zero_mod(7, 9))) == Padic::zero_mod(7, 9));
    CHECK_THROWS_AS(padic_from_json(Json{{"p", 5}, {"valuation", 0}, {"digits", {0, 1}}, {"precision", 2}}),
                    UsageError);
}

TEST_CASE("character JSON") {
    const auto j = to_json(DirichletCharacter::from_label(15, 5), true);
    CHECK(j["modulus"] == 15);
    CHECK(j["label"] == 5);
    CHECK(j["values"].size() == 15);
    CHECK(j["values"][0].is_null());
    CHECK(j["values"][1] == 0);
}

CaseRecord make_case(const std::string& name, long i, bool pass) {
    return CaseRecord{name, Json{{"i", i}}, "x = y", pass ? "exact" : "mismatch", std::nullopt, pass};
}

TEST_CASE("empty report passes vacuously") {
    VerificationReport r{"empty", {}, 0.0};
    CHECK(r.pass());
    const auto j = Json::parse(emit_report(r, OutputFormat::json));
    CHECK(j["summary"]["total"] == 0);
    CHECK(j["summary"]["passed"] == 0);
    CHECK(j["summary"]["pass"] == true);
}

TEST_CASE("one failing case fails the report") {
    VerificationReport r{"one", {make_case("a", 0, false)}, 0.0};
    CHECK_FALSE(r.pass());
    CHECK(Json::parse(emit_report(r, OutputFormat::json))["summary"]["pass"] == false);
}

TEST_CASE("mixed report counts and stable ordering") {
    VerificationReport r{"mixed", {}, 1.5};
    for (long i = 0; i < 12; ++i) r.cases.push_back(make_case(i % 2 ? "odd" : "even", 11 - i, i % 3 != 0));
    VerificationReport shuffled = r;
    std::mt19937 rng(1);
    std::shuffle(shuffled.cases.begin(), shuffled.cases.end(), rng);
    r.sort_cases();
    shuffled.sort_cases();
    CHECK(emit_report(r, OutputFormat::json) == emit_report(shuffled, OutputFormat::json));
    CHECK(r.passed() == 8);
    CHECK(r.failed() == 4);
    const auto j = Json::parse(emit_report(r, OutputFormat::json));
    CHECK(j["summary"]["total"] == 12);
    CHECK(j["summary"]["passed"] == 8);
    CHECK(j["cases"].size() == 12);
    CHECK(emit_report(r, OutputFormat::csv).find("check,params") == 0);
    CHECK(emit_report(r, OutputFormat::text).find("8/12 passed") != std::string::npos);
}

TEST_CASE("p-adic residual records") {
    const auto ok = padic_case("c", Json::object(), "r", Padic::zero_mod(5, 38), 35);
    CHECK(ok.pass);
    CHECK(ok.residual == "zero_mod 5^38");
    CHECK(*ok.residual_zero_mod == 38);
    const auto bad = padic_case("c", Json::object(), "r", Padic::from_rational(Rational(25), 5, 10), 35);
    CHECK_FALSE(bad.pass);
    CHECK(*bad.residual_zero_mod == 2);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

}
