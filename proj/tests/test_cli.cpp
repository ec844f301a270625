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

#include <sstream>

#include "golden.hpp"
#include "mgen/cli.hpp"
#include "mgen/json_io.hpp"

using namespace mgen;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("genocchi table") {
    const auto r = call({"genocchi", "--w", "1", "--n-max", "6", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == "[0,1,-1,0,1,0,-3]\n");
    CHECK(r.err.empty());
    CHECK(call({"genocchi", "--w", "2", "--n-max", "4", "--format", "csv"}).out == "n,value\n0,0\n1,0\n2,2\n3,-6\n4,6\n");
}

TEST_CASE("usage errors") {
    auto r = call({"genocchi", "--w", "0"});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.err)["error"] == "usage");
    CHECK(call({"genocchi", "--unknown"}).code == 2);
    CHECK(call({"genocchi", "--w", "x"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"chars", "--modulus", "12"}).code == 2);
    CHECK(call({"verify", "bogus"}).code == 2);
    CHECK(call({"padic-l", "--p", "4", "--s", "1"}).code == 2);
    CHECK(call({"lvalue", "--modulus", "3", "--char", "1", "--n", "1", "--via", "other"}).code == 2);
    CHECK(call({"genocchi", "--format", "xml"}).code == 2);
}

TEST_CASE("domain errors") {
    auto r = call({"zeta-num", "--w", "2", "--s", "1", "--x", "1"});
    CHECK(r.code == 3);
    CHECK(Json::parse(r.err)["error"] == "domain");
    CHECK(call({"padic-l", "--p", "5", "--modulus", "3", "--char", "1", "--s", "1/5"}).code == 3);
}

TEST_CASE("lvalue routes agree") {
    std::string first;
    for (const char* via : {"direct", "partition", "washington"}) {
        const auto r = call({"lvalue", "--modulus", "3", "--char", "1", "--w", "2", "--n", "1", "--via", via, "--F", "9"});
        REQUIRE(r.code == 0);
        const auto v = Json::parse(r.out)["value"];
        CHECK(cyclotomic_from_json(v) == Cyclotomic(Rational(8)));
    }
}

TEST_CASE("chars and gen-genocchi") {
    const auto r = call({"chars", "--modulus", "15"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).size() == 8);
    const auto g = call({"gen-genocchi", "--modulus", "3", "--char", "1", "--w", "2", "--n-max", "3"});
    CHECK(g.code == 0);
    CHECK(cyclotomic_from_json(Json::parse(g.out)["values"][3]) == Cyclotomic(Rational(48)));
}

TEST_CASE("padic-l output") {
    const auto r = call({"padic-l", "--p", "5", "--prec", "20", "--modulus", "3", "--char", "1", "--w", "2", "--s", "0"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["value"].contains("zero_mod"));
}

TEST_CASE("verify interpolation at p = 5") {
    const auto r = call({"verify", "interpolation", "--p", "5", "--prec", "40", "--json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["summary"]["pass"] == true);
    for (const auto& c : j["cases"]) {
        CHECK(c["residual"].get<std::string>().rfind("zero_mod 5^", 0) == 0);
        CHECK(c["residual_zero_mod"].get<long>() >= 35);
    }
}

TEST_CASE("identical arguments give identical output") {
    const std::vector<std::string> args{"verify", "identities", "--json"};
    CHECK(golden::strip_wall_time(call(args).out) == golden::strip_wall_time(call(args).out));
}

TEST_CASE("golden files") {
    for (const auto& g : golden::kCases) {
        std::vector<std::string> args(g.args.begin(), g.args.end());
        const auto r = call(args);
        CHECK(golden::strip_wall_time(r.out) == golden::read(g.file));
    }
}

}
