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

#include "mgen/json_io.hpp"

#include "mgen/errors.hpp"

namespace mgen {

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const Cyclotomic& z) {
    Json coeffs = Json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"root_order", z.root_order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Padic& x) {
    switch (x.state()) {
        case Padic::State::exact_zero: return Json{{"p", x.prime()}, {"zero", true}};
        case Padic::State::bounded_zero: return Json{{"p", x.prime()}, {"zero_mod", x.zero_mod()}};
        case Padic::State::value: break;
    }
    return Json{{"p", x.prime()},
                {"valuation", x.valuation()},
                {"digits", x.digits()},
                {"precision", x.relative_precision()}};
}

Json to_json(const RootOfUnityValue& v) {
    if (v.zero) return nullptr;
    return Json{{"exponent", v.exponent}, {"order", v.order}};
}

Json to_json(const DirichletCharacter& chi, bool with_values) {
    Json j{{"modulus", chi.modulus()},
           {"label", chi.label()},
           {"exponents", chi.exponents()},
           {"order", chi.order()},
           {"conductor", chi.conductor()},
           {"primitive", chi.is_primitive()}};
    if (with_values) {
        Json values = Json::array();
        for (long a = 0; a < chi.modulus(); ++a) {
            const auto v = chi(a);
            if (v.zero) values.push_back(nullptr);
            else values.push_back(v.exponent * (chi.order() / v.order));
        }
        j["values"] = std::move(values);
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw UsageError("expected a rational string, got " + j.dump());
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("root_order") || !j.contains("coeffs"))
        throw UsageError("malformed cyclotomic JSON: " + j.dump());
    std::vector<Rational> raw;
    for (const auto& c : j.at("coeffs")) raw.push_back(rational_from_json(c));
    return Cyclotomic::reduce(std::move(raw), j.at("root_order").get<long>());
}

Padic padic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p")) throw UsageError("malformed p-adic JSON: " + j.dump());
    const long p = j.at("p").get<long>();
    if (j.contains("zero")) return Padic::exact_zero(p);
    if (j.contains("zero_mod")) {
        require_odd_prime(p);
        return Padic::zero_mod(p, j.at("zero_mod").get<long>());
    }
    const auto digits = j.at("digits").get<std::vector<long>>();
    const long precision = j.at("precision").get<long>();
    if (static_cast<long>(digits.size()) != precision || digits.empty() || digits.front() == 0)
        throw UsageError("p-adic digits must be a canonical unit expansion of length precision");
    mpz_class unit, scale = 1;
    for (long d : digits) {
        if (d < 0 || d >= p) throw UsageError("p-adic digit out of range");
        unit += scale * d;
        scale *= p;
    }
    return Padic::from_residue(p, j.at("valuation").get<long>(), unit, precision);
}

}  // namespace mgen
