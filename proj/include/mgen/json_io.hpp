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

// JSON encodings:
//   Rational   "num/den", or "num" when the denominator is 1
//   Cyclotomic {"root_order": N, "coeffs": ["a/b", ...]}
//   Padic      {"p", "valuation", "digits", "precision"} | {"p", "zero": true} | {"p", "zero_mod": M}
//   character  {"modulus", "label", "exponents", "order", "conductor", "primitive"[, "values"]}

#include <json.hpp>

#include "mgen/cyclotomic.hpp"
#include "mgen/dirichlet.hpp"
#include "mgen/padic.hpp"
#include "mgen/rational.hpp"

namespace mgen {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Cyclotomic& z);
Json to_json(const Padic& x);
Json to_json(const RootOfUnityValue& v);
/// values: one entry per residue 0..m-1, null where chi vanishes, else the
/// exponent k of zeta_order(chi)^k.
Json to_json(const DirichletCharacter& chi, bool with_values = false);

Rational rational_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);
Padic padic_from_json(const Json& j);

}  // namespace mgen
