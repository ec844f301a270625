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

#include "mgen/report.hpp"

namespace mgen {

struct VerifyOptions {
    std::optional<long> prime;  // restricts the p-adic grids to this prime
    long digits = 40;
    long guard = 5;
};

/// identities, partition, interpolation, derivative, all.
const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace mgen
