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

/**
 * @file genocchi.hpp
 * @brief Genocchi numbers, multiple Genocchi numbers and polynomials.
 *
 * G_n are the EGF coefficients of 2t/(e^t+1); G_n^{(w)} those of its w-th
 * power, and G_n^{(w)}(x) those of (2t/(e^t+1))^w e^{xt}. All of them are
 * computed from exact series arithmetic, with tables memoized per order.
 */

#include <vector>

#include "mgen/polynomial.hpp"
#include "mgen/rational.hpp"
#include "mgen/series.hpp"

namespace mgen {

inline constexpr long kDefaultGenocchiTerms = 64;

/// G_0^{(w)} .. G_{n_max}^{(w)}. Construction asserts the integrality and
/// leading-term invariants (zero below n = w, w! at n = w).
class MultipleGenocchiTable {
public:
    MultipleGenocchiTable(long order, std::vector<Rational> values);

    long order() const { return w_; }
    long n_max() const { return static_cast<long>(values_.size()) - 1; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& operator[](long n) const { return values_.at(static_cast<std::size_t>(n)); }

private:
    long w_;
    std::vector<Rational> values_;
};

/// 2t/(e^t+1) to order n_max, as t divided by (e^t+1)/2.
RationalExpSeries genocchi_series(long n_max);

std::vector<Rational> genocchi_numbers(long n_max);

/// w >= 1; w = 0 is a UsageError.
MultipleGenocchiTable multiple_genocchi_numbers(long w, long n_max = kDefaultGenocchiTerms);

/// G_n^{(w)}(x) = sum_k C(n,k) x^{n-k} G_k^{(w)}.
RationalPolynomial multiple_genocchi_polynomial(long w, long n);

Rational eval_multiple_genocchi(long w, long n, const Rational& x);

}  // namespace mgen
