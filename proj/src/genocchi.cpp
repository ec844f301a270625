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

#include "mgen/genocchi.hpp"

#include <map>
#include <mutex>
#include <string>

#include "mgen/errors.hpp"

namespace mgen {

MultipleGenocchiTable::MultipleGenocchiTable(long order, std::vector<Rational> values)
    : w_(order), values_(std::move(values)) {
    if (w_ < 1) throw UsageError("multiple Genocchi order must be >= 1");
    const auto w_fact = Rational(factorial(w_));
    for (long n = 0; n <= n_max(); ++n) {
        const Rational& v = values_[n];
        if (!v.is_integer())
            throw std::logic_error("G_" + std::to_string(n) + "^(" + std::to_string(w_) +
                                   ") is not an integer");
        if (n < w_ && !v.is_zero()) throw std::logic_error("nonzero G_n^(w) below n = w");
        if (n == w_ && v != w_fact) throw std::logic_error("G_w^(w) != w!");
    }
}

RationalExpSeries genocchi_series(long n_max) {
    if (n_max < 0) throw UsageError("n_max must be non-negative");
    std::vector<Rational> num(static_cast<std::size_t>(n_max) + 1);
    std::vector<Rational> den(static_cast<std::size_t>(n_max) + 1, Rational(1, 2));
    if (n_max >= 1) num[1] = 1;
    den[0] = 1;
    return RationalExpSeries(std::move(num)) / RationalExpSeries(std::move(den));
}

std::vector<Rational> genocchi_numbers(long n_max) { return genocchi_series(n_max).coeffs(); }

namespace {

// Per order, the longest table computed so far; shorter requests are prefixes.
struct GenocchiCache {
    std::mutex mu;
    std::map<long, std::vector<Rational>> tables;
};

GenocchiCache& cache() {
    static GenocchiCache c;
    return c;
}

}  // namespace

MultipleGenocchiTable multiple_genocchi_numbers(long w, long n_max) {
    if (w < 1) throw UsageError("multiple Genocchi order w must be >= 1 (got " + std::to_string(w) + ")");
    if (n_max < 0) throw UsageError("n_max must be non-negative");
    auto& c = cache();
    {
        std::lock_guard lock(c.mu);
        if (auto it = c.tables.find(w); it != c.tables.end() && static_cast<long>(it->second.size()) > n_max)
            return MultipleGenocchiTable(w, {it->second.begin(), it->second.begin() + n_max + 1});
    }
    const auto base = genocchi_series(n_max);
    auto values = base.pow(w).coeffs();
    MultipleGenocchiTable table(w, values);
    std::lock_guard lock(c.mu);
    auto& slot = c.tables[w];
    if (slot.size() < values.size()) slot = std::move(values);
    return table;
}

RationalPolynomial multiple_genocchi_polynomial(long w, long n) {
    if (n < 0) throw UsageError("polynomial index n must be non-negative");
    const auto table = multiple_genocchi_numbers(w, n);
    const auto row = binomial_row(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) coeffs[j] = Rational(row[j]) * table[n - j];
    return RationalPolynomial(std::move(coeffs));
}

Rational eval_multiple_genocchi(long w, long n, const Rational& x) {
    return multiple_genocchi_polynomial(w, n)(x);
}

}  // namespace mgen
