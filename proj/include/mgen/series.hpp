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
 * @file series.hpp
 * @brief Truncated exponential generating functions.
 *
 * TruncatedExpSeries<T> stores c_0..c_K for f(t) = sum c_n t^n / n!. With
 * this convention products are binomial convolutions, which keeps the
 * Genocchi-type series integral. T is Rational or Cyclotomic; it needs
 * ring operations, scaling by Rational, and inverse() for division.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "mgen/errors.hpp"
#include "mgen/rational.hpp"

namespace mgen {

template <typename T>
class TruncatedExpSeries {
public:
    explicit TruncatedExpSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw UsageError("series needs at least the constant coefficient");
    }

    /// Series with every coefficient equal to `zero` except c_0 = `constant`.
    static TruncatedExpSeries constant(long order, const T& zero, const T& constant) {
        std::vector<T> c(static_cast<std::size_t>(order) + 1, zero);
        c[0] = constant;
        return TruncatedExpSeries(std::move(c));
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](long n) const { return c_[static_cast<std::size_t>(n)]; }

    /// Keeps c_0..c_order.
    TruncatedExpSeries truncated(long order) const {
        if (order > this->order()) throw UsageError("cannot extend a truncated series");
        return TruncatedExpSeries(std::vector<T>(c_.begin(), c_.begin() + order + 1));
    }

    TruncatedExpSeries& operator+=(const TruncatedExpSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    friend TruncatedExpSeries operator+(TruncatedExpSeries a, const TruncatedExpSeries& b) {
        return a += b;
    }

    /// EGF Cauchy product: c_n = sum_k C(n,k) a_k b_{n-k}.
    friend TruncatedExpSeries operator*(const TruncatedExpSeries& a, const TruncatedExpSeries& b) {
        a.check_order(b);
        std::vector<T> out;
        out.reserve(a.c_.size());
        for (long n = 0; n <= a.order(); ++n) {
            auto row = binomial_row(n);
            T acc = a.c_[0] * b.c_[n];
            for (long k = 1; k <= n; ++k) acc += a.c_[k] * b.c_[n - k] * Rational(row[k]);
            out.push_back(std::move(acc));
        }
        return TruncatedExpSeries(std::move(out));
    }

    /// Solves the triangular system sum_k C(n,k) d_k q_{n-k} = a_n for q = a / d.
    /// Requires d_0 invertible.
    friend TruncatedExpSeries operator/(const TruncatedExpSeries& a, const TruncatedExpSeries& d) {
        a.check_order(d);
        const T d0_inv = d.c_[0].inverse();
        std::vector<T> q;
        q.reserve(a.c_.size());
        for (long n = 0; n <= a.order(); ++n) {
            auto row = binomial_row(n);
            T acc = a.c_[n];
            for (long k = 1; k <= n; ++k) acc -= d.c_[k] * q[n - k] * Rational(row[k]);
            q.push_back(acc * d0_inv);
        }
        return TruncatedExpSeries(std::move(q));
    }

    TruncatedExpSeries pow(long e) const {
        if (e < 1) throw UsageError("series power exponent must be positive");
        TruncatedExpSeries r = *this;
        for (long i = 1; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const TruncatedExpSeries&, const TruncatedExpSeries&) = default;

private:
    void check_order(const TruncatedExpSeries& o) const {
        if (o.order() != order()) throw UsageError("series order mismatch");
    }

    std::vector<T> c_;
};

using RationalExpSeries = TruncatedExpSeries<Rational>;

/// EGF product on two rational series (the public series_product operation).
inline RationalExpSeries series_product(const RationalExpSeries& a, const RationalExpSeries& b) {
    return a * b;
}

}  // namespace mgen
