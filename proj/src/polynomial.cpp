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

#include "mgen/polynomial.hpp"

#include <algorithm>

#include "mgen/errors.hpp"

namespace mgen {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, long degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RationalPolynomial::coeff(long i) const {
    if (i < 0 || i > degree()) return Rational();
    return c_[static_cast<std::size_t>(i)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
    // Taylor shift: sum_i a_i (x+c)^i, coefficient of x^j is sum_{i>=j} a_i C(i,j) c^{i-j}.
    const long d = degree();
    std::vector<Rational> out(c_.size());
    std::vector<Rational> cpow(c_.size());
    if (!c_.empty()) cpow[0] = 1;
    for (std::size_t i = 1; i < cpow.size(); ++i) cpow[i] = cpow[i - 1] * c;
    for (long i = 0; i <= d; ++i) {
        auto row = binomial_row(i);
        for (long j = 0; j <= i; ++j) out[j] += c_[i] * Rational(row[j]) * cpow[i - j];
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial>
RationalPolynomial::divmod(const RationalPolynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {RationalPolynomial(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const Rational lead_inv = d.leading().inverse();
    for (long i = degree(); i >= d.degree(); --i) {
        const Rational q = rem[i] * lead_inv;
        if (q.is_zero()) continue;
        quo[i - d.degree()] = q;
        for (long j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
    }
    rem.resize(static_cast<std::size_t>(d.degree()));
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

}  // namespace mgen
