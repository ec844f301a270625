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

#include <utility>
#include <vector>

#include "mgen/rational.hpp"

namespace mgen {

/// Dense polynomial over Q in the monomial basis, coeffs()[i] is the x^i
/// coefficient. Trailing zeros are stripped so the zero polynomial has no
/// coefficients and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial monomial(const Rational& c, long degree);

    const std::vector<Rational>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(long i) const;
    const Rational& leading() const { return c_.back(); }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    RationalPolynomial derivative() const;
    /// p(x + c).
    RationalPolynomial shifted(const Rational& c) const;

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Euclidean division; throws DomainError on a zero divisor.
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace mgen
