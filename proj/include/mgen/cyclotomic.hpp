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
 * @file cyclotomic.hpp
 * @brief Elements of Q(zeta_N) in the power basis modulo Phi_N.
 *
 * A Cyclotomic holds phi(N) rational coefficients of 1, zeta_N, ...,
 * zeta_N^{phi(N)-1}. Values are always reduced, so equal elements of the
 * same root order have identical coefficient vectors. Mixed-order
 * arithmetic lifts both operands to Q(zeta_lcm).
 */

#include <complex>
#include <vector>

#include "mgen/rational.hpp"

namespace mgen {

inline constexpr long kDefaultMaxRootOrder = 1000;

/// Upper bound on N accepted by every Cyclotomic construction.
long max_root_order();
void set_max_root_order(long n);

long euler_phi(long n);

/// Integer coefficients of Phi_n, constant term first. Memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

class Cyclotomic {
public:
    /// Zero of Q.
    Cyclotomic() : Cyclotomic(Rational(), 1) {}
    Cyclotomic(const Rational& r, long root_order = 1);  // NOLINT(google-explicit-constructor)

    /// Canonical representative of sum raw[i] zeta_N^i. N = 0 is a usage error.
    static Cyclotomic reduce(std::vector<Rational> raw, long root_order);

    /// zeta_N^k.
    static Cyclotomic root_power(long root_order, long k);

    long root_order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when the element lies in Q.
    bool is_rational() const;
    /// Throws DomainError when the element is not rational.
    Rational to_rational() const;

    /// Same element viewed in Q(zeta_M); N must divide M.
    Cyclotomic lifted(long m) const;

    /// Evaluation at zeta_N = exp(2 pi i / N) in double precision.
    std::complex<double> to_complex() const;

    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& s);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
    Cyclotomic(long root_order, std::vector<Rational> reduced);

    long n_ = 1;
    std::vector<Rational> c_;
};

/// Free-function spelling of Cyclotomic::reduce.
inline Cyclotomic cyclotomic_reduce(std::vector<Rational> raw, long root_order) {
    return Cyclotomic::reduce(std::move(raw), root_order);
}

inline std::complex<double> cyclotomic_to_complex(const Cyclotomic& z) { return z.to_complex(); }

}  // namespace mgen
