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
 * @file padic.hpp
 * @brief Finite-precision p-adic numbers for odd p.
 *
 * A Padic is one of
 *   - an exact zero,
 *   - a bounded zero: known to be 0 mod p^M and nothing more,
 *   - a value p^v * u with u a unit known modulo p^N (relative precision N).
 *
 * Precision follows the usual rules: sums keep the smaller absolute
 * precision, products and quotients the smaller relative precision. A
 * cancellation that exhausts every known digit yields a bounded zero rather
 * than a fabricated value.
 */

#include <climits>
#include <vector>

#include "mgen/rational.hpp"

namespace mgen {

struct PrecisionPolicy {
    long digits = 40;  // target relative precision N
    long guard = 5;    // digits an identity check may lose
};

inline constexpr long kInfinitePrecision = LONG_MAX / 4;

class Padic {
public:
    enum class State { exact_zero, bounded_zero, value };

    static Padic exact_zero(long p);
    static Padic zero_mod(long p, long absolute_precision);
    static Padic one(long p, long precision);
    /// q embedded with relative precision `precision`. p must be an odd prime.
    static Padic from_rational(const Rational& q, long p, long precision);
    static Padic from_integer(const mpz_class& a, long p, long precision) {
        return from_rational(Rational(a), p, precision);
    }
    /// p^valuation * x with x known mod p^precision; x need not be a unit.
    static Padic from_residue(long p, long valuation, const mpz_class& x, long precision);

    long prime() const { return p_; }
    State state() const { return state_; }
    bool is_zero() const { return state_ != State::value; }
    bool is_exact_zero() const { return state_ == State::exact_zero; }

    /// Valuation of a value; a zero state throws.
    long valuation() const;
    /// Guaranteed lower bound on the valuation (M for a bounded zero).
    long valuation_bound() const;
    long relative_precision() const;
    long absolute_precision() const;
    /// For zero states, the M with self = 0 mod p^M (kInfinitePrecision for exact zero).
    long zero_mod() const;

    const mpz_class& unit() const { return unit_; }
    /// Base-p digits of the unit, least significant first, relative_precision() of them.
    std::vector<long> digits() const;

    /// Residue mod p^k in [0, p^k). Needs valuation_bound() >= 0 and absolute_precision() >= k.
    mpz_class residue(long k) const;

    /// Drops digits beyond absolute precision a.
    Padic with_absolute_precision(long a) const;

    /// Largest M such that self = other mod p^M as far as the known digits tell.
    long agreement(const Padic& other) const;

    Padic inverse() const;
    Padic pow(long e) const;

    Padic operator-() const;
    friend Padic operator+(const Padic& a, const Padic& b);
    friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }
    friend Padic operator*(const Padic& a, const Padic& b);
    friend Padic operator/(const Padic& a, const Padic& b);
    Padic& operator+=(const Padic& o) { return *this = *this + o; }
    Padic& operator-=(const Padic& o) { return *this = *this - o; }
    Padic& operator*=(const Padic& o) { return *this = *this * o; }
    Padic& operator/=(const Padic& o) { return *this = *this / o; }

    /// Structural equality: same state, valuation, precision and digits.
    friend bool operator==(const Padic&, const Padic&) = default;

private:
    Padic(long p, State s) : p_(p), state_(s) {}
    static Padic normalized(long p, long v, mpz_class x, long n);
    void check_same_prime(const Padic& o) const;

    long p_ = 3;
    State state_ = State::exact_zero;
    long v_ = 0;  // valuation, or M for a bounded zero
    long n_ = 0;  // relative precision
    mpz_class unit_;
};

mpz_class prime_power(long p, long k);

/// Throws UsageError unless p is an odd prime.
void require_odd_prime(long p);

inline Padic padic_from_rational(const Rational& q, long p, long precision) {
    return Padic::from_rational(q, p, precision);
}

/// omega(a): the (p-1)-th root of unity congruent to a mod p.
Padic teichmuller(long a, long p, long precision);

/// <a> = a / omega(a), a principal unit.
Padic angle(long a, long p, long precision);

/// Iwasawa-free logarithm on principal units, sum (-1)^{k+1} (u-1)^k / k.
Padic log_p(const Padic& u);

/// log_p(<a>) for any unit a.
Padic log_p_unit(long a, long p, long precision);

/// sum x^k / k! for v(x) >= 1. An exact-zero argument returns 1 with the given precision.
Padic exp_p(const Padic& x, long precision_if_exact = PrecisionPolicy{}.digits);

/// <a>^{-s} = exp_p(-s log_p <a>), s in Z_p.
Padic angle_pow(long a, const Padic& s, long p, long precision);

/// binomial(-s, k) = prod_{j<k} (-s - j) / (j + 1).
Padic binom_neg(const Padic& s, long k, long precision_if_exact = PrecisionPolicy{}.digits);

}  // namespace mgen
