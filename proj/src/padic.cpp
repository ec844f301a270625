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

#include "mgen/padic.hpp"

#include <algorithm>
#include <string>

#include "mgen/dirichlet.hpp"
#include "mgen/errors.hpp"

namespace mgen {

mpz_class prime_power(long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::max(k, 0L)));
    return r;
}

void require_odd_prime(long p) {
    if (p == 2 || !is_prime(p)) throw UsageError("p must be an odd prime, got " + std::to_string(p));
}

namespace {

mpz_class mod_pk(const mpz_class& x, const mpz_class& pk) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
    return r;
}

mpz_class inv_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("non-invertible residue");
    return r;
}

}  // namespace

Padic Padic::exact_zero(long p) {
    require_odd_prime(p);
    return Padic(p, State::exact_zero);
}

Padic Padic::zero_mod(long p, long absolute_precision) {
    Padic z(p, State::bounded_zero);
    z.v_ = absolute_precision;
    return z;
}

Padic Padic::one(long p, long precision) { return from_residue(p, 0, 1, precision); }

Padic Padic::normalized(long p, long v, mpz_class x, long n) {
    if (n <= 0) return zero_mod(p, v + std::max(n, 0L));
    const mpz_class pn = prime_power(p, n);
    x = mod_pk(x, pn);
    if (x == 0) return zero_mod(p, v + n);
    const long j = mgen::valuation(x, p);
    Padic r(p, State::value);
    r.v_ = v + j;
    r.n_ = n - j;
    r.unit_ = x / prime_power(p, j);
    return r;
}

Padic Padic::from_residue(long p, long valuation, const mpz_class& x, long precision) {
    require_odd_prime(p);
    if (precision < 1) throw UsageError("p-adic precision must be >= 1");
    return normalized(p, valuation, x, precision);
}

Padic Padic::from_rational(const Rational& q, long p, long precision) {
    require_odd_prime(p);
    if (precision < 1) throw UsageError("p-adic precision must be >= 1");
    if (q.is_zero()) return exact_zero(p);
    mpz_class num = q.num(), den = q.den();
    const long vn = mgen::valuation(num, p), vd = mgen::valuation(den, p);
    num /= prime_power(p, vn);
    den /= prime_power(p, vd);
    const mpz_class pn = prime_power(p, precision);
    Padic r(p, State::value);
    r.v_ = vn - vd;
    r.n_ = precision;
    r.unit_ = mod_pk(num * inv_mod(den, pn), pn);
    return r;
}

long Padic::valuation() const {
    if (state_ != State::value) throw DomainError("valuation of a p-adic zero");
    return v_;
}

long Padic::valuation_bound() const {
    switch (state_) {
        case State::exact_zero: return kInfinitePrecision;
        case State::bounded_zero: return v_;
        case State::value: return v_;
    }
    return v_;
}

long Padic::relative_precision() const {
    if (state_ != State::value) return 0;
    return n_;
}

long Padic::absolute_precision() const {
    switch (state_) {
        case State::exact_zero: return kInfinitePrecision;
        case State::bounded_zero: return v_;
        case State::value: return v_ + n_;
    }
    return v_;
}

long Padic::zero_mod() const {
    if (state_ == State::value) throw DomainError("zero_mod() of a nonzero p-adic value");
    return absolute_precision();
}

std::vector<long> Padic::digits() const {
    std::vector<long> d;
    if (state_ != State::value) return d;
    mpz_class x = unit_;
    for (long i = 0; i < n_; ++i) {
        d.push_back(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p_)));
        x /= p_;
    }
    return d;
}

mpz_class Padic::residue(long k) const {
    if (absolute_precision() < k)
        throw DomainError("residue mod p^" + std::to_string(k) + " exceeds known precision");
    if (state_ != State::value) return 0;
    if (v_ < 0) throw DomainError("residue of a non-integral p-adic number");
    return mod_pk(unit_ * prime_power(p_, v_), prime_power(p_, k));
}

Padic Padic::with_absolute_precision(long a) const {
    if (a >= absolute_precision()) return *this;
    if (state_ != State::value || v_ >= a) return zero_mod(p_, a);
    return normalized(p_, v_, unit_, a - v_);
}

long Padic::agreement(const Padic& other) const {
    const Padic d = *this - other;
    return d.is_zero() ? d.zero_mod() : d.valuation();
}

void Padic::check_same_prime(const Padic& o) const {
    if (p_ != o.p_) throw UsageError("mixing p-adic numbers of different primes");
}

Padic Padic::operator-() const {
    if (state_ != State::value) return *this;
    Padic r = *this;
    r.unit_ = prime_power(p_, n_) - unit_;
    return r;
}

Padic operator+(const Padic& a, const Padic& b) {
    a.check_same_prime(b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    long vmin = kInfinitePrecision;
    for (const Padic* x : {&a, &b})
        if (x->state_ == Padic::State::value) vmin = std::min(vmin, x->v_);
    if (vmin >= abs_prec) return Padic::zero_mod(a.p_, abs_prec);
    mpz_class sum;
    for (const Padic* x : {&a, &b})
        if (x->state_ == Padic::State::value) sum += x->unit_ * prime_power(a.p_, x->v_ - vmin);
    return Padic::normalized(a.p_, vmin, std::move(sum), abs_prec - vmin);
}

Padic operator*(const Padic& a, const Padic& b) {
    a.check_same_prime(b);
    using S = Padic::State;
    if (a.is_exact_zero() || b.is_exact_zero()) return Padic::exact_zero(a.p_);
    if (a.state_ == S::bounded_zero || b.state_ == S::bounded_zero)
        return Padic::zero_mod(a.p_, a.valuation_bound() + b.valuation_bound());
    const long n = std::min(a.n_, b.n_);
    Padic r(a.p_, S::value);
    r.v_ = a.v_ + b.v_;
    r.n_ = n;
    r.unit_ = mod_pk(a.unit_ * b.unit_, prime_power(a.p_, n));
    return r;
}

Padic Padic::inverse() const {
    if (state_ != State::value) throw DomainError("division by a p-adic zero");
    Padic r(p_, State::value);
    r.v_ = -v_;
    r.n_ = n_;
    r.unit_ = inv_mod(unit_, prime_power(p_, n_));
    return r;
}

Padic operator/(const Padic& a, const Padic& b) {
    a.check_same_prime(b);
    if (b.state_ != Padic::State::value) throw DomainError("division by a p-adic zero");
    if (a.is_exact_zero()) return a;
    if (a.state_ == Padic::State::bounded_zero) return Padic::zero_mod(a.p_, a.v_ - b.v_);
    return a * b.inverse();
}

Padic Padic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Padic result = one(p_, state_ == State::value ? n_ : PrecisionPolicy{}.digits);
    if (e == 0) return result;
    Padic base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Padic teichmuller(long a, long p, long precision) {
    require_odd_prime(p);
    if (mod_floor(a, p) == 0)
        throw DomainError("Teichmuller character undefined at " + std::to_string(a) + " (p | a)");
    const mpz_class pn = prime_power(p, precision);
    mpz_class x = mod_pk(mpz_class(a), pn);
    // x -> x^p is a contraction on the residue class of a; each step fixes one more digit.
    for (long i = 0; i <= precision; ++i) {
        mpz_class y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), pn.get_mpz_t());
        if (y == x) break;
        x = y;
    }
    return Padic::from_residue(p, 0, x, precision);
}

Padic angle(long a, long p, long precision) {
    return Padic::from_integer(a, p, precision) / teichmuller(a, p, precision);
}

Padic log_p(const Padic& u) {
    const long p = u.prime();
    if (u.is_zero() || u.valuation() != 0) throw DomainError("log_p needs a unit argument");
    const Padic x = u - Padic::one(p, u.relative_precision());
    if (x.is_zero()) return x;
    const long vx = x.valuation();
    if (vx < 1) throw DomainError("log_p needs u = 1 mod p; use log_p_unit for general units");
    const long target = u.absolute_precision();
    // Term k has valuation >= k v(x) - floor(log_p k), non-decreasing in k;
    // stop at the first k where that bound reaches the target.
    auto term_bound = [&](long k) {
        long lg = 0;
        for (long q = p; q <= k; q *= p) ++lg;
        return k * vx - lg;
    };
    Padic sum = Padic::exact_zero(p);
    Padic power = x;
    for (long k = 1; term_bound(k) < target; ++k) {
        Padic term = power / Padic::from_integer(k, p, target);
        sum = (k % 2 == 1) ? sum + term : sum - term;
        power *= x;
    }
    return sum.with_absolute_precision(target);
}

Padic log_p_unit(long a, long p, long precision) { return log_p(angle(a, p, precision)); }

Padic exp_p(const Padic& x, long precision_if_exact) {
    const long p = x.prime();
    if (x.is_exact_zero()) return Padic::one(p, precision_if_exact);
    const long target = x.absolute_precision();
    if (x.is_zero()) return Padic::one(p, std::max(target, 1L));
    const long vx = x.valuation();
    if (vx < 1) throw DomainError("exp_p diverges for v(x) < 1 when p is odd");
    // v(x^k / k!) >= k v(x) - floor((k-1)/(p-1)), increasing in k.
    Padic sum = Padic::one(p, target);
    Padic term = Padic::one(p, target);
    for (long k = 1; k * vx - (k - 1) / (p - 1) < target; ++k) {
        term = term * x / Padic::from_integer(k, p, target);
        sum += term;
    }
    return sum.with_absolute_precision(target);
}

Padic angle_pow(long a, const Padic& s, long p, long precision) {
    if (s.is_exact_zero()) return Padic::one(p, precision);
    if (s.valuation_bound() < 0) throw DomainError("angle_pow needs s in Z_p");
    return exp_p(-s * log_p_unit(a, p, precision), precision);
}

Padic binom_neg(const Padic& s, long k, long precision_if_exact) {
    const long p = s.prime();
    const long prec = s.is_zero() ? precision_if_exact : s.relative_precision();
    Padic r = Padic::one(p, prec);
    for (long j = 0; j < k; ++j)
        r = r * (-s - Padic::from_integer(j, p, prec)) / Padic::from_integer(j + 1, p, prec);
    return r;
}

}  // namespace mgen
