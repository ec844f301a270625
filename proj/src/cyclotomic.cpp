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

#include "mgen/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "mgen/errors.hpp"
#include "mgen/polynomial.hpp"

namespace mgen {

namespace {

std::atomic<long> g_max_root_order{kDefaultMaxRootOrder};

void check_root_order(long n) {
    if (n < 1) throw UsageError("root order must be positive, got " + std::to_string(n));
    if (n > max_root_order())
        throw UsageError("root order " + std::to_string(n) + " exceeds configured cap " +
                         std::to_string(max_root_order()));
}

// Exact quotient of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> quo(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const mpz_class q = num[i];
        quo[i - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    return quo;
}

RationalPolynomial as_poly(const std::vector<Rational>& c) { return RationalPolynomial(c); }

RationalPolynomial as_poly(const std::vector<mpz_class>& c) {
    std::vector<Rational> r(c.begin(), c.end());
    return RationalPolynomial(std::move(r));
}

}  // namespace

long max_root_order() { return g_max_root_order.load(); }

void set_max_root_order(long n) {
    if (n < 1) throw UsageError("root order cap must be positive");
    g_max_root_order.store(n);
}

long euler_phi(long n) {
    long result = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    check_root_order(n);
    static std::recursive_mutex mu;
    static std::map<long, std::vector<mpz_class>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(long root_order, std::vector<Rational> reduced)
    : n_(root_order), c_(std::move(reduced)) {}

Cyclotomic::Cyclotomic(const Rational& r, long root_order) : n_(root_order) {
    check_root_order(root_order);
    c_.assign(static_cast<std::size_t>(euler_phi(root_order)), Rational());
    c_[0] = r;
}

Cyclotomic Cyclotomic::reduce(std::vector<Rational> raw, long root_order) {
    check_root_order(root_order);
    const auto n = static_cast<std::size_t>(root_order);
    // zeta^N = 1 folds the exponents first.
    std::vector<Rational> folded(n);
    for (std::size_t i = 0; i < raw.size(); ++i) folded[i % n] += raw[i];
    const auto& phi = cyclotomic_polynomial(root_order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = n; i-- > deg;) {
        if (folded[i].is_zero()) continue;
        const Rational q = folded[i];
        for (std::size_t j = 0; j <= deg; ++j) folded[i - deg + j] -= q * Rational(phi[j]);
    }
    folded.resize(deg);
    return Cyclotomic(root_order, std::move(folded));
}

Cyclotomic Cyclotomic::root_power(long root_order, long k) {
    check_root_order(root_order);
    k %= root_order;
    if (k < 0) k += root_order;
    std::vector<Rational> raw(static_cast<std::size_t>(k) + 1);
    raw[k] = 1;
    return reduce(std::move(raw), root_order);
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw DomainError("cyclotomic element is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw UsageError("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" +
                         std::to_string(m) + ")");
    const long step = m / n_;
    std::vector<Rational> raw(static_cast<std::size_t>(step) * c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return reduce(std::move(raw), m);
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
        acc += c_[i].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
    // Extended Euclid on (Phi_N, a), tracking only the cofactor of a.
    RationalPolynomial r0 = as_poly(cyclotomic_polynomial(n_));
    RationalPolynomial r1 = as_poly(c_);
    RationalPolynomial s0;
    RationalPolynomial s1({Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        RationalPolynomial s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_N is irreducible, so the gcd r0 is a nonzero constant.
    s0 *= r0.coeff(0).inverse();
    return reduce(s0.coeffs(), n_);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.n_ != n_) {
        const long m = std::lcm(n_, o.n_);
        *this = lifted(m);
        return *this += o.lifted(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.n_ != n_) {
        const long m = std::lcm(n_, o.n_);
        *this = lifted(m);
        return *this *= o.lifted(m);
    }
    std::vector<Rational> raw(2 * c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    }
    *this = reduce(std::move(raw), n_);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    const long m = std::lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

}  // namespace mgen
