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

#include "mgen/rational.hpp"

#include "mgen/errors.hpp"

namespace mgen {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw UsageError("malformed rational '" + std::string(text) + "'");
        return Rational(to_mpz(text));
    }
    auto n = text.substr(0, slash);
    auto d = text.substr(slash + 1);
    if (!is_int(n) || !is_int(d) || d.front() == '-' || d.front() == '+')
        throw UsageError("malformed rational '" + std::string(text) + "'");
    return Rational(to_mpz(n), to_mpz(d));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<mpz_class> binomial_row(long n) {
    std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

long valuation(const mpz_class& v, long p) {
    if (v == 0) throw DomainError("valuation of zero");
    mpz_class x = abs(v);
    long e = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
        x /= p;
        ++e;
    }
    return e;
}

}  // namespace mgen
