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

#include <doctest.h>

#include <numeric>
#include <random>

#include "mgen/errors.hpp"
#include "mgen/padic.hpp"
#include "oracles.hpp"

using namespace mgen;

namespace {

constexpr long N = 40;

// Largest M with d = 0 mod p^M.
long vanishes_to(const Padic& d) { return d.is_zero() ? d.zero_mod() : d.valuation(); }

long known(const Padic& a, const Padic& b) { return std::min(a.absolute_precision(), b.absolute_precision()); }

bool same(const Padic& a, const Padic& b) { return vanishes_to(a - b) >= known(a, b); }

Padic q(const char* text, long p, long n = N) { return Padic::from_rational(Rational::parse(text), p, n); }

}  // namespace

TEST_SUITE("padic") {

TEST_CASE("embedding rationals") {
    const auto half = q("1/2", 3, 3);
    CHECK(half.valuation() == 0);
    CHECK(half.digits() == std::vector<long>{2, 1, 1});
    const auto six = q("6", 3);
    CHECK(six.valuation() == 1);
    CHECK(six.digits().front() == 2);
    CHECK(q("-1", 5, 3).digits() == std::vector<long>{4, 4, 4});
    CHECK(q("2/9", 3).valuation() == -2);
    CHECK(q("0", 7).is_exact_zero());
    CHECK_THROWS_AS(q("1", 9), UsageError);
    CHECK_THROWS_AS(q("1", 2), UsageError);
}

TEST_CASE("precision rules") {
    const auto a = Padic::from_residue(5, 0, 7, 10);  // abs 10
    const auto b = Padic::from_residue(5, 2, 3, 4);   // abs 6
    CHECK((a + b).absolute_precision() == 6);
    CHECK((a * b).relative_precision() == 4);
    CHECK((a / b).relative_precision() == 4);
    CHECK((a - a).state() == Padic::State::bounded_zero);
    CHECK((a - a).zero_mod() == 10);
    CHECK((a * Padic::exact_zero(5)).is_exact_zero());
    CHECK((Padic::zero_mod(5, 3) * a).zero_mod() == 3);
    CHECK_THROWS_AS(Padic::zero_mod(5, 3).inverse(), DomainError);
    CHECK_THROWS_AS(a + Padic::one(7, 10), UsageError);
}

TEST_CASE("ring homomorphism on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-500, 500);
    for (long p : {3L, 5L, 7L}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Rational x(d(rng), 1 + std::abs(d(rng)));
            Rational y(d(rng), 1 + std::abs(d(rng)));
            if (y.is_zero()) y = Rational(1);
            const auto px = padic_from_rational(x, p, N), py = padic_from_rational(y, p, N);
            CHECK(same(px + py, padic_from_rational(x + y, p, N)));
            CHECK(same(px - py, padic_from_rational(x - y, p, N)));
            CHECK(same(px * py, padic_from_rational(x * y, p, N)));
            CHECK(same(px / py, padic_from_rational(x / y, p, N)));
        }
    }
}

TEST_CASE("Teichmuller examples") {
    CHECK(teichmuller(1, 5, N) == Padic::one(5, N));
    CHECK(teichmuller(4, 5, N) == -Padic::one(5, N));
    CHECK(teichmuller(2, 5, N).residue(2) == 7);
    CHECK(angle(1, 7, N) == Padic::one(7, N));
    CHECK(angle(-1, 7, N) == Padic::one(7, N));
    CHECK(angle(6, 7, N) == -Padic::from_integer(6, 7, N));
    CHECK(angle(2, 5, N).residue(2) == 11);
    CHECK_THROWS_AS(teichmuller(10, 5, N), DomainError);
    CHECK_THROWS_AS(angle(3, 3, N), DomainError);
}

TEST_CASE("logarithm and exponential examples") {
    CHECK(log_p(Padic::one(3, N)).is_zero());
    CHECK(log_p(q("4", 3)).residue(3) == 21);
    CHECK(log_p(q("16", 3)).residue(3) == 15);
    CHECK(exp_p(Padic::exact_zero(3)) == Padic::one(3, N));
    CHECK(exp_p(q("3", 3)).residue(3) == 13);
    CHECK(same(exp_p(log_p(q("6", 5))), q("6", 5)));
    CHECK_THROWS_AS(exp_p(q("1", 3)), DomainError);
    CHECK_THROWS_AS(log_p(q("2", 3)), DomainError);
}

TEST_CASE("angle powers and binomials") {
    CHECK(angle_pow(2, Padic::exact_zero(5), 5, N) == Padic::one(5, N));
    CHECK(same(angle_pow(2, q("-1", 5), 5, N), angle(2, 5, N)));
    CHECK(angle_pow(2, q("1", 5), 5, 2).residue(2) == 16);
    CHECK(binom_neg(q("7/2", 5), 0) == Padic::one(5, N));
    CHECK(same(binom_neg(q("7/2", 5), 1), q("-7/2", 5)));
    CHECK(same(binom_neg(q("-4", 5), 2), q("6", 5)));
}

TEST_CASE("kernel properties over all units below p^2") {
    for (long p : {3L, 5L, 7L}) {
        for (long a = 1; a < p * p; ++a) {
            if (a % p == 0) continue;
            const auto w = teichmuller(a, p, N);
            CHECK(w.relative_precision() == N);
            CHECK(w.pow(p) == w);
            CHECK(w.pow(p - 1) == Padic::one(p, N));
            CHECK(w.residue(1) == a % p);

            const auto u = angle(a, p, N);
            CHECK(vanishes_to(u - Padic::one(p, N)) >= 1);
            CHECK(same(w * u, Padic::from_integer(a, p, N)));

            const auto l = log_p(u);
            CHECK(l.valuation_bound() >= 1);
            CHECK(l.absolute_precision() >= N - 5);
            CHECK(same(exp_p(l), u));
            CHECK(same(log_p_unit(a, p, N), l));

            const auto x = Padic::from_integer(mpz_class(p) * a, p, N);
            CHECK(same(log_p(exp_p(x)), x));

            for (long b : {2L, p + 1, p * p - 1}) {
                if (b % p == 0) continue;
                CHECK(same(log_p(u * angle(b, p, N)), l + log_p(angle(b, p, N))));
            }

            Padic prod = Padic::one(p, N);
            for (long n = 1; n <= 10; ++n) {
                prod = prod * u;
                CHECK(same(angle_pow(a, Padic::from_integer(-n, p, N), p, N), prod));
            }
        }
    }
}

// <t>^{-s} = sum_k C(-s, k) (<t> - 1)^k, with the binomials formed exactly in Q.
TEST_CASE("exp-log power agrees with the binomial series") {
    for (long p : {3L, 5L, 7L}) {
        for (const char* s_text : {"3", "-2", "1/2", "5/7", "-11/4"}) {
            const auto s = Rational::parse(s_text);
            if (s.den() % p == 0) continue;
            for (long t = 1; t < p * p; ++t) {
                if (t % p == 0) continue;
                const auto d = angle(t, p, N) - Padic::one(p, N);
                Padic sum = Padic::one(p, N);
                Padic dk = Padic::one(p, N);
                Rational c(1);
                for (long k = 1; k <= N + 5; ++k) {
                    c = c * (-s - Rational(k - 1)) / Rational(k);
                    dk = dk * d;
                    sum = sum + padic_from_rational(c, p, N) * dk;
                }
                const auto lhs = angle_pow(t, padic_from_rational(s, p, N), p, N);
                CHECK(vanishes_to(lhs - sum) >= std::min(known(lhs, sum), N - 5));
            }
        }
    }
}

TEST_CASE("digits and residues") {
    const auto x = q("-17/4", 7);
    mpz_class m = prime_power(7, 5);
    mpz_class expect = (mpz_class(-17) * oracle::inverse_mod(4, 16807)) % m;
    if (expect < 0) expect += m;
    CHECK(x.residue(5) == expect);
    CHECK(x.with_absolute_precision(5).absolute_precision() == 5);
    CHECK(x.agreement(x) == x.absolute_precision());
}

}
