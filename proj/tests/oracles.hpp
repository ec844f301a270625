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

// Independent reference computations for the tests. None of these call the
// code paths they are used to check.

#include <gmpxx.h>

#include <functional>
#include <numeric>
#include <vector>

#include "mgen/dirichlet.hpp"
#include "mgen/rational.hpp"

namespace oracle {

using mgen::Rational;

inline mpz_class choose(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class fact(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// B_0 = 1, sum_{k<=n} C(n+1,k) B_k = 0 (B_1 = -1/2).
inline std::vector<Rational> bernoulli(long n_max) {
    std::vector<Rational> b(n_max + 1);
    b[0] = Rational(1);
    for (long n = 1; n <= n_max; ++n) {
        mpq_class acc = 0;
        for (long k = 0; k < n; ++k) acc += mpq_class(choose(n + 1, k)) * b[k].raw();
        b[n] = Rational(mpq_class(-acc / (n + 1)));
    }
    return b;
}

inline std::vector<Rational> genocchi_from_bernoulli(long n_max) {
    const auto b = bernoulli(n_max);
    std::vector<Rational> g(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        mpz_class two_n = 1;
        two_n <<= n;
        g[n] = Rational(mpq_class(2 * (1 - two_n) * b[n].raw()));
    }
    return g;
}

// sum over compositions i_1 + ... + i_w = n of n!/(i_1! ... i_w!) prod g_{i_j},
// by explicit recursion over the parts.
inline std::vector<Rational> multinomial_power(const std::vector<Rational>& g, long w) {
    const long n_max = static_cast<long>(g.size()) - 1;
    std::vector<Rational> out(n_max + 1);
    std::vector<long> parts(w);
    std::function<void(long, long, long)> rec = [&](long i, long left, long n) {
        if (i == w - 1) {
            parts[i] = left;
            mpq_class term = fact(n);
            for (long j : parts) term *= g[j].raw() / mpq_class(fact(j));
            out[n] = Rational(mpq_class(out[n].raw() + term));
            return;
        }
        for (long k = 0; k <= left; ++k) {
            parts[i] = k;
            rec(i + 1, left - k, n);
        }
    };
    for (long n = 0; n <= n_max; ++n) rec(0, n, n);
    return out;
}

// Number of tuples in [1, F]^w with each coordinate sum, by enumeration.
inline std::vector<mpz_class> tuple_counts(long F, long w) {
    std::vector<mpz_class> counts(w * F + 1);
    std::vector<long> a(w, 1);
    while (true) {
        counts[std::accumulate(a.begin(), a.end(), 0L)] += 1;
        long i = 0;
        while (i < w && a[i] == F) a[i++] = 1;
        if (i == w) break;
        ++a[i];
    }
    return counts;
}

// Smallest d | m with chi trivial on every unit a = 1 mod d.
inline long brute_conductor(const mgen::DirichletCharacter& chi) {
    const long m = chi.modulus();
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        bool trivial = true;
        for (long a = 1; a < m && trivial; ++a)
            if (std::gcd(a, m) == 1 && a % d == 1 % d) trivial = chi(a).is_one();
        if (trivial) return d;
    }
    return m;
}

// a^{-1} mod m.
inline long inverse_mod(long a, long m) {
    for (long x = 1; x < m; ++x)
        if ((a % m) * x % m == 1) return x;
    return 0;
}

}  // namespace oracle
