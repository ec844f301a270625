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

#include "mgen/lseries.hpp"

#include <cmath>
#include <string>

#include "mgen/errors.hpp"
#include "mgen/genocchi.hpp"
#include "mgen/series.hpp"

namespace mgen {

namespace {

void require_odd_positive(long F, const char* what) {
    if (F < 1 || F % 2 == 0)
        throw UsageError(std::string(what) + " must be an odd positive integer, got " + std::to_string(F));
}

void require_order(long w) {
    if (w < 1) throw UsageError("order w must be >= 1, got " + std::to_string(w));
}

void require_multiple(const DirichletCharacter& chi, long F) {
    require_odd_positive(F, "F");
    if (F % chi.modulus() != 0)
        throw UsageError("F = " + std::to_string(F) + " is not a multiple of the modulus " +
                         std::to_string(chi.modulus()));
}

// Position of chi(t) in the power basis of Q(zeta_N), N = chi.order(); -1 when chi(t) = 0.
long value_slot(const DirichletCharacter& chi, long t) {
    const auto v = chi(t);
    if (v.zero) return -1;
    return v.exponent * (chi.order() / v.order);
}

Rational sign_of(long t) { return (t % 2 == 0) ? Rational(1) : Rational(-1); }

// sum_t r_w(t) chi(t) term(t), collected in Q(zeta_N).
template <typename Term>
Cyclotomic character_weighted_sum(const DirichletCharacter& chi, const TupleSumWeights& weights, Term term) {
    std::vector<Rational> raw(static_cast<std::size_t>(chi.order()));
    for (long t = weights.min_sum(); t <= weights.max_sum(); ++t) {
        const long slot = value_slot(chi, t);
        if (slot < 0) continue;
        raw[slot] += Rational(weights(t)) * term(t);
    }
    return Cyclotomic::reduce(std::move(raw), chi.order());
}

// (-1)^t F^{n-w} G_n^{(w)}(t/F) / (C(n,w) w!) without recomputing the polynomial per t.
struct PartialZetaEvaluator {
    long F, w, n;
    RationalPolynomial poly;
    Rational scale;

    PartialZetaEvaluator(long F_, long w_, long n_)
        : F(F_), w(w_), n(n_), poly(multiple_genocchi_polynomial(w_, n_)) {
        require_odd_positive(F, "F");
        require_order(w);
        if (n < w)
            throw DomainError("partial zeta at s = w - n needs n >= w (n = " + std::to_string(n) +
                              ", w = " + std::to_string(w) + ")");
        scale = Rational(F).pow(n - w) / Rational(mpz_class(binomial(n, w) * factorial(w)));
    }

    Rational operator()(long t) const { return sign_of(t) * scale * poly(Rational(t, F)); }
};

}  // namespace

TupleSumWeights::TupleSumWeights(long F, long w) : F_(F), w_(w) {
    require_odd_positive(F, "F");
    require_order(w);
    counts_.assign(1, mpz_class(1));
    for (long i = 0; i < w; ++i) {
        // Multiply by z + ... + z^F using a sliding window.
        std::vector<mpz_class> next(counts_.size() + static_cast<std::size_t>(F));
        mpz_class window;
        for (std::size_t d = 1; d < next.size(); ++d) {
            if (d - 1 < counts_.size()) window += counts_[d - 1];
            if (d > static_cast<std::size_t>(F) && d - 1 - F < counts_.size()) window -= counts_[d - 1 - F];
            next[d] = window;
        }
        counts_ = std::move(next);
    }
}

const mpz_class& TupleSumWeights::operator()(long t) const {
    static const mpz_class zero;
    if (t < 0 || t >= static_cast<long>(counts_.size())) return zero;
    return counts_[static_cast<std::size_t>(t)];
}

std::vector<Cyclotomic> generalized_genocchi(const DirichletCharacter& chi, long w, long n_max) {
    require_order(w);
    if (n_max < 0) throw UsageError("n_max must be non-negative");
    const long f = chi.modulus();
    const TupleSumWeights weights(f, w);
    std::vector<Cyclotomic> out;
    for (long n = 0; n <= n_max; ++n) {
        const auto poly = multiple_genocchi_polynomial(w, n);
        const Rational scale = Rational(f).pow(n - w);
        out.push_back(character_weighted_sum(chi, weights, [&](long t) {
            return sign_of(t) * scale * poly(Rational(t, f));
        }));
    }
    return out;
}

std::vector<Cyclotomic> generalized_genocchi_series_oracle(const DirichletCharacter& chi, long w, long n_max) {
    require_order(w);
    if (n_max < 0) throw UsageError("n_max must be non-negative");
    const long f = chi.modulus();
    const long N = chi.order();
    const Cyclotomic zero(Rational(), N);

    // Numerator sum over tuples: EGF coefficient n is sum (-1)^S chi(S) S^n.
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(n_max) + 1,
                                           std::vector<Rational>(static_cast<std::size_t>(N)));
    std::vector<long> a(static_cast<std::size_t>(w), 1);
    while (true) {
        long S = 0;
        for (long x : a) S += x;
        if (const long slot = value_slot(chi, S); slot >= 0) {
            Rational power = sign_of(S);
            for (long n = 0; n <= n_max; ++n) {
                raw[n][slot] += power;
                power *= Rational(S);
            }
        }
        std::size_t i = 0;
        while (i < a.size() && a[i] == f) a[i++] = 1;
        if (i == a.size()) break;
        ++a[i];
    }
    std::vector<Cyclotomic> num;
    for (auto& r : raw) num.push_back(Cyclotomic::reduce(std::move(r), N));

    std::vector<Cyclotomic> two_t(static_cast<std::size_t>(n_max) + 1, zero);
    if (w <= n_max) two_t[w] = Cyclotomic(Rational(2).pow(w) * Rational(factorial(w)), N);

    std::vector<Cyclotomic> base(static_cast<std::size_t>(n_max) + 1, zero);
    base[0] = Cyclotomic(Rational(2), N);
    for (long n = 1; n <= n_max; ++n) base[n] = Cyclotomic(Rational(f).pow(n), N);

    using Series = TruncatedExpSeries<Cyclotomic>;
    const Series result = (Series(std::move(two_t)) * Series(std::move(num))) / Series(std::move(base)).pow(w);
    return result.coeffs();
}

Rational partial_zeta_neg(long a_sum, long F, long w, long n) {
    const PartialZetaEvaluator eval(F, w, n);
    if (a_sum < w || a_sum > w * F)
        throw UsageError("a_sum = " + std::to_string(a_sum) + " is not a sum of " + std::to_string(w) +
                         " residues in [1, " + std::to_string(F) + "]");
    return eval(a_sum);
}

Cyclotomic l_value_neg(const DirichletCharacter& chi, long w, long n) {
    require_order(w);
    if (n < 0) throw UsageError("l_value_neg needs n >= 0");
    const auto g = generalized_genocchi(chi, w, n + w);
    return g[n + w] * Rational(mpz_class(binomial(n + w, w) * factorial(w))).inverse();
}

Cyclotomic l_value_via_partition(const DirichletCharacter& chi, long w, long n, long F) {
    require_multiple(chi, F);
    const PartialZetaEvaluator eval(F, w, n);
    return character_weighted_sum(chi, TupleSumWeights(F, w), eval);
}

Cyclotomic washington_rhs_at_neg(const DirichletCharacter& chi, long w, long n, long F) {
    require_multiple(chi, F);
    require_order(w);
    if (n < 0) throw UsageError("washington_rhs_at_neg needs n >= 0");
    const auto G = multiple_genocchi_numbers(w, n);
    const auto row = binomial_row(n);
    const Rational inv_Fw = Rational(F).pow(-w);
    return character_weighted_sum(chi, TupleSumWeights(F, w), [&](long t) {
        Rational inner;
        Rational ratio_power = 1;  // (F/t)^k
        const Rational ratio(F, t);
        for (long k = 0; k <= n; ++k) {
            inner += Rational(row[k]) * ratio_power * G[k];
            ratio_power *= ratio;
        }
        return sign_of(t) * inv_Fw * Rational(t).pow(n) * inner;
    });
}

NumericResult alternating_sum(const std::function<long double(long)>& term, double tol) {
    constexpr long kDepth = 24;
    constexpr long kMaxHead = 1L << 22;
    long head = 48;
    long double head_sum = 0.0L;
    long summed = 0;
    while (true) {
        for (; summed < head; ++summed) head_sum += (summed % 2 == 0 ? 1.0L : -1.0L) * term(summed);
        // Tail sum_j (-1)^{head+j} b_j with b_j = term(head+j):
        // Euler transform sum_k (-1)^k Delta^k b_0 / 2^{k+1}.
        std::vector<long double> diff(kDepth + 1);
        for (long j = 0; j <= kDepth; ++j) diff[j] = term(head + j);
        long double tail = 0.0L, last = 0.0L, scale = 0.5L;
        for (long k = 0; k < kDepth; ++k) {
            last = (k % 2 == 0 ? 1.0L : -1.0L) * diff[0] * scale;
            tail += last;
            for (long j = 0; j + 1 <= kDepth - k; ++j) diff[j] = diff[j + 1] - diff[j];
            scale *= 0.5L;
        }
        if (head % 2 == 1) tail = -tail;
        const double err = static_cast<double>(std::fabs(last));
        if (err < tol || head >= kMaxHead) return {static_cast<double>(head_sum + tail), err};
        head *= 2;
    }
}

NumericResult zeta_numeric(long w, double s, const Rational& x, double tol) {
    require_order(w);
    if (x.sign() <= 0) throw DomainError("zeta_numeric needs x > 0");
    if (!(s >= static_cast<double>(w)))
        throw DomainError("zeta_numeric supports real s >= w only (s = " + std::to_string(s) +
                          ", w = " + std::to_string(w) + ")");
    if (!(tol > 0)) throw UsageError("tolerance must be positive");
    const long double xd = x.to_double();
    const long double weight = std::ldexp(1.0L, static_cast<int>(w));
    auto term = [&](long m) {
        // C(m+w-1, w-1) in floating point.
        long double c = 1.0L;
        for (long i = 1; i < w; ++i) c = c * static_cast<long double>(m + i) / static_cast<long double>(i);
        return c * std::pow(xd + static_cast<long double>(m), static_cast<long double>(-s));
    };
    auto r = alternating_sum(term, tol / static_cast<double>(weight));
    return {static_cast<double>(weight * r.value), static_cast<double>(weight * r.error_bound)};
}

NumericResult partial_zeta_numeric(const std::vector<long>& residues, long F, double s, double tol) {
    require_odd_positive(F, "F");
    if (residues.empty()) throw UsageError("partial_zeta_numeric needs at least one residue");
    if (!(s > 0)) throw DomainError("partial_zeta_numeric needs s > 0");
    long sign_exp = 0;
    for (long a : residues) {
        if (a < 1 || a > F) throw UsageError("residues must lie in [1, F]");
        sign_exp += a;
    }
    const std::size_t w = residues.size();
    const auto exponent = static_cast<long double>(-s);
    // (-1)^{sum m} = (-1)^{sum a} (-1)^{sum n} for m_i = a_i + F n_i, F odd.
    // level(i, base) = sum_n (-1)^n level(i+1, base + a_i + F n), level(w, m) = m^{-s}.
    std::function<long double(std::size_t, long double)> level = [&](std::size_t i, long double base) {
        if (i == w) return std::pow(base, exponent);
        const long double start = base + static_cast<long double>(residues[i]);
        return static_cast<long double>(
            alternating_sum([&](long n) { return level(i + 1, start + static_cast<long double>(F * n)); }, tol * 1e-3)
                .value);
    };
    const long double start = static_cast<long double>(residues[0]);
    const auto outer =
        alternating_sum([&](long n) { return level(1, start + static_cast<long double>(F * n)); }, tol / 4);
    const long double weight = std::ldexp(1.0L, static_cast<int>(w)) * (sign_exp % 2 == 0 ? 1.0L : -1.0L);
    return {static_cast<double>(weight * outer.value), static_cast<double>(std::fabs(weight) * outer.error_bound)};
}

}  // namespace mgen
