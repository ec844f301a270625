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

#include "mgen/padic_l.hpp"

#include <string>

#include "mgen/errors.hpp"
#include "mgen/genocchi.hpp"

namespace mgen {

namespace {

DirichletCharacter checked_primitive(long p, const DirichletCharacter& chi, long w, long F) {
    require_odd_prime(p);
    if (w < 1) throw UsageError("order w must be >= 1");
    if (F < 1 || F % 2 == 0) throw UsageError("F must be odd and positive, got " + std::to_string(F));
    if (F % p != 0) throw UsageError("F = " + std::to_string(F) + " is not a multiple of p = " + std::to_string(p));
    if (F % chi.modulus() != 0)
        throw UsageError("F = " + std::to_string(F) + " is not a multiple of the modulus " +
                         std::to_string(chi.modulus()));
    if ((p - 1) % chi.order() != 0)
        throw UsageError("character of order " + std::to_string(chi.order()) +
                         " does not embed in Z_" + std::to_string(p) + " (order must divide p - 1)");
    return associated_primitive(chi);
}

Rational sign_of(long t) { return (t % 2 == 0) ? Rational(1) : Rational(-1); }

// Collects sum over t of value(t) * term(t) in Q(zeta_{p-1}); value(t) zero skips t.
template <typename Value, typename Term>
Cyclotomic teichmuller_field_sum(const PadicLContext& ctx, long t_lo, long t_hi, long t_step, Value value, Term term) {
    const long order = ctx.p() - 1;
    std::vector<Rational> raw(static_cast<std::size_t>(order));
    for (long t = t_lo; t <= t_hi; t += t_step) {
        const RootOfUnityValue v = value(t);
        if (v.zero) continue;
        raw[v.exponent * (order / v.order)] += term(t);
    }
    return Cyclotomic::reduce(std::move(raw), order);
}

}  // namespace

PadicLContext::PadicLContext(long p, const DirichletCharacter& chi, long w, long F, PrecisionPolicy policy)
    : p_(p), w_(w), F_(F), policy_(policy), chi_(checked_primitive(p, chi, w, F)),
      omega_(DirichletCharacter::teichmuller(p)), weights_(F, w) {
    if (policy_.digits < 1 || policy_.guard < 0) throw UsageError("precision policy needs digits >= 1, guard >= 0");
    const long g = omega_.group().generators().front();
    const Padic omega_g = teichmuller(g, p_, policy_.digits);
    Padic x = Padic::one(p_, policy_.digits);
    for (long k = 0; k < p_ - 1; ++k) {
        omega_powers_.push_back(x);
        x *= omega_g;
    }
}

DirichletCharacter PadicLContext::chi_n(long n) const {
    return associated_primitive(character_product(chi_, omega_.pow(-n)));
}

const Padic& PadicLContext::root_power(long k) const {
    return omega_powers_[static_cast<std::size_t>(mod_floor(k, p_ - 1))];
}

Padic PadicLContext::embed(const RootOfUnityValue& v) const {
    if (v.zero) return Padic::exact_zero(p_);
    if ((p_ - 1) % v.order != 0) throw UsageError("root of unity does not embed in Z_p");
    return root_power(v.exponent * ((p_ - 1) / v.order));
}

Padic PadicLContext::embed(const Cyclotomic& z) const {
    const Cyclotomic lifted = z.lifted(p_ - 1);
    Padic acc = Padic::exact_zero(p_);
    const auto& c = lifted.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        acc += embed(c[i]) * root_power(static_cast<long>(i));
    }
    return acc;
}

Padic lambda_p(const PadicLContext& ctx, const Padic& s) {
    const long p = ctx.p(), w = ctx.w(), F = ctx.F(), N = ctx.digits();
    if (s.prime() != p) throw UsageError("argument prime does not match context");
    if (s.valuation_bound() < 0) throw DomainError("lambda_p is defined for s in Z_p only");
    // C(-s,k) and G_k are integral and v(F/t) = v(F) >= 1, so term k has valuation
    // >= k v(F) >= k. k_max = ceil(N (p-1)/(p-2)) + guard also covers the
    // k - v_p(k!) loss of the factor-by-factor binomial evaluation.
    const long k_max = (N * (p - 1) + (p - 3)) / (p - 2) + ctx.policy().guard;
    const long vF = valuation(mpz_class(F), p);

    const auto G = multiple_genocchi_numbers(w, k_max);
    std::vector<Padic> coeff;  // C(-s,k) G_k
    Padic binom = Padic::one(p, N);
    for (long k = 0; k <= k_max; ++k) {
        coeff.push_back(G[k].is_zero() ? Padic::exact_zero(p) : binom * ctx.embed(G[k]));
        binom = binom * (-s - Padic::from_integer(k, p, N)) / Padic::from_integer(k + 1, p, N);
    }

    Padic sum = Padic::exact_zero(p);
    const auto& r = ctx.weights();
    for (long t = r.min_sum(); t <= r.max_sum(); ++t) {
        if (t % p == 0) continue;
        const auto chi_t = ctx.chi()(t);
        if (chi_t.zero) continue;
        const Padic ratio = ctx.embed(Rational(F, t));
        Padic inner = Padic::exact_zero(p);
        Padic ratio_power = Padic::one(p, N);
        for (long k = 0; k <= k_max; ++k) {
            if (!coeff[k].is_exact_zero()) inner += coeff[k] * ratio_power;
            ratio_power *= ratio;
        }
        if (inner.is_exact_zero()) continue;
        const Padic weight = ctx.embed(Rational(r(t)) * sign_of(t));
        sum += weight * ctx.embed(chi_t) * angle_pow(t, s, p, N) * inner;
    }
    const Padic result = sum / Padic::from_integer(mpz_class(F), p, N).pow(w);
    return result.with_absolute_precision((k_max + 1 - w) * vF);
}

Cyclotomic twisted_numbers_exact(const PadicLContext& ctx, long n) {
    if (n < 0) throw UsageError("twisted numbers need n >= 0");
    const long F = ctx.F(), w = ctx.w();
    const auto chi_n = ctx.chi_n(n);
    const auto poly = multiple_genocchi_polynomial(w, n);
    const Rational scale = Rational(F).pow(n - w);
    const auto& r = ctx.weights();
    return teichmuller_field_sum(
        ctx, r.min_sum(), r.max_sum(), 1, [&](long t) { return chi_n(t); },
        [&](long t) { return Rational(r(t)) * sign_of(t) * scale * poly(Rational(t, F)); });
}

Padic twisted_numbers(const PadicLContext& ctx, long n) { return ctx.embed(twisted_numbers_exact(ctx, n)); }

Cyclotomic starred_numbers_exact(const PadicLContext& ctx, long n) {
    if (n < 0) throw UsageError("starred numbers need n >= 0");
    const long p = ctx.p(), F = ctx.F(), w = ctx.w();
    const long Fp = F / p;
    const auto chi_n = ctx.chi_n(n);
    const auto poly = multiple_genocchi_polynomial(w, n);
    const Rational scale = Rational(Fp).pow(n - w);
    const auto& r = ctx.weights();
    const long first = ((r.min_sum() + p - 1) / p) * p;
    return teichmuller_field_sum(
        ctx, first, r.max_sum(), p, [&](long t) { return chi_n(t / p); },
        [&](long t) {
            const long lambda = t / p;
            return Rational(r(t)) * sign_of(lambda) * scale * poly(Rational(lambda, Fp));
        });
}

Padic starred_numbers(const PadicLContext& ctx, long n) { return ctx.embed(starred_numbers_exact(ctx, n)); }

namespace {

RootOfUnityValue coprime_value(const PadicLContext& ctx, long n, long t) {
    if (t % ctx.p() == 0) return RootOfUnityValue::zero_value();
    return ctx.chi()(t) * ctx.omega().pow(-n)(t);
}

}  // namespace

Cyclotomic coprime_sum_exact(const PadicLContext& ctx, long n) {
    const long F = ctx.F(), w = ctx.w();
    const auto poly = multiple_genocchi_polynomial(w, n);
    const Rational scale = Rational(F).pow(n - w);
    const auto& r = ctx.weights();
    return teichmuller_field_sum(
        ctx, r.min_sum(), r.max_sum(), 1, [&](long t) { return coprime_value(ctx, n, t); },
        [&](long t) { return Rational(r(t)) * sign_of(t) * scale * poly(Rational(t, F)); });
}

Cyclotomic coprime_sum_expanded_exact(const PadicLContext& ctx, long n) {
    const long F = ctx.F(), w = ctx.w();
    const auto G = multiple_genocchi_numbers(w, n);
    const auto row = binomial_row(n);
    const Rational inv_Fw = Rational(F).pow(-w);
    const auto& r = ctx.weights();
    return teichmuller_field_sum(
        ctx, r.min_sum(), r.max_sum(), 1, [&](long t) { return coprime_value(ctx, n, t); },
        [&](long t) {
            const Rational ratio(F, t);
            Rational inner, ratio_power = 1;
            for (long k = 0; k <= n; ++k) {
                inner += Rational(row[k]) * ratio_power * G[k];
                ratio_power *= ratio;
            }
            return Rational(r(t)) * sign_of(t) * inv_Fw * Rational(t).pow(n) * inner;
        });
}

PartitionCheck verify_partition(const PadicLContext& ctx, long n) {
    PartitionCheck out;
    out.twisted = twisted_numbers_exact(ctx, n);
    const auto chi_n_p = ctx.chi_n(n)(ctx.p()).to_cyclotomic(ctx.p() - 1);
    out.scaled_starred = starred_numbers_exact(ctx, n) * chi_n_p * Rational(ctx.p()).pow(n - ctx.w());
    out.coprime = coprime_sum_exact(ctx, n);
    out.exact = (out.twisted - out.scaled_starred) == out.coprime;
    return out;
}

Padic verify_interpolation(const PadicLContext& ctx, long n) {
    if (n < 1) throw UsageError("interpolation check needs n >= 1");
    const long p = ctx.p();
    const Padic lhs = lambda_p(ctx, Padic::from_integer(-n, p, ctx.digits()));
    const Padic chi_n_p = ctx.embed(ctx.chi_n(n)(p));
    const Padic rhs = twisted_numbers(ctx, n) -
                      ctx.embed(Rational(p).pow(n - ctx.w())) * chi_n_p * starred_numbers(ctx, n);
    return lhs - rhs;
}

DerivativeAtZero lambda_derivative_0(const PadicLContext& ctx) {
    const long p = ctx.p(), w = ctx.w(), F = ctx.F(), N = ctx.digits();
    const long vF = valuation(mpz_class(F), p);
    const long target = N + w * vF;
    // v((F/t)^k G_k / k) >= k v(F) - floor(log_p k), non-decreasing in k.
    auto bound = [&](long k) {
        long lg = 0;
        for (long q = p; q <= k; q *= p) ++lg;
        return k * vF - lg;
    };
    long k_stop = 1;
    while (bound(k_stop) < target) ++k_stop;
    const auto G = multiple_genocchi_numbers(w, k_stop);
    const auto& r = ctx.weights();
    const Cyclotomic exact = teichmuller_field_sum(
        ctx, r.min_sum(), r.max_sum(), 1,
        [&](long t) { return t % p == 0 ? RootOfUnityValue::zero_value() : ctx.chi()(t); },
        [&](long t) {
            const Rational ratio(F, t);
            Rational inner, ratio_power = ratio;
            for (long k = 1; k < k_stop; ++k) {
                inner += Rational((k % 2 == 0) ? 1 : -1, k) * ratio_power * G[k];
                ratio_power *= ratio;
            }
            return Rational(r(t)) * sign_of(t) * inner * Rational(F).pow(-w);
        });
    const Padic lambda_prime = ctx.embed(exact).with_absolute_precision(target - w * vF);
    const Padic scaled = lambda_prime / ctx.embed(Rational(factorial(w)));
    return {lambda_prime, scaled, scaled * ctx.embed(Rational((w % 2 == 0) ? w : -w))};
}

Padic difference_quotient(const PadicLContext& ctx, long h_exponent) {
    const Padic h = Padic::from_integer(prime_power(ctx.p(), h_exponent), ctx.p(), ctx.digits());
    return lambda_p(ctx, h) / h;
}

ClosedFormComparison compare_closed_form(const PadicLContext& ctx) {
    const long p = ctx.p(), w = ctx.w(), F = ctx.F(), N = ctx.digits();
    const auto& r = ctx.weights();
    Padic log_sum = Padic::exact_zero(p);
    for (long t = r.min_sum(); t <= r.max_sum(); ++t) {
        if (t % p == 0) continue;
        const auto chi_t = ctx.chi()(t);
        if (chi_t.zero) continue;
        const Padic one_minus_log = Padic::one(p, N) - log_p_unit(t, p, N);
        log_sum += ctx.embed(Rational(r(t)) * sign_of(t)) * ctx.embed(chi_t) * one_minus_log;
    }
    const Padic termwise = lambda_derivative_0(ctx).scaled;
    const Padic log_term = log_sum / ctx.embed(Rational(factorial(w)) * Rational(F).pow(w));
    const Padic closed_form = log_term + termwise;
    return {termwise, closed_form, log_term, termwise.agreement(closed_form)};
}

}  // namespace mgen
