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
 * @file padic_l.hpp
 * @brief The multiple Genocchi p-adic L-function and its interpolation data.
 *
 * Everything here is phrased through
 *     Lambda(s) = w! C(-s, w) L_p^{(w)}(s + w | chi)
 *               = F^{-w} sum_{p !| t} r_w(t) chi(t) (-1)^t <t>^{-s}
 *                        sum_k C(-s, k) (F/t)^k G_k^{(w)},
 * which avoids dividing by the zero of C(-s, w) at s = 0. The sum runs over
 * tuple sums t prime to p; <t> is undefined otherwise.
 *
 * Character values live in Q(zeta_{p-1}) and are sent into Z_p by
 * zeta_{p-1} -> omega(g), g the canonical primitive root mod p, so omega
 * itself is the character mod p with exponent 1 on g.
 */

#include "mgen/cyclotomic.hpp"
#include "mgen/dirichlet.hpp"
#include "mgen/lseries.hpp"
#include "mgen/padic.hpp"

namespace mgen {

class PadicLContext {
public:
    /// Requires p odd prime, w >= 1, F odd with p | F and modulus(chi) | F, and
    /// order(chi) | p - 1. Violations are UsageErrors. chi is replaced by its
    /// associated primitive character.
    PadicLContext(long p, const DirichletCharacter& chi, long w, long F, PrecisionPolicy policy = {});

    long p() const { return p_; }
    long w() const { return w_; }
    long F() const { return F_; }
    const PrecisionPolicy& policy() const { return policy_; }
    long digits() const { return policy_.digits; }

    const DirichletCharacter& chi() const { return chi_; }
    const DirichletCharacter& omega() const { return omega_; }
    const TupleSumWeights& weights() const { return weights_; }

    /// chi_n: the primitive character attached to chi * omega^{-n}.
    DirichletCharacter chi_n(long n) const;

    /// zeta_{p-1}^k.
    const Padic& root_power(long k) const;
    Padic embed(const RootOfUnityValue& v) const;
    /// Elements of Q(zeta_M) with M | p - 1.
    Padic embed(const Cyclotomic& z) const;
    Padic embed(const Rational& q) const { return Padic::from_rational(q, p_, policy_.digits); }

private:
    long p_;
    long w_;
    long F_;
    PrecisionPolicy policy_;
    DirichletCharacter chi_;
    DirichletCharacter omega_;
    TupleSumWeights weights_;
    std::vector<Padic> omega_powers_;
};

/// Lambda(s) for s in Z_p.
Padic lambda_p(const PadicLContext& ctx, const Padic& s);

/// G_{n,chi_n}^{(w)} = F^{n-w} sum_t r_w(t) (-1)^t chi_n(t) G_n^{(w)}(t/F), in Q(zeta_{p-1}).
Cyclotomic twisted_numbers_exact(const PadicLContext& ctx, long n);
Padic twisted_numbers(const PadicLContext& ctx, long n);

/// G*_{n,chi_n}^{(w)} = (F/p)^{n-w} sum_{p | t} r_w(t) (-1)^{t/p} chi_n(t/p) G_n^{(w)}((t/p)/(F/p)).
Cyclotomic starred_numbers_exact(const PadicLContext& ctx, long n);
Padic starred_numbers(const PadicLContext& ctx, long n);

/// F^{n-w} sum_{p !| t} r_w(t) (-1)^t chi(t) omega(t)^{-n} G_n^{(w)}(t/F).
Cyclotomic coprime_sum_exact(const PadicLContext& ctx, long n);

/// The same coprime sum with G_n^{(w)}(t/F) expanded as F^{-n} t^n sum_k C(n,k) (F/t)^k G_k^{(w)}.
Cyclotomic coprime_sum_expanded_exact(const PadicLContext& ctx, long n);

struct PartitionCheck {
    Cyclotomic twisted;
    Cyclotomic scaled_starred;  // p^{n-w} chi_n(p) G*
    Cyclotomic coprime;
    bool exact = false;  // twisted - scaled_starred == coprime
};

PartitionCheck verify_partition(const PadicLContext& ctx, long n);

/// Lambda(-n) - [G_{n,chi_n} - p^{n-w} chi_n(p) G*_{n,chi_n}]; n >= 1.
Padic verify_interpolation(const PadicLContext& ctx, long n);

struct DerivativeAtZero {
    Padic lambda_prime;  // Lambda'(0)
    Padic scaled;        // d/ds [C(-s,w) L_p(s+w)] at 0 = Lambda'(0) / w!
    Padic l_p_at_w;      // L_p^{(w)}(w | chi) = (-1)^w w * scaled
};

/// Term-wise derivative: Lambda'(0) = F^{-w} sum_{p !| t} r chi(t) (-1)^t sum_{k>=1} ((-1)^k/k) (F/t)^k G_k^{(w)}.
DerivativeAtZero lambda_derivative_0(const PadicLContext& ctx);

/// Lambda(h) / h with h = p^h_exponent (Lambda(0) = 0).
Padic difference_quotient(const PadicLContext& ctx, long h_exponent);

/// Compares Lambda'(0)/w! with the closed form that also carries the term
/// (w! F^w)^{-1} sum_{p !| t} r chi(t) (-1)^t (1 - log_p <t>).
struct ClosedFormComparison {
    Padic termwise;     // Lambda'(0) / w!
    Padic closed_form;  // log term + termwise
    Padic log_term;
    long agreement = 0;  // termwise = closed_form mod p^agreement
};

ClosedFormComparison compare_closed_form(const PadicLContext& ctx);

}  // namespace mgen
