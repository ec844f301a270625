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
 * @file lseries.hpp
 * @brief Multiple generalized Genocchi numbers attached to a character,
 * partial zeta values at negative integers, and L-values.
 *
 * Every w-fold sum over (a_1..a_w) in [1,F]^w below has a summand that only
 * depends on t = a_1 + ... + a_w, so the sums run over t weighted by
 * r_w(t) = #{a : sum a = t} (see TupleSumWeights).
 */

#include <functional>
#include <vector>

#include "mgen/cyclotomic.hpp"
#include "mgen/dirichlet.hpp"
#include "mgen/rational.hpp"

namespace mgen {

/// Coefficients of (z + z^2 + ... + z^F)^w, indexed by t in [w, wF].
class TupleSumWeights {
public:
    TupleSumWeights(long F, long w);

    long modulus() const { return F_; }
    long order() const { return w_; }
    long min_sum() const { return w_; }
    long max_sum() const { return w_ * F_; }
    /// r_w(t); zero outside [w, wF].
    const mpz_class& operator()(long t) const;
    const std::vector<mpz_class>& counts() const { return counts_; }

private:
    long F_;
    long w_;
    std::vector<mpz_class> counts_;
};

/// G_{n,chi}^{(w)} for n = 0..n_max from the finite sum over the modulus f of chi:
///   f^{n-w} sum_t r_w(t) (-1)^t chi(t) G_n^{(w)}(t/f).
std::vector<Cyclotomic> generalized_genocchi(const DirichletCharacter& chi, long w, long n_max);

/// Same numbers from a direct expansion of the generating function
///   (2t)^w sum_a (-1)^{sum a} chi(sum a) e^{t sum a} / (e^{ft}+1)^w,
/// enumerating the f^w tuples explicitly.
std::vector<Cyclotomic> generalized_genocchi_series_oracle(const DirichletCharacter& chi, long w, long n_max);

/// S^{(w)}(w-n; a | F) for a tuple with coordinate sum a_sum:
///   (-1)^{a_sum} F^{n-w} G_n^{(w)}(a_sum/F) / (C(n,w) w!).
/// n < w is a DomainError; even F a UsageError.
Rational partial_zeta_neg(long a_sum, long F, long w, long n);

/// L^{(w)}(-n | chi) = G_{n+w,chi}^{(w)} / (C(n+w,w) w!).
Cyclotomic l_value_neg(const DirichletCharacter& chi, long w, long n);

/// L^{(w)}(w-n | chi) as sum_t r_w(t) chi(t) S^{(w)}(w-n; t | F). F must be an odd
/// multiple of the modulus and n >= w.
Cyclotomic l_value_via_partition(const DirichletCharacter& chi, long w, long n, long F);

/// Right side of the binomial-series expansion at s = -n (finite in k):
///   sum_t r_w(t) chi(t) (-1)^t F^{-w} t^n sum_{k<=n} C(n,k) (F/t)^k G_k^{(w)},
/// which equals w! C(n,w) L^{(w)}(w-n | chi).
Cyclotomic washington_rhs_at_neg(const DirichletCharacter& chi, long w, long n, long F);

struct NumericResult {
    double value = 0.0;
    double error_bound = 0.0;
};

/// sum_{m>=0} (-1)^m a(m) for a smooth, eventually decreasing a, by direct
/// summation of a head followed by an Euler transform of the tail.
NumericResult alternating_sum(const std::function<long double(long)>& term, double tol);

/// zeta_G^{(w)}(s, x) = 2^w sum_{m>=0} (-1)^m C(m+w-1, w-1) (x+m)^{-s}, real s >= w, x > 0.
NumericResult zeta_numeric(long w, double s, const Rational& x, double tol);

/// 2^w sum over m_i = a_i mod F, m_i > 0, of (-1)^{sum m} (sum m)^{-s}, evaluated as
/// nested accelerated alternating series over the individual residues a_i.
NumericResult partial_zeta_numeric(const std::vector<long>& residues, long F, double s, double tol);

}  // namespace mgen
