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
 * @file dirichlet.hpp
 * @brief Dirichlet characters of odd modulus.
 *
 * (Z/mZ)^* for odd m is a product of cyclic groups, one per prime power
 * q^k || m. Component i is generated by the CRT lift of the smallest
 * primitive root mod q^k (lift is 1 modulo the other prime powers), and
 * components are ordered by increasing q.
 *
 * A character is an exponent vector e with chi(g_i) = exp(2 pi i e_i / ord_i).
 * Characters are labeled by the mixed-radix number
 *     label = e_0 + ord_0 * (e_1 + ord_1 * (e_2 + ...)),
 * so e_0 is the least significant digit.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mgen/cyclotomic.hpp"

namespace mgen {

/// Either zero or zeta_order^exponent with 0 <= exponent < order.
struct RootOfUnityValue {
    bool zero = true;
    long exponent = 0;
    long order = 1;

    static RootOfUnityValue zero_value() { return {}; }
    static RootOfUnityValue root(long exponent, long order);

    bool is_one() const { return !zero && exponent == 0; }
    /// Embeds into Q(zeta_M); order must divide M.
    Cyclotomic to_cyclotomic(long root_order) const;
    Cyclotomic to_cyclotomic() const { return to_cyclotomic(order); }

    friend RootOfUnityValue operator*(const RootOfUnityValue& a, const RootOfUnityValue& b);
    friend bool operator==(const RootOfUnityValue& a, const RootOfUnityValue& b);
};

class UnitGroupStructure {
public:
    struct Component {
        long prime;
        long exponent;
        long prime_power;
        long local_root;  // smallest primitive root mod prime_power
        long generator;   // CRT lift into (Z/mZ)^*
        long order;       // phi(prime_power)
    };

    /// m >= 1 odd; even or non-positive m is a UsageError.
    explicit UnitGroupStructure(long modulus);

    long modulus() const { return m_; }
    long size() const { return phi_; }
    const std::vector<Component>& components() const { return comps_; }
    std::vector<long> generators() const;
    std::vector<long> orders() const;

    /// Discrete logs of a unit on each component (baby-step giant-step).
    std::vector<long> discrete_logs(long a) const;

private:
    long m_;
    long phi_ = 1;
    std::vector<Component> comps_;
    // Baby-step tables per component: local_root^j mod prime_power -> j.
    std::vector<std::unordered_map<long, long>> baby_;
    std::vector<long> giant_step_;
};

std::shared_ptr<const UnitGroupStructure> unit_group(long modulus);

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<long> exponents);

    /// Character with the given canonical label; out-of-range label is a UsageError.
    static DirichletCharacter from_label(long modulus, long label);
    static DirichletCharacter principal(long modulus);
    /// The character mod p sending the canonical primitive root to zeta_{p-1}.
    static DirichletCharacter teichmuller(long p);

    long modulus() const { return group_->modulus(); }
    const UnitGroupStructure& group() const { return *group_; }
    const std::vector<long>& exponents() const { return exps_; }
    long label() const;
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_principal() const { return order_ == 1; }

    RootOfUnityValue operator()(long a) const;

    DirichletCharacter pow(long k) const;
    DirichletCharacter conj() const { return pow(-1); }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.exps_ == b.exps_;
    }

private:
    std::shared_ptr<const UnitGroupStructure> group_;
    std::vector<long> exps_;
    long order_ = 1;
    long conductor_ = 1;
};

std::vector<DirichletCharacter> enumerate_characters(long modulus);

inline RootOfUnityValue character_value(const DirichletCharacter& chi, long a) { return chi(a); }
inline long conductor(const DirichletCharacter& chi) { return chi.conductor(); }

/// chi * psi as a character mod lcm of the moduli.
DirichletCharacter character_product(const DirichletCharacter& chi, const DirichletCharacter& psi);

/// The primitive character mod conductor(chi) that induces chi.
DirichletCharacter associated_primitive(const DirichletCharacter& chi);

// Small number-theory helpers shared with the p-adic code.
long mod_floor(long a, long m);
long powmod(long base, long exp, long m);
bool is_prime(long n);
/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<long, long>> factorize(long n);

}  // namespace mgen
