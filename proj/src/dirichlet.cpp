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

#include "mgen/dirichlet.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "mgen/errors.hpp"

namespace mgen {

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

long mulmod(long a, long b, long m) {
    return static_cast<long>(static_cast<__int128>(a) * b % m);
}

long invmod(long a, long m) {
    long g = m, x = 0, x1 = 1, r = mod_floor(a, m);
    while (r != 0) {
        long q = g / r;
        std::tie(g, r) = std::pair{r, g - q * r};
        std::tie(x, x1) = std::pair{x1, x - q * x1};
    }
    if (g != 1) throw DomainError("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod_floor(x, m);
}

bool is_primitive_root(long g, long prime, long prime_power) {
    if (std::gcd(g, prime) != 1) return false;
    const long n = prime - 1;
    for (auto [r, e] : factorize(n))
        if (powmod(g, n / r, prime) == 1) return false;
    // Lifts to every higher power unless g^(q-1) = 1 mod q^2.
    if (prime_power > prime && powmod(g, prime - 1, prime * prime) == 1) return false;
    return true;
}

}  // namespace

long powmod(long base, long exp, long m) {
    if (m == 1) return 0;
    long result = 1;
    base = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long, long>> factorize(long n) {
    std::vector<std::pair<long, long>> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        long e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

RootOfUnityValue RootOfUnityValue::root(long exponent, long order) {
    if (order < 1) throw UsageError("root of unity order must be positive");
    exponent = mod_floor(exponent, order);
    const long g = std::gcd(exponent, order);
    if (exponent == 0) return {false, 0, 1};
    return {false, exponent / g, order / g};
}

Cyclotomic RootOfUnityValue::to_cyclotomic(long root_order) const {
    if (zero) return Cyclotomic(Rational(), root_order);
    if (root_order % order != 0)
        throw UsageError("root of unity of order " + std::to_string(order) +
                         " does not embed in Q(zeta_" + std::to_string(root_order) + ")");
    return Cyclotomic::root_power(root_order, exponent * (root_order / order));
}

RootOfUnityValue operator*(const RootOfUnityValue& a, const RootOfUnityValue& b) {
    if (a.zero || b.zero) return RootOfUnityValue::zero_value();
    const long m = std::lcm(a.order, b.order);
    return RootOfUnityValue::root(a.exponent * (m / a.order) + b.exponent * (m / b.order), m);
}

bool operator==(const RootOfUnityValue& a, const RootOfUnityValue& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.exponent == b.exponent && a.order == b.order;
}

UnitGroupStructure::UnitGroupStructure(long modulus) : m_(modulus) {
    if (modulus < 1) throw UsageError("modulus must be positive, got " + std::to_string(modulus));
    if (modulus % 2 == 0)
        throw UsageError("only odd moduli are supported, got " + std::to_string(modulus));
    for (auto [q, k] : factorize(modulus)) {
        long pk = 1;
        for (long i = 0; i < k; ++i) pk *= q;
        long root = 2;
        while (!is_primitive_root(root, q, pk)) ++root;
        const long rest = modulus / pk;
        // generator = root mod pk, 1 mod rest.
        long gen = root;
        if (rest > 1) {
            const long t = mulmod(mod_floor(1 - root, rest), invmod(pk, rest), rest);
            gen = root + pk * t;
        }
        const long order = pk / q * (q - 1);
        comps_.push_back({q, k, pk, root, mod_floor(gen, modulus), order});
        phi_ *= order;

        const long s = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(order))));
        std::unordered_map<long, long> table;
        long x = 1;
        for (long j = 0; j < s; ++j) {
            table.emplace(x, j);
            x = mulmod(x, root, pk);
        }
        baby_.push_back(std::move(table));
        giant_step_.push_back(invmod(powmod(root, s, pk), pk));
    }
}

std::vector<long> UnitGroupStructure::generators() const {
    std::vector<long> g;
    for (const auto& c : comps_) g.push_back(c.generator);
    return g;
}

std::vector<long> UnitGroupStructure::orders() const {
    std::vector<long> o;
    for (const auto& c : comps_) o.push_back(c.order);
    return o;
}

std::vector<long> UnitGroupStructure::discrete_logs(long a) const {
    a = mod_floor(a, m_);
    if (std::gcd(a, m_) != 1)
        throw DomainError(std::to_string(a) + " is not a unit mod " + std::to_string(m_));
    std::vector<long> logs;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        const long s = static_cast<long>(baby_[i].size());
        long y = a % c.prime_power;
        long found = -1;
        for (long step = 0; step <= s && found < 0; ++step) {
            if (auto it = baby_[i].find(y); it != baby_[i].end()) found = step * s + it->second;
            y = mulmod(y, giant_step_[i], c.prime_power);
        }
        if (found < 0) throw std::logic_error("discrete log failed");
        logs.push_back(found % c.order);
    }
    return logs;
}

std::shared_ptr<const UnitGroupStructure> unit_group(long modulus) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const UnitGroupStructure>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(modulus); it != cache.end()) return it->second;
    }
    auto g = std::make_shared<const UnitGroupStructure>(modulus);
    std::lock_guard lock(mu);
    return cache.emplace(modulus, std::move(g)).first->second;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                                       std::vector<long> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
    const auto& comps = group_->components();
    if (exps_.size() != comps.size()) throw UsageError("exponent vector does not match unit group");
    conductor_ = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        exps_[i] = mod_floor(exps_[i], c.order);
        order_ = std::lcm(order_, c.order / std::gcd(exps_[i], c.order));
        // Smallest j with chi trivial on units = 1 mod q^j, i.e. e * phi(q^j) = 0 mod phi(q^k).
        long pj = 1, phi_j = 1;
        for (long j = 0; j <= c.exponent; ++j) {
            if (mod_floor(exps_[i] * phi_j, c.order) == 0) break;
            phi_j = (j == 0) ? c.prime - 1 : phi_j * c.prime;
            pj *= c.prime;
        }
        conductor_ *= pj;
    }
}

DirichletCharacter DirichletCharacter::from_label(long modulus, long label) {
    auto g = unit_group(modulus);
    if (label < 0 || label >= g->size())
        throw UsageError("character label " + std::to_string(label) + " out of range for modulus " +
                         std::to_string(modulus));
    std::vector<long> e;
    for (long o : g->orders()) {
        e.push_back(label % o);
        label /= o;
    }
    return DirichletCharacter(std::move(g), std::move(e));
}

DirichletCharacter DirichletCharacter::principal(long modulus) { return from_label(modulus, 0); }

DirichletCharacter DirichletCharacter::teichmuller(long p) {
    if (!is_prime(p) || p == 2) throw UsageError("Teichmuller character needs an odd prime, got " + std::to_string(p));
    return DirichletCharacter(unit_group(p), {1});
}

long DirichletCharacter::label() const {
    long label = 0;
    const auto orders = group_->orders();
    for (std::size_t i = orders.size(); i-- > 0;) label = label * orders[i] + exps_[i];
    return label;
}

RootOfUnityValue DirichletCharacter::operator()(long a) const {
    a = mod_floor(a, modulus());
    if (std::gcd(a, modulus()) != 1) return RootOfUnityValue::zero_value();
    const auto logs = group_->discrete_logs(a);
    const auto& comps = group_->components();
    long k = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        // exp(2 pi i e l / ord) = zeta_N^{e l N / ord}; ord / gcd(e, ord) divides N.
        const long ord = comps[i].order;
        const long g = std::gcd(exps_[i], ord);
        const long reduced_ord = ord / g;
        const long step = order_ / reduced_ord;
        k = mod_floor(k + mulmod(mulmod(exps_[i] / g, logs[i], reduced_ord), step, order_), order_);
    }
    return RootOfUnityValue::root(k, order_);
}

DirichletCharacter DirichletCharacter::pow(long k) const {
    std::vector<long> e = exps_;
    for (auto& x : e) x *= k;
    return DirichletCharacter(group_, std::move(e));
}

std::vector<DirichletCharacter> enumerate_characters(long modulus) {
    const auto g = unit_group(modulus);
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(g->size()));
    for (long label = 0; label < g->size(); ++label) out.push_back(DirichletCharacter::from_label(modulus, label));
    return out;
}

namespace {

// Exponent on a component of order `ord` realizing the root of unity v.
long exponent_for(const RootOfUnityValue& v, long ord) {
    if (v.zero) throw std::logic_error("character vanishes on a generator");
    if (ord % v.order != 0) throw std::logic_error("value order does not divide component order");
    return v.exponent * (ord / v.order);
}

}  // namespace

DirichletCharacter character_product(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    auto g = unit_group(std::lcm(chi.modulus(), psi.modulus()));
    std::vector<long> e;
    for (const auto& c : g->components()) e.push_back(exponent_for(chi(c.generator) * psi(c.generator), c.order));
    return DirichletCharacter(std::move(g), std::move(e));
}

DirichletCharacter associated_primitive(const DirichletCharacter& chi) {
    const long d = chi.conductor();
    if (d == chi.modulus()) return chi;
    auto g = unit_group(d);
    std::vector<long> e;
    for (const auto& c : g->components()) {
        long a = c.generator;
        while (std::gcd(a, chi.modulus()) != 1) a += d;
        e.push_back(exponent_for(chi(a), c.order));
    }
    return DirichletCharacter(std::move(g), std::move(e));
}

}  // namespace mgen
