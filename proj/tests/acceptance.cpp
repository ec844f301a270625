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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "golden.hpp"
#include "mgen/genocchi.hpp"
#include "mgen/lseries.hpp"
#include "mgen/padic_l.hpp"
#include "oracles.hpp"

using namespace mgen;

namespace {

constexpr long kDigits = 40;
constexpr long kGuard = 5;

long vanishes_to(const Padic& d) { return d.is_zero() ? d.zero_mod() : d.valuation(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

Outcome genocchi_baseline() {
    Outcome o;
    const auto g = genocchi_numbers(30);
    const std::vector<Rational> head{0, 1, -1, 0, 1, 0};
    o.require(std::vector<Rational>(g.begin(), g.begin() + 6) == head, "G_0..G_5");
    for (long k = 1; k <= 14; ++k) o.require(g[2 * k + 1].is_zero(), "G_" + std::to_string(2 * k + 1));
    o.require(g == oracle::genocchi_from_bernoulli(30), "Bernoulli oracle");
    o.detail = o.pass ? "n <= 30 exact" : o.detail;
    return o;
}

Outcome multiple_integrity() {
    Outcome o;
    const auto g = genocchi_numbers(30);
    for (long w = 1; w <= 5; ++w) {
        const auto table = multiple_genocchi_numbers(w, 30);
        const auto& v = table.values();
        const auto ref = oracle::multinomial_power(g, w);
        for (long n = 0; n <= 30; ++n) {
            const std::string at = "w=" + std::to_string(w) + " n=" + std::to_string(n);
            o.require(v[n].is_integer(), at + " integrality");
            if (n < w) o.require(v[n].is_zero(), at + " vanishing");
            o.require(v[n] == ref[n], at + " multinomial oracle");
        }
        o.require(v[w] == Rational(oracle::fact(w)), "w! at n = w");
    }
    o.detail = o.pass ? "w <= 5, n <= 30 exact" : o.detail;
    return o;
}

Outcome generalized_equivalence() {
    Outcome o;
    long count = 0;
    for (long f : {1L, 3L, 5L})
        for (const auto& chi : enumerate_characters(f))
            for (long w = 1; w <= 3; ++w) {
                o.require(generalized_genocchi(chi, w, 10) == generalized_genocchi_series_oracle(chi, w, 10),
                          "f=" + std::to_string(f) + " label=" + std::to_string(chi.label()) + " w=" + std::to_string(w));
                ++count;
            }
    const auto chi = DirichletCharacter::from_label(3, 1);
    o.require(generalized_genocchi(chi, 1, 1)[1] == Cyclotomic(Rational(-2)), "G_{1,chi} = -2");
    const auto g2 = generalized_genocchi_series_oracle(chi, 2, 3);
    o.require(g2[2] == Cyclotomic(Rational(8)) && g2[3] == Cyclotomic(Rational(48)), "w = 2 spot values");
    o.detail = o.pass ? std::to_string(count) + " (chi, w) pairs, n <= 10" : o.detail;
    return o;
}

Outcome partition_consistency() {
    Outcome o;
    for (long f : {1L, 3L, 5L})
        for (const auto& chi : enumerate_characters(f))
            for (long w = 1; w <= 3; ++w)
                for (long n = w; n <= w + 10; ++n) {
                    const auto direct = l_value_neg(chi, w, n - w);
                    const auto scale = Rational(mpz_class(oracle::fact(w) * oracle::choose(n, w)));
                    for (long mult : {1L, 3L, 5L}) {
                        const std::string at = "f=" + std::to_string(f) + " label=" + std::to_string(chi.label()) +
                                               " w=" + std::to_string(w) + " n=" + std::to_string(n) +
                                               " F=" + std::to_string(mult * f);
                        o.require(l_value_via_partition(chi, w, n, mult * f) == direct, at);
                        o.require(washington_rhs_at_neg(chi, w, n, mult * f) == direct * scale, at + " expansion");
                    }
                }
    o.detail = o.pass ? "F in {f, 3f, 5f}, exact" : o.detail;
    return o;
}

Outcome numeric_series() {
    Outcome o;
    constexpr double tol = 1e-8;
    double worst = 0;
    for (long F : {3L, 5L})
        for (long w : {1L, 2L}) {
            const double s = static_cast<double>(w + 2);
            for (long t = w; t <= w * F; ++t) {
                std::vector<long> res(w, 1);
                res.back() = t - (w - 1);
                if (res.back() > F) {
                    res.front() = t - F;
                    res.back() = F;
                }
                const auto lhs = partial_zeta_numeric(res, F, s, 1e-12);
                const auto z = zeta_numeric(w, s, Rational(t, F), 1e-12);
                const double rhs = (t % 2 ? -1.0 : 1.0) * std::pow(static_cast<double>(F), -s) * z.value;
                worst = std::max(worst, std::fabs(lhs.value - rhs));
                o.require(std::fabs(lhs.value - rhs) < tol, "F=" + std::to_string(F) + " w=" + std::to_string(w) +
                                                                " class " + std::to_string(t));
            }
        }
    const auto basel = zeta_numeric(1, 2.0, Rational(1), 1e-12);
    const double basel_err = std::fabs(basel.value - std::numbers::pi * std::numbers::pi / 6);
    o.require(basel_err < tol, "pi^2/6");
    if (o.pass) {
        std::ostringstream d;
        d << "max deviation " << std::max(worst, basel_err) << " (tol 1e-8)";
        o.detail = d.str();
    }
    return o;
}

template <class Fn>
void p_adic_grid(Fn&& fn) {
    for (long p : {3L, 5L, 7L})
        for (long f : {1L, 3L})
            for (const auto& chi : enumerate_characters(f)) {
                if ((p - 1) % chi.order() != 0) continue;
                for (long w : {1L, 2L}) {
                    const PadicLContext ctx(p, chi, w, p * f, PrecisionPolicy{kDigits, kGuard});
                    for (long n = w; n <= w + 6; ++n) fn(ctx, chi, n);
                }
            }
}

std::string grid_point(const PadicLContext& ctx, const DirichletCharacter& chi, long n) {
    return "p=" + std::to_string(ctx.p()) + " f=" + std::to_string(chi.modulus()) + " label=" +
           std::to_string(chi.label()) + " w=" + std::to_string(ctx.w()) + " n=" + std::to_string(n);
}

Outcome interpolation() {
    Outcome o;
    long worst = kDigits * 10, cases = 0;
    p_adic_grid([&](const PadicLContext& ctx, const DirichletCharacter& chi, long n) {
        const long m = vanishes_to(verify_interpolation(ctx, n));
        worst = std::min(worst, m);
        ++cases;
        o.require(m >= kDigits - kGuard, grid_point(ctx, chi, n) + " residual only 0 mod p^" + std::to_string(m));
    });
    o.detail = o.pass ? std::to_string(cases) + " cases, residuals 0 mod p^" + std::to_string(worst) + " or better"
                      : o.detail;
    return o;
}

Outcome exact_partition() {
    Outcome o;
    long cases = 0;
    p_adic_grid([&](const PadicLContext& ctx, const DirichletCharacter& chi, long n) {
        ++cases;
        o.require(verify_partition(ctx, n).exact, grid_point(ctx, chi, n));
    });
    o.detail = o.pass ? std::to_string(cases) + " cases exact" : o.detail;
    return o;
}

Outcome derivative() {
    Outcome o;
    const auto chi = DirichletCharacter::from_label(3, 1);
    std::ostringstream d;
    for (long p : {5L, 7L})
        for (long w : {1L, 2L}) {
            const PadicLContext ctx(p, chi, w, 3 * p, PrecisionPolicy{kDigits, kGuard});
            const auto lp = lambda_derivative_0(ctx);
            const long e10 = vanishes_to(lp.lambda_prime - difference_quotient(ctx, 10));
            const long e12 = vanishes_to(lp.lambda_prime - difference_quotient(ctx, 12));
            const std::string at = "p=" + std::to_string(p) + " w=" + std::to_string(w);
            o.require(e10 >= 8, at + " h=p^10");
            o.require(e12 >= 10, at + " h=p^12");
            const auto cmp = compare_closed_form(ctx);
            d << (p == 5 && w == 1 ? "" : "; ") << at << ": " << e10 << "/" << e12;
            if (lp.lambda_prime.is_zero()) d << " (Lambda identically 0)";
            d << ", closed form agrees to p^" << cmp.agreement;
        }
    o.detail = o.pass ? d.str() : o.detail;
    return o;
}

Outcome padic_kernel() {
    Outcome o;
    const long N = kDigits;
    auto same = [](const Padic& a, const Padic& b) {
        return vanishes_to(a - b) >= std::min(a.absolute_precision(), b.absolute_precision());
    };
    long units = 0;
    for (long p : {3L, 5L, 7L}) {
        const Padic one = Padic::one(p, N);
        for (long a = 1; a < p * p; ++a) {
            if (a % p == 0) continue;
            ++units;
            const std::string at = "p=" + std::to_string(p) + " a=" + std::to_string(a);
            const auto w = teichmuller(a, p, N);
            o.require(w.pow(p) == w && w.residue(1) == a % p, at + " Teichmuller");
            const auto u = angle(a, p, N);
            o.require(vanishes_to(u - one) >= 1, at + " <a> = 1 mod p");
            const auto l = log_p(u);
            o.require(same(exp_p(l), u), at + " exp(log)");
            const auto x = Padic::from_integer(mpz_class(p * a), p, N);
            o.require(same(log_p(exp_p(x)), x), at + " log(exp)");
            Padic prod = one;
            for (long n = 1; n <= 10; ++n) {
                prod = prod * u;
                o.require(same(angle_pow(a, Padic::from_integer(-n, p, N), p, N), prod), at + " angle_pow");
            }
            for (const char* s_text : {"2", "1/2", "-3/4"}) {
                const auto s = Rational::parse(s_text);
                if (s.den() % p == 0) continue;
                Padic sum = one, dk = one;
                Rational c(1);
                for (long k = 1; k <= N + 5; ++k) {
                    c = c * (-s - Rational(k - 1)) / Rational(k);
                    dk = dk * (u - one);
                    sum = sum + Padic::from_rational(c, p, N) * dk;
                }
                const auto lhs = angle_pow(a, Padic::from_rational(s, p, N), p, N);
                o.require(vanishes_to(lhs - sum) >= N - kGuard, at + " binomial series s=" + s_text);
            }
        }
    }
    o.detail = o.pass ? std::to_string(units) + " units, precision 40" : o.detail;
    return o;
}

std::string run_cli(const std::vector<const char*>& args) {
    std::string cmd = MGEN_CLI_PATH;
    for (const char* a : args) cmd += std::string(" ") + a;
    std::string out;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        pclose(pipe);
    }
    return out;
}

Outcome cli_determinism() {
    Outcome o;
    for (const auto& g : golden::kCases) {
        const auto first = golden::strip_wall_time(run_cli(g.args));
        const auto second = golden::strip_wall_time(run_cli(g.args));
        o.require(!first.empty() && first == golden::read(g.file), std::string(g.file) + " differs from golden");
        o.require(first == second, std::string(g.file) + " not reproducible");
    }
    o.detail = o.pass ? std::to_string(golden::kCases.size()) + " golden files byte-equal" : o.detail;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"genocchi baseline", genocchi_baseline},
        {"multiple-order integrity", multiple_integrity},
        {"finite sum = series expansion", generalized_equivalence},
        {"partition consistency", partition_consistency},
        {"congruence series numeric check", numeric_series},
        {"p-adic interpolation", interpolation},
        {"exact partition", exact_partition},
        {"derivative at zero", derivative},
        {"p-adic kernel properties", padic_kernel},
        {"CLI determinism", cli_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  (" << o.detail
                  << ")\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
