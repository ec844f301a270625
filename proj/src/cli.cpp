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

#include "mgen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mgen/errors.hpp"
#include "mgen/genocchi.hpp"
#include "mgen/json_io.hpp"
#include "mgen/lseries.hpp"
#include "mgen/padic_l.hpp"
#include "mgen/verify.hpp"

namespace mgen {

namespace {

// Defaults and limits for every subcommand.
struct Config {
    static constexpr long kGenocchiTerms = 64;
    static constexpr long kGeneralizedTerms = 10;
    static constexpr long kMaxTerms = 1000;
    static constexpr long kMaxOrder = 16;
    static constexpr long kMaxModulus = 999;
    static constexpr long kDigits = 40;
    static constexpr long kGuard = 5;
    static constexpr long kMaxDigits = 2000;
    static constexpr double kZetaTolerance = 1e-10;
    static constexpr const char* kVerboseVariable = "MGEN_VERBOSE";
};

void require_range(const char* flag, long value, long lo, long hi) {
    if (value < lo || value > hi)
        throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(value));
}

DirichletCharacter character_arg(long modulus, long label) {
    require_range("--modulus", modulus, 1, Config::kMaxModulus);
    if (modulus % 2 == 0) throw UsageError("--modulus must be odd");
    return DirichletCharacter::from_label(modulus, label);
}

Json complex_json(const Cyclotomic& z) {
    const auto c = z.to_complex();
    return Json::array({c.real(), c.imag()});
}

struct Options {
    std::string format = "json";
    std::string verify_format = "text";
    bool json = false;
    long w = 1;
    long n_max = -1;
    long n = 0;
    long modulus = 1;
    long label = 0;
    long F = 0;
    long p = 0;
    long prec = Config::kDigits;
    long guard = Config::kGuard;
    std::string via = "direct";
    std::string s = "0";
    std::string x = "1";
    double real_s = 0.0;
    double tol = Config::kZetaTolerance;
    std::string suite;
};

void cmd_genocchi(const Options& o, std::ostream& out) {
    const long n_max = o.n_max < 0 ? Config::kGenocchiTerms : o.n_max;
    require_range("--w", o.w, 1, Config::kMaxOrder);
    require_range("--n-max", n_max, 0, Config::kMaxTerms);
    const auto format = parse_format(o.format);
    const auto table = multiple_genocchi_numbers(o.w, n_max);
    const auto& v = table.values();
    switch (format) {
        case OutputFormat::json:
            // Bare integer literals of any size.
            out << '[';
            for (std::size_t i = 0; i <= static_cast<std::size_t>(n_max); ++i) out << (i ? "," : "") << v[i];
            out << "]\n";
            break;
        case OutputFormat::csv:
            out << "n,value\n";
            for (long i = 0; i <= n_max; ++i) out << i << ',' << v[i] << '\n';
            break;
        case OutputFormat::text:
            for (long i = 0; i <= n_max; ++i) out << "G_" << i << "^(" << o.w << ") = " << v[i] << '\n';
            break;
    }
}

void cmd_chars(const Options& o, std::ostream& out) {
    require_range("--modulus", o.modulus, 1, Config::kMaxModulus);
    const auto format = parse_format(o.format);
    const auto chars = enumerate_characters(o.modulus);
    switch (format) {
        case OutputFormat::json: {
            Json arr = Json::array();
            for (const auto& chi : chars) arr.push_back(to_json(chi, true));
            out << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
        case OutputFormat::text: {
            const char sep = format == OutputFormat::csv ? ',' : ' ';
            if (format == OutputFormat::csv) out << "label,order,conductor,primitive,values\n";
            for (const auto& chi : chars) {
                const auto j = to_json(chi, true);
                std::string values;
                for (const auto& v : j["values"]) values += (values.empty() ? "" : " ") + (v.is_null() ? "-" : v.dump());
                out << chi.label() << sep << chi.order() << sep << chi.conductor() << sep
                    << (chi.is_primitive() ? "true" : "false") << sep << values << '\n';
            }
            break;
        }
    }
}

void cmd_gen_genocchi(const Options& o, std::ostream& out) {
    const long n_max = o.n_max < 0 ? Config::kGeneralizedTerms : o.n_max;
    require_range("--w", o.w, 1, Config::kMaxOrder);
    require_range("--n-max", n_max, 0, Config::kMaxTerms);
    const auto format = parse_format(o.format);
    const auto chi = character_arg(o.modulus, o.label);
    const auto values = generalized_genocchi(chi, o.w, n_max);
    if (format == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& v : values) arr.push_back(to_json(v));
        out << Json{{"modulus", o.modulus}, {"label", o.label}, {"w", o.w}, {"values", std::move(arr)}}.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::csv) out << "n,root_order,coeffs\n";
    for (long n = 0; n <= n_max; ++n) {
        std::string coeffs;
        for (const auto& c : values[n].coeffs()) coeffs += (coeffs.empty() ? "" : " ") + c.to_string();
        if (format == OutputFormat::csv) out << n << ',' << values[n].root_order() << ',' << coeffs << '\n';
        else out << "G_" << n << ",chi^(" << o.w << ") = [" << coeffs << "] in Q(zeta_" << values[n].root_order() << ")\n";
    }
}

void cmd_lvalue(const Options& o, std::ostream& out) {
    require_range("--w", o.w, 1, Config::kMaxOrder);
    require_range("--n", o.n, 0, Config::kMaxTerms);
    const auto chi = character_arg(o.modulus, o.label);
    const long F = o.F == 0 ? o.modulus : o.F;
    Cyclotomic value;
    Json j{{"modulus", o.modulus}, {"label", o.label}, {"w", o.w}, {"n", o.n}, {"via", o.via}};
    if (o.via == "direct") {
        value = l_value_neg(chi, o.w, o.n);
    } else if (o.via == "partition") {
        value = l_value_via_partition(chi, o.w, o.n + o.w, F);
        j["F"] = F;
    } else if (o.via == "washington") {
        const auto scale = Rational(mpz_class(factorial(o.w) * binomial(o.n + o.w, o.w)));
        value = washington_rhs_at_neg(chi, o.w, o.n + o.w, F) * Cyclotomic(scale.inverse());
        j["F"] = F;
    } else {
        throw UsageError("--via must be direct, partition or washington");
    }
    j["value"] = to_json(value);
    j["approx"] = complex_json(value);
    out << j.dump(2) << '\n';
}

void cmd_zeta_num(const Options& o, std::ostream& out) {
    require_range("--w", o.w, 1, Config::kMaxOrder);
    const auto x = Rational::parse(o.x);
    const auto r = zeta_numeric(o.w, o.real_s, x, o.tol);
    out << Json{{"w", o.w}, {"s", o.real_s}, {"x", x.to_string()}, {"value", r.value}, {"error_bound", r.error_bound}}
               .dump(2)
        << '\n';
}

void cmd_padic_l(const Options& o, std::ostream& out) {
    require_odd_prime(o.p);
    require_range("--w", o.w, 1, Config::kMaxOrder);
    require_range("--prec", o.prec, 1, Config::kMaxDigits);
    const auto chi = character_arg(o.modulus, o.label);
    const long F = o.F == 0 ? std::lcm(o.p, o.modulus) : o.F;
    const PadicLContext ctx(o.p, chi, o.w, F, PrecisionPolicy{o.prec, o.guard});
    const auto s = Padic::from_rational(Rational::parse(o.s), o.p, o.prec);
    const auto value = lambda_p(ctx, s);
    out << Json{{"p", o.p}, {"prec", o.prec}, {"modulus", o.modulus}, {"label", o.label}, {"w", o.w},
                {"F", F},   {"s", o.s},       {"value", to_json(value)}}
               .dump(2)
        << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
    require_range("--prec", o.prec, 1, Config::kMaxDigits);
    const auto format = o.json ? OutputFormat::json : parse_format(o.verify_format);
    VerifyOptions vo;
    if (o.p != 0) vo.prime = o.p;
    vo.digits = o.prec;
    vo.guard = o.guard;
    const auto report = run_suite(o.suite, vo);
    out << emit_report(report, format);
    return report.pass() ? kExitOk : kExitFailed;
}

void error_record(std::ostream& err, const char* kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple generalized Genocchi numbers, L-values and p-adic L-functions", "mgen"};
    app.require_subcommand(1);
    Options o;

    auto* genocchi = app.add_subcommand("genocchi", "multiple Genocchi numbers G_n^(w)");
    genocchi->add_option("--w", o.w, "order w >= 1");
    genocchi->add_option("--n-max", o.n_max, "last index");
    genocchi->add_option("--format", o.format, "json | csv | text");

    auto* chars = app.add_subcommand("chars", "Dirichlet characters of an odd modulus with value tables");
    chars->add_option("--modulus", o.modulus, "odd modulus")->required();
    chars->add_option("--format", o.format, "json | csv | text");

    auto* gen = app.add_subcommand("gen-genocchi", "generalized numbers G_{n,chi}^(w)");
    gen->add_option("--modulus", o.modulus)->required();
    gen->add_option("--char", o.label, "character label")->required();
    gen->add_option("--w", o.w);
    gen->add_option("--n-max", o.n_max);
    gen->add_option("--format", o.format);

    auto* lvalue = app.add_subcommand("lvalue", "L^(w)(-n | chi)");
    lvalue->add_option("--modulus", o.modulus)->required();
    lvalue->add_option("--char", o.label)->required();
    lvalue->add_option("--w", o.w);
    lvalue->add_option("--n", o.n)->required();
    lvalue->add_option("--via", o.via, "direct | partition | washington");
    lvalue->add_option("--F", o.F, "odd multiple of the modulus");

    auto* zeta = app.add_subcommand("zeta-num", "zeta_G^(w)(s, x) for real s >= w");
    zeta->add_option("--w", o.w);
    zeta->add_option("--s", o.real_s)->required();
    zeta->add_option("--x", o.x, "rational P/Q");
    zeta->add_option("--tol", o.tol);

    auto* padic = app.add_subcommand("padic-l", "Lambda(s) = w! C(-s,w) L_p(s+w | chi)");
    padic->add_option("--p", o.p)->required();
    padic->add_option("--prec", o.prec);
    padic->add_option("--guard", o.guard);
    padic->add_option("--modulus", o.modulus);
    padic->add_option("--char", o.label);
    padic->add_option("--w", o.w);
    padic->add_option("--F", o.F, "multiple of p and the modulus; default lcm");
    padic->add_option("--s", o.s, "rational P/Q in Z_p")->required();

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--p", o.p, "restrict the prime grid");
    verify->add_option("--prec", o.prec);
    verify->add_option("--guard", o.guard);
    verify->add_flag("--json", o.json, "JSON report");
    verify->add_option("--format", o.verify_format, "text | json | csv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_record(err, "usage", e.what());
        return kExitUsage;
    }

    const bool verbose = std::getenv(Config::kVerboseVariable) != nullptr;
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (*genocchi) cmd_genocchi(o, out);
        else if (*chars) cmd_chars(o, out);
        else if (*gen) cmd_gen_genocchi(o, out);
        else if (*lvalue) cmd_lvalue(o, out);
        else if (*zeta) cmd_zeta_num(o, out);
        else if (*padic) cmd_padic_l(o, out);
        else if (*verify) code = cmd_verify(o, out);
    } catch (const UsageError& e) {
        error_record(err, "usage", e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        error_record(err, "domain", e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        error_record(err, "internal", e.what());
        return kExitDomain;
    }
    if (verbose) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed " << ms << " ms\n";
    }
    return code;
}

}  // namespace mgen
