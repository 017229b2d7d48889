#include "extlab/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "extlab/api_group.hpp"
#include "extlab/em_ext.hpp"
#include "extlab/rank2.hpp"
#include "extlab/suites.hpp"
#include "extlab/table_io.hpp"
#include "extlab/windows.hpp"

namespace extlab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string target;
    long long p = 0;
    int m = 0;
    std::string alpha_text;
    std::string pi_text;
    int max_exp = 3;
    int max_coef = 2;
    int depth = 0;  // 0 picks a per-target default
    long long seed = -1;
    std::string format = "json";
    std::string out_path;

    bool has_p() const { return p != 0; }
    bool has_m() const { return m != 0; }
    bool has_seed() const { return seed >= 0; }
};

Prime config_prime(const RunConfig& cfg) {
    if (!cfg.has_p()) throw UsageError("this target needs -p");
    if (cfg.p < 2 || cfg.p > (1LL << 31))
        throw UsageError("-p must be a prime between 2 and 2^31");
    try {
        return Prime(cfg.p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int config_modulus(const RunConfig& cfg) {
    if (!cfg.has_m()) throw UsageError("this target needs -m");
    if (cfg.m < 1) throw UsageError("-m must be >= 1");
    return cfg.m;
}

// Digit name from --alpha, or seeded digits of the given precision.
std::optional<DigitName> config_alpha(const RunConfig& cfg, const Prime& p, int precision) {
    if (!cfg.alpha_text.empty()) {
        try {
            return parse_digit_name(p, cfg.alpha_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.has_seed())
        return DigitName{p, seeded_canonical_digits(static_cast<std::uint64_t>(cfg.seed), p,
                                                    precision)};
    return std::nullopt;
}

CanonicalPadic require_canonical_alpha(const RunConfig& cfg, const Prime& p, int precision) {
    auto name = config_alpha(cfg, p, precision);
    if (!name) throw UsageError("this target needs --alpha or --seed");
    if (name->precision() < precision)
        throw UsageError("--alpha needs at least " + std::to_string(precision) +
                         " digits for this window");
    try {
        return CanonicalPadic(p, name->digits);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::optional<ApiGroup> config_api_group(const RunConfig& cfg, const Prime& p, int precision) {
    if (!cfg.pi_text.empty()) {
        try {
            auto digits = parse_digit_name(p, cfg.pi_text).digits;
            PiUnit pi(p, std::move(digits));
            if (pi.precision() < precision)
                throw UsageError("--pi needs at least " + std::to_string(precision) +
                                 " digits for this window");
            return ApiGroup(std::move(pi));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.has_seed())
        return ApiGroup(seeded_pi(static_cast<std::uint64_t>(cfg.seed), p, precision));
    return std::nullopt;
}

ApiGroup require_api_group(const RunConfig& cfg, const Prime& p, int precision) {
    auto g = config_api_group(cfg, p, precision);
    if (!g) throw UsageError("this target needs --pi or --seed");
    return *g;
}

std::string alpha_header(const DigitName& name) { return to_string(name); }

std::string pi_header(const ApiGroup& g) {
    std::string out;
    for (int i = 0; i < g.pi().precision(); ++i) {
        if (i) out += ',';
        out += g.pi().s(i).str();
    }
    return out;
}

int emit_table(const RunConfig& cfg, TableDoc doc, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open output path " + cfg.out_path);
        sink = &file;
    }
    if (cfg.format == "csv")
        write_csv(*sink, doc);
    else
        write_json(*sink, doc);
    return 0;
}

int run_table(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_exp < 0 || cfg.max_coef < 0)
        throw UsageError("window bounds must be non-negative");

    if (cfg.target == "g_cm") {
        int m = config_modulus(cfg);
        CmCarrier c{m};
        Cocycle<CmCarrier, ZCarrier> f{
            c, ZCarrier{}, [m](const Int& k, const Int& l) { return g_cm(k, l, m); }, "g"};
        auto doc = tabulate(f, cm_window(m), "g_cm");
        doc.modulus = m;
        return emit_table(cfg, std::move(doc), out);
    }

    Prime p = config_prime(cfg);

    if (cfg.target == "c_alpha") {
        auto alpha = require_canonical_alpha(cfg, p, std::max(cfg.max_exp, 1));
        auto window = cfg.max_exp == 0 ? std::vector<PruferElement>{}
                                       : prufer_window(p, cfg.max_exp);
        auto doc = tabulate(c_alpha_cocycle(alpha), std::move(window), "c_alpha");
        doc.prime = p.value();
        doc.alpha = alpha_header(alpha.as_name());
        return emit_table(cfg, std::move(doc), out);
    }

    if (cfg.target == "v1" || cfg.target == "v2") {
        auto g = require_api_group(cfg, p, std::max(cfg.max_exp, 1));
        const int version = cfg.target == "v1" ? 1 : 2;
        auto shared = std::make_shared<ApiGroup>(g);
        ZInvPCarrier c{p};
        Cocycle<ZInvPCarrier, ZCarrier> f{
            c, ZCarrier{},
            [shared, version](const PInvRational& u, const PInvRational& v) {
                return version == 1 ? shared->cocycle_v1(u, v) : shared->cocycle_v2(u, v);
            },
            cfg.target};
        auto window = cfg.max_exp == 0 ? std::vector<PInvRational>{}
                                       : zinvp_window(p, cfg.max_exp, cfg.max_coef);
        auto doc = tabulate(f, std::move(window), cfg.target);
        doc.prime = p.value();
        doc.pi = pi_header(g);
        return emit_table(cfg, std::move(doc), out);
    }

    if (cfg.target == "k2") {
        auto alpha = require_canonical_alpha(cfg, p, std::max(cfg.max_exp, 1));
        K2Group g(p, alpha);
        K2Carrier carrier{g};
        auto window = cfg.max_exp == 0
                          ? std::vector<K2Element>{}
                          : k2_window(p, cfg.max_coef, cfg.max_exp, cfg.max_coef);
        auto doc = tabulate_cayley(carrier, std::move(window), "k2");
        doc.prime = p.value();
        doc.alpha = alpha_header(alpha.as_name());
        return emit_table(cfg, std::move(doc), out);
    }

    throw UsageError("unknown table target " + cfg.target);
}

int report_checks(const RunConfig& cfg, const std::vector<suites::CheckResult>& checks,
                  std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open output path " + cfg.out_path);
        sink = &file;
    }
    for (const auto& c : checks) {
        if (!c.pass) {
            nlohmann::ordered_json j;
            j["target"] = cfg.target;
            j["failed"] = c.label;
            j["counterexample"] = c.detail;
            *sink << j.dump() << '\n';
            return 1;
        }
        *sink << "ok " << c.label << '\n';
    }
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.target != "lift" && (cfg.max_exp < 1 || cfg.max_coef < 1))
        throw UsageError("verify needs window bounds >= 1");

    std::vector<suites::CheckResult> checks;

    if (cfg.target == "cocycle") {
        bool any = false;
        if (cfg.has_m()) {
            checks.push_back(suites::check_gcm_axioms(config_modulus(cfg)));
            any = true;
        }
        if (cfg.has_p()) {
            Prime p = config_prime(cfg);
            if (auto alpha = config_alpha(cfg, p, cfg.max_exp)) {
                auto canon = require_canonical_alpha(cfg, p, cfg.max_exp);
                checks.push_back(suites::check_c_alpha_axioms(canon, cfg.max_exp));
                checks.push_back(suites::check_c_alpha_oracle(canon, cfg.max_exp));
                any = true;
            }
            if (auto g = config_api_group(cfg, p, cfg.max_exp)) {
                for (int version : {1, 2}) {
                    checks.push_back(
                        suites::check_api_axioms(*g, version, cfg.max_exp, cfg.max_coef));
                    checks.push_back(
                        suites::check_api_oracle(*g, version, cfg.max_exp, cfg.max_coef));
                }
                any = true;
            }
        }
        if (!any)
            throw UsageError("verify cocycle needs -m, or -p with --alpha/--pi/--seed");
    } else if (cfg.target == "extension") {
        bool any = false;
        if (cfg.has_m()) {
            int m = config_modulus(cfg);
            checks.push_back(suites::check_ext_axioms_cm(m, cfg.max_coef));
            if (m >= 2) checks.push_back(suites::check_ext_zlike(m));
            any = true;
        }
        if (cfg.has_p()) {
            Prime p = config_prime(cfg);
            if (auto alpha = config_alpha(cfg, p, cfg.max_exp)) {
                K2Group g(p, require_canonical_alpha(cfg, p, cfg.max_exp));
                checks.push_back(
                    suites::check_k2_axioms(g, cfg.max_coef, cfg.max_exp, cfg.max_coef));
                any = true;
            }
        }
        if (!any) throw UsageError("verify extension needs -m, or -p with --alpha/--seed");
    } else if (cfg.target == "api") {
        Prime p = config_prime(cfg);
        auto g = require_api_group(cfg, p, cfg.max_exp + 1);
        checks.push_back(suites::check_api_relations(g, g.pi().precision() - 1));
        checks.push_back(suites::check_api_nu(g, cfg.max_exp, cfg.max_coef));
        checks.push_back(suites::check_api_purity(g, cfg.max_exp, cfg.max_coef));
        checks.push_back(suites::check_api_oracle(g, 1, cfg.max_exp, cfg.max_coef));
        checks.push_back(suites::check_api_oracle(g, 2, cfg.max_exp, cfg.max_coef));
        checks.push_back(suites::check_api_carry_example());
    } else if (cfg.target == "roundtrip") {
        int m = config_modulus(cfg);
        for (int mm = 1; mm <= m; ++mm) {
            checks.push_back(suites::check_cm_roundtrip(mm));
            checks.push_back(suites::check_cm_coboundary(mm));
        }
    } else if (cfg.target == "lift") {
        Prime p = config_prime(cfg);
        int depth = cfg.depth > 0 ? cfg.depth : 10;
        auto alpha = config_alpha(cfg, p, depth);
        if (!alpha) throw UsageError("verify lift needs --alpha or --seed");
        checks.push_back(suites::check_lift(*alpha, depth));
    } else if (cfg.target == "equivalence") {
        Prime p = config_prime(cfg);
        auto g = require_api_group(cfg, p, cfg.max_exp);
        checks.push_back(suites::check_api_equivalence(g, cfg.max_exp, cfg.max_coef));
    } else {
        throw UsageError("unknown verify target " + cfg.target);
    }

    return report_checks(cfg, checks, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact experiments with abelian group extensions and cocycles"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-p", cfg.p, "prime modulus");
        sub->add_option("-m", cfg.m, "cyclic group modulus");
        sub->add_option("--alpha", cfg.alpha_text, "digit name a_1,a_2,...");
        sub->add_option("--pi", cfg.pi_text, "unit digit prefix s_0,s_1,...");
        sub->add_option("--max-exp", cfg.max_exp, "max exponent / fractional length (default 3)");
        sub->add_option("--max-coef", cfg.max_coef, "max integer coefficient (default 2)");
        sub->add_option("--depth", cfg.depth, "lift depth / name precision");
        sub->add_option("--seed", cfg.seed, "derive missing alpha/pi digits from this seed")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("-o", cfg.out_path, "output path (default stdout)");
    };

    auto* table = app.add_subcommand("table", "export a cocycle or Cayley table");
    table->add_option("target", cfg.target, "g_cm | c_alpha | v1 | v2 | k2")
        ->required()
        ->check(CLI::IsMember({"g_cm", "c_alpha", "v1", "v2", "k2"}));
    add_common(table);

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify
        ->add_option("target", cfg.target,
                     "cocycle | extension | api | roundtrip | lift | equivalence")
        ->required()
        ->check(CLI::IsMember({"cocycle", "extension", "api", "roundtrip", "lift", "equivalence"}));
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(table)) return run_table(cfg, out);
        return run_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace extlab::cli
