/**
 * @file picard_weights.cpp
 * @brief Command-line driver: enumeration, oracle, Kostant characters, boundary
 * profiles, classification, degeneration tables and verification suites.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget guard.
 */
#include "picard/picard.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#ifndef PICARD_DEFAULT_LEDGER
#define PICARD_DEFAULT_LEDGER ""
#endif

namespace {

using namespace picard;

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

struct CliConfig {
    unsigned threads = default_thread_count();
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    std::string format = "json";
    std::string ledger_path = PICARD_DEFAULT_LEDGER;
};

struct Args {
    int g = 1;
    int r = 1;
    Coord p = 0;
    std::optional<Coord> k;
    std::optional<int> q;
    std::string lambda;
    std::string source = "both";
    std::string suite = "all";
    bool kuga_sato = false;
    std::optional<Coord> p_min;
    std::optional<Coord> p_max;
};

void emit(const Json& json) { std::cout << json.dump(2) << '\n'; }

std::string join(const std::set<Coord>& values) {
    std::string out;
    for (Coord v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

std::optional<KnownDiscrepancyLedger> maybe_ledger(const CliConfig& cfg) {
    if (cfg.ledger_path.empty() || !std::filesystem::exists(cfg.ledger_path)) return std::nullopt;
    return load_ledger(cfg.ledger_path);
}

int run_enumerate(const Args& a, const CliConfig& cfg) {
    const ConstituentSet set = enumerate({a.g, a.r, a.p});
    if (cfg.format == "tsv") {
        std::cout << "character\n";
        for (const auto& lambda : set.characters) std::cout << to_string(lambda) << '\n';
    } else {
        emit(to_json(set));
    }
    return kOk;
}

int run_oracle(const Args& a, const CliConfig& cfg) {
    const EnumerationSpec spec{a.g, a.r, a.p};
    const auto terms = oracle_decompose(spec, cfg.subset_budget);
    if (cfg.format == "tsv") {
        std::cout << "character\tmultiplicity\n";
        for (const auto& t : terms) std::cout << to_string(t.character) << '\t' << t.multiplicity << '\n';
    } else {
        emit(to_json(spec, terms));
    }
    return kOk;
}

int run_kostant(const Args& a, const CliConfig& cfg) {
    const TorusCharacter lambda = parse_character(a.lambda, a.g);
    const int q_low = a.q.value_or(0);
    const int q_high = a.q.value_or(3 * a.g);
    const auto elements = all_elements(a.g);

    Json degrees = Json::array();
    if (cfg.format == "tsv") std::cout << "q\tsigma\tcharacter\n";
    for (int q = q_low; q <= q_high; ++q) {
        const auto characters = kostant_cohomology(lambda, q);
        Json list = Json::array();
        std::size_t i = 0;
        for (const auto& sigma : elements) {
            if (length(sigma) != q) continue;
            const TorusCharacter& mu = characters.at(i++);
            if (cfg.format == "tsv")
                std::cout << q << '\t' << to_string(sigma) << '\t' << to_string(mu) << '\n';
            list.push_back({{"sigma", to_string(sigma)}, {"character", to_string(mu)}});
        }
        degrees.push_back({{"q", q}, {"count", characters.size()}, {"characters", std::move(list)}});
    }
    if (cfg.format != "tsv") emit(Json{{"lambda", to_string(lambda)}, {"g", a.g}, {"degrees", std::move(degrees)}});
    return kOk;
}

int run_profile(const Args& a, const CliConfig& cfg) {
    const TorusCharacter lambda = parse_character(a.lambda, a.g);
    const WeightProfile profile = a.kuga_sato ? kuga_sato_profile(lambda, a.g) : boundary_profile(lambda, a.g);
    if (cfg.format == "tsv") {
        std::cout << "degree\tweight\tmultiplicity\n";
        for (const auto& [n, weights] : profile.degrees)
            for (const auto& [w, m] : weights) std::cout << n << '\t' << w << '\t' << m << '\n';
    } else {
        emit(to_json(profile, lambda, a.kuga_sato));
    }
    return kOk;
}

int run_classify(const Args& a, const CliConfig& cfg) {
    const TorusCharacter lambda = parse_character(a.lambda, a.g);
    const EnumerationSpec spec{a.g, a.r, degree(lambda)};
    const Classification c = classify(lambda, spec);
    if (cfg.format == "tsv") {
        std::cout << "lambda\tverdict\twitness_degree\twitness_weight\n"
                  << to_string(lambda) << '\t' << name(c.verdict) << '\t'
                  << (c.witness ? std::to_string(c.witness->degree) : "") << '\t'
                  << (c.witness ? std::to_string(c.witness->weight) : "") << '\n';
    } else {
        emit(to_json(c, lambda, spec));
    }
    return kOk;
}

int run_degeneration(const Args& a, const CliConfig& cfg) {
    const bool closed = a.source != "brute";
    const bool brute = a.source != "closed";
    std::optional<BruteForceTable> table;
    if (brute) table = brute_force_table({a.g, a.r, a.p});

    const Coord k_low = a.k.value_or(0);
    const Coord k_high = a.k.value_or(4 * static_cast<Coord>(a.g) - 1);
    Json cells = Json::array();
    if (cfg.format == "tsv") std::cout << "k" << (closed ? "\tclosed" : "") << (brute ? "\tbrute" : "") << '\n';
    for (Coord k = k_low; k <= k_high; ++k) {
        Json cell{{"k", k}};
        std::set<Coord> c, b;
        if (closed) c = closed_form_weights(a.g, a.r, a.p, k);
        if (brute) {
            detail::check_k(a.g, k);
            b = table->cells.at(k).weights();
        }
        if (closed) cell["closed"] = c;
        if (brute) cell["brute"] = b;
        if (closed && brute) cell["match"] = c == b;
        if (cfg.format == "tsv")
            std::cout << k << (closed ? "\t" + join(c) : "") << (brute ? "\t" + join(b) : "") << '\n';
        cells.push_back(std::move(cell));
    }
    if (cfg.format != "tsv") emit(Json{{"g", a.g}, {"r", a.r}, {"p", a.p}, {"cells", std::move(cells)}});
    return kOk;
}

int run_compare(const Args& a, const CliConfig& cfg) {
    std::optional<std::pair<Coord, Coord>> range;
    if (a.p_min || a.p_max) range = std::pair{a.p_min.value_or(0), a.p_max.value_or(total_rank(a.g, a.r))};
    const ComparisonReport report = compare(a.g, a.r, range, cfg.threads);
    if (cfg.format == "tsv") {
        std::cout << to_tsv_matrix(report);
    } else {
        emit(to_json(report));
    }
    return kOk;
}

int run_verify(const Args& a, const CliConfig& cfg) {
    const auto suite = parse_suite(a.suite);
    if (!suite) throw DomainError("unknown suite '" + a.suite + "'");
    VerifyOptions opt{cfg.threads, cfg.subset_budget, maybe_ledger(cfg)};
    const VerificationReport report = verify(*suite, a.g, a.r, opt);
    if (cfg.format == "tsv") {
        std::cout << "check\tstatus\texamined\tviolations\n";
        for (const auto& c : report.checks)
            std::cout << c.name << '\t' << (c.passed() ? "PASS" : "FAIL") << '\t' << c.examined << '\t'
                      << c.violation_count << '\n';
    } else {
        emit(to_json(report));
    }
    return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary weights of Picard modular varieties and their Kuga-Sato families"};
    app.require_subcommand(1);

    CliConfig cfg;
    Args args;
    app.add_option("--threads", cfg.threads, "worker threads (default: $PICARD_THREADS or hardware)")
        ->check(CLI::PositiveNumber);
    app.add_option("--subset-budget", cfg.subset_budget, "largest binomial(6gr, p) the oracle will expand")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--ledger", cfg.ledger_path, "known-discrepancy ledger (JSON list of cells)");

    auto add_g = [&](CLI::App* sub) { sub->add_option("--g", args.g, "degree of the totally real field")->required()->check(CLI::PositiveNumber); };
    auto add_r = [&](CLI::App* sub) { sub->add_option("--r", args.r, "Kuga-Sato power")->required()->check(CLI::PositiveNumber); };
    auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", args.lambda, "character a1,b1,c1;...;ag,bg,cg|d")->required();
    };

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "dominant constituents of the p-th exterior power");
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force decomposition of the p-th exterior power");
    for (CLI::App* sub : {enumerate_cmd, oracle_cmd}) {
        add_g(sub);
        add_r(sub);
        sub->add_option("--p", args.p, "exterior degree")->required();
    }

    CLI::App* kostant_cmd = app.add_subcommand("kostant", "Kostant characters sigma . lambda by length");
    add_g(kostant_cmd);
    add_lambda(kostant_cmd);
    kostant_cmd->add_option("--q", args.q, "only this length");

    CLI::App* profile_cmd = app.add_subcommand("profile", "boundary cohomology weight profile");
    add_g(profile_cmd);
    add_lambda(profile_cmd);
    profile_cmd->add_flag("--kuga-sato", args.kuga_sato, "shift degrees by p (Kuga-Sato family)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "interior-motive verdict for one character");
    add_g(classify_cmd);
    add_r(classify_cmd);
    add_lambda(classify_cmd);

    CLI::App* degeneration_cmd = app.add_subcommand("degeneration", "boundary weights of R^k j_* R^p f_*");
    add_g(degeneration_cmd);
    add_r(degeneration_cmd);
    degeneration_cmd->add_option("--p", args.p, "exterior degree")->required();
    degeneration_cmd->add_option("--k", args.k, "only this k");
    degeneration_cmd->add_option("--source", args.source, "closed form, brute force, or both")
        ->check(CLI::IsMember({"closed", "brute", "both"}));

    CLI::App* compare_cmd = app.add_subcommand("compare", "closed form vs brute force over all (p, k)");
    add_g(compare_cmd);
    add_r(compare_cmd);
    compare_cmd->add_option("--p-min", args.p_min, "first p");
    compare_cmd->add_option("--p-max", args.p_max, "last p");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_g(verify_cmd);
    add_r(verify_cmd);
    verify_cmd->add_option("--suite", args.suite, "suite to run")
        ->check(CLI::IsMember({"enumeration", "identities", "regular-avoidance", "parallel", "degeneration", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*enumerate_cmd) return run_enumerate(args, cfg);
        if (*oracle_cmd) return run_oracle(args, cfg);
        if (*kostant_cmd) return run_kostant(args, cfg);
        if (*profile_cmd) return run_profile(args, cfg);
        if (*classify_cmd) return run_classify(args, cfg);
        if (*degeneration_cmd) return run_degeneration(args, cfg);
        if (*compare_cmd) return run_compare(args, cfg);
        if (*verify_cmd) return run_verify(args, cfg);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const OracleFailure& e) {
        std::cerr << "oracle failure: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
