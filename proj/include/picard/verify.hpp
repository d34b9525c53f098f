/**
 * @file verify.hpp
 * @brief Verification suites over a (g, r) grid point.
 *
 * Each check examines a family of objects and records violations. Reports
 * are deterministic: no timings, canonical orderings everywhere.
 */
#pragma once

#include "picard/avoidance.hpp"
#include "picard/boundary.hpp"
#include "picard/degeneration.hpp"
#include "picard/exterior.hpp"
#include "picard/json_io.hpp"
#include "picard/parallel.hpp"
#include "picard/weyl.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::uint64_t examined = 0;
    std::uint64_t violation_count = 0;
    std::vector<std::string> violations;  // first kMaxListed only

    static constexpr std::size_t kMaxListed = 25;

    bool passed() const { return violation_count == 0; }

    void fail(std::string message) {
        ++violation_count;
        if (violations.size() < kMaxListed) violations.push_back(std::move(message));
    }

    void merge(const CheckResult& other) {
        examined += other.examined;
        for (const auto& v : other.violations) fail(v);
        violation_count += other.violation_count - other.violations.size();
    }
};

enum class Suite { Enumeration, Identities, RegularAvoidance, Parallel, Degeneration, All };

inline std::string_view name(Suite s) {
    switch (s) {
        case Suite::Enumeration: return "enumeration";
        case Suite::Identities: return "identities";
        case Suite::RegularAvoidance: return "regular-avoidance";
        case Suite::Parallel: return "parallel";
        case Suite::Degeneration: return "degeneration";
        case Suite::All: return "all";
    }
    return "?";
}

inline std::optional<Suite> parse_suite(std::string_view text) {
    for (Suite s : {Suite::Enumeration, Suite::Identities, Suite::RegularAvoidance, Suite::Parallel,
                    Suite::Degeneration, Suite::All})
        if (name(s) == text) return s;
    return std::nullopt;
}

struct VerifyOptions {
    unsigned threads = 1;
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    std::optional<KnownDiscrepancyLedger> ledger;
};

struct VerificationReport {
    std::string suite;
    int g = 1;
    int r = 1;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed(); });
    }
};

inline Json to_json(const CheckResult& c) {
    return Json{{"name", c.name},
                {"passed", c.passed()},
                {"examined", c.examined},
                {"violation_count", c.violation_count},
                {"violations", c.violations}};
}

inline Json to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    return Json{{"suite", report.suite},
                {"g", report.g},
                {"r", report.r},
                {"passed", report.passed()},
                {"checks", std::move(checks)}};
}

namespace detail {

inline std::vector<Coord> degree_range(int g, int r) {
    std::vector<Coord> out;
    for (Coord p = 0; p <= total_rank(g, r); ++p) out.push_back(p);
    return out;
}

/// Runs `body(p, result)` for every p in 0..6rg in parallel and merges in p order.
template <class Body>
CheckResult per_degree(std::string name, int g, int r, unsigned threads, Body&& body) {
    const auto ps = degree_range(g, r);
    auto parts = parallel_map<CheckResult>(ps.size(), threads, [&](std::size_t i) {
        CheckResult part;
        body(ps[i], part);
        return part;
    });
    CheckResult out{std::move(name)};
    for (const auto& part : parts) out.merge(part);
    return out;
}

inline std::string describe(const TorusCharacter& lambda, const Contribution& c) {
    return "lambda=" + to_string(lambda) + " sigma=" + to_string(c.sigma) + " mu=" + to_string(c.mu) +
           " degree=" + std::to_string(c.degree) + " weight=" + std::to_string(c.weight) +
           " m=" + std::to_string(c.kostant_m());
}

}  // namespace detail

/// Problems with one boundary-profile contribution of lambda: the weight identity
/// W = p -/+ m g, the lower bounds on m (sharper for regular lambda), and the degree range.
inline std::vector<std::string> identity_violations(const TorusCharacter& lambda, const Contribution& c) {
    std::vector<std::string> out;
    const Coord p = degree(lambda);
    const Coord g = lambda.g();
    const bool regular = is_regular(lambda);
    const Coord m = c.kostant_m();
    auto bad = [&](const std::string& what) { out.push_back(what + ": " + detail::describe(lambda, c)); };

    switch (c.positivity()) {
        case Positivity::TotallyPositive:
            if (c.weight != p - m * g) bad("weight != p - m g");
            if (m < -1) bad("m < -1 for totally positive sigma");
            if (regular && m < 0) bad("m < 0 for regular lambda");
            if (c.degree < 0 || c.degree > 2 * g - 1) bad("degree outside [0, 2g-1]");
            break;
        case Positivity::TotallyNegative:
            if (c.weight != p + m * g) bad("weight != p + m g");
            if (m < 3) bad("m < 3 for totally negative sigma");
            if (regular && m < 4) bad("m < 4 for regular lambda");
            if (c.degree < 2 * g || c.degree > 4 * g - 1) bad("degree outside [2g, 4g-1]");
            break;
        case Positivity::Mixed: bad("mixed sigma contributes"); break;
    }
    return out;
}

/// The g=2 example ((1,0,-1),(0,0,0),-1): degrees 1,2 carry weight 2, degrees 5,6 weight 10, nothing else.
inline CheckResult check_golden_g2_table() {
    CheckResult out{"golden-g2-table"};
    const TorusCharacter lambda({{1, 0, -1}, {0, 0, 0}}, -1);
    const WeightProfile profile = boundary_profile(lambda, 2);
    const std::map<Coord, std::set<Coord>> expected{{1, {2}}, {2, {2}}, {5, {10}}, {6, {10}}};
    for (Coord n = 0; n < 8; ++n) {
        ++out.examined;
        const auto want = expected.contains(n) ? expected.at(n) : std::set<Coord>{};
        const auto got = profile.weights_at(n);
        if (got != want) {
            std::string text = "degree " + std::to_string(n) + ": weights {";
            for (Coord w : got) text += std::to_string(w) + ",";
            out.fail(text + "}");
        }
    }
    if (!is_dominant(lambda) || is_regular(lambda) || !is_kostant_parallel(lambda))
        out.fail("example should be dominant, non-regular and Kostant-parallel");
    if (!is_constituent(lambda, {2, 1, 2})) out.fail("example should be a constituent of Lambda^2 for r=1");
    return out;
}

inline CheckResult check_enumeration_matches_oracle(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("enumeration-equals-oracle", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        const EnumerationSpec spec{g, r, p};
        const auto listed = enumerate(spec).characters;
        const auto terms = oracle_decompose(spec, opt.subset_budget);
        std::vector<TorusCharacter> support;
        for (const auto& t : terms) support.push_back(t.character);
        ++res.examined;
        if (support != listed)
            res.fail("p=" + std::to_string(p) + ": enumerate has " + std::to_string(listed.size()) +
                     " characters, oracle support has " + std::to_string(support.size()));
    });
}

inline CheckResult check_oracle_dimension(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("oracle-dimension-count", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        const auto terms = oracle_decompose({g, r, p}, opt.subset_budget);
        std::uint64_t dim = 0;
        for (const auto& t : terms) dim += t.multiplicity * weyl_dimension(t.character);
        const auto expected =
            detail::binomial(static_cast<std::uint64_t>(total_rank(g, r)), static_cast<std::uint64_t>(p));
        ++res.examined;
        if (dim != expected)
            res.fail("p=" + std::to_string(p) + ": dimension " + std::to_string(dim) + " != binomial " +
                     std::to_string(expected));
    });
}

inline CheckResult check_duality_bijection(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("duality-bijection", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        const auto source = enumerate({g, r, p}).characters;
        const auto target = enumerate({g, r, total_rank(g, r) - p}).characters;
        std::set<TorusCharacter> image;
        for (const auto& lambda : source) {
            ++res.examined;
            TorusCharacter dual = duality(lambda, r);
            if (duality(dual, r) != lambda) res.fail("duality not an involution at " + to_string(lambda));
            image.insert(std::move(dual));
        }
        if (image != std::set<TorusCharacter>(target.begin(), target.end()))
            res.fail("p=" + std::to_string(p) + ": duality image differs from the constituents of degree " +
                     std::to_string(total_rank(g, r) - p));
    });
}

inline CheckResult check_weight_identities(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("weight-identities", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        for (const auto& lambda : enumerate({g, r, p}).characters)
            for (const auto& c : boundary_profile(lambda, g).contributions()) {
                ++res.examined;
                for (auto& v : identity_violations(lambda, c)) res.fail(std::move(v));
            }
    });
}

inline CheckResult check_mixed_vanishing(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("mixed-vanishing", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        const auto constituents = enumerate({g, r, p}).characters;
        for_each_element(g, [&](const WeylElement& sigma) {
            if (classify(sigma) != Positivity::Mixed) return;
            for (const auto& lambda : constituents) {
                ++res.examined;
                if (hc_triviality(dot_action(sigma, lambda)))
                    res.fail("sigma=" + to_string(sigma) + " lambda=" + to_string(lambda) + " is H_C-trivial");
            }
        });
    });
}

/// Per-degree counts of Kostant characters against (1 + 2t + 2t^2 + t^3)^g, for a
/// regular and a non-regular weight, plus distinctness of the dot orbit.
inline CheckResult check_kostant_counts(int g) {
    CheckResult out{"kostant-counts"};
    const std::vector<std::uint64_t> expected = length_counts(g);
    std::vector<Triple> regular(static_cast<std::size_t>(g), Triple{1, 0, -1});
    std::vector<Triple> zero(static_cast<std::size_t>(g), Triple{0, 0, 0});
    for (const TorusCharacter& lambda : {TorusCharacter(regular, -1), TorusCharacter(zero, 0)}) {
        std::set<TorusCharacter> orbit;
        for (int q = 0; q <= 3 * g; ++q) {
            ++out.examined;
            const auto chars = kostant_cohomology(lambda, q);
            if (chars.size() != expected[static_cast<std::size_t>(q)])
                out.fail("lambda=" + to_string(lambda) + " q=" + std::to_string(q) + ": " +
                         std::to_string(chars.size()) + " characters, expected " +
                         std::to_string(expected[static_cast<std::size_t>(q)]));
            orbit.insert(chars.begin(), chars.end());
        }
        std::uint64_t group_order = 1;
        for (int i = 0; i < g; ++i) group_order *= 6;
        if (orbit.size() != group_order) out.fail("dot orbit of " + to_string(lambda) + " is not free");
    }
    return out;
}

inline CheckResult check_regular_avoidance(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("regular-avoidance", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        for (const auto& lambda : enumerate({g, r, p}).characters) {
            if (!is_regular(lambda)) continue;
            ++res.examined;
            const auto result = avoids_weights(lambda, g);
            if (!result.avoids) res.fail("regular " + detail::describe(lambda, *result.witness));
        }
    });
}

/// Parallel dominant constituents: avoidance iff regular. Such characters are
/// always Kostant-parallel, so the boundary is never trivial here.
inline CheckResult check_parallel_equivalence(int g, int r, const VerifyOptions& opt) {
    return detail::per_degree("parallel-equivalence", g, r, opt.threads, [&](Coord p, CheckResult& res) {
        for (const auto& lambda : enumerate({g, r, p}).characters) {
            if (!is_parallel(lambda)) continue;
            ++res.examined;
            if (!is_kostant_parallel(lambda)) res.fail("parallel but not Kostant-parallel: " + to_string(lambda));
            const bool avoids = avoids_weights(lambda, g).avoids;
            if (avoids != is_regular(lambda))
                res.fail(to_string(lambda) + (avoids ? " avoids weights but is not regular"
                                                     : " is regular but meets a forbidden weight"));
        }
    });
}

/// Regularity is not necessary in general: the g=2 example avoids with a nonempty boundary.
inline CheckResult check_nonregular_avoidance_example() {
    CheckResult out{"nonregular-avoidance-example"};
    const TorusCharacter lambda({{1, 0, -1}, {0, 0, 0}}, -1);
    ++out.examined;
    const Classification c = classify(lambda, {2, 1, 2});
    if (c.verdict != Verdict::InteriorMotiveDefined)
        out.fail("expected InteriorMotiveDefined, got " + std::string(name(c.verdict)));
    if (boundary_profile(lambda, 2).empty()) out.fail("expected a nonempty boundary profile");
    return out;
}

/// Closed form vs brute force over every (p, k). Mismatches are only tolerated in the
/// special rows p in {1, 6rg-1}; each needs a witness satisfying the weight identities
/// and a ledger entry.
inline std::vector<CheckResult> check_degeneration(int g, int r, const VerifyOptions& opt,
                                                   const ComparisonReport* precomputed = nullptr) {
    std::optional<ComparisonReport> local;
    if (!precomputed) local = compare(g, r, std::nullopt, opt.threads);
    const ComparisonReport& report = precomputed ? *precomputed : *local;
    const Coord top = total_rank(g, r);

    CheckResult complete{"degeneration-complete"};
    complete.examined = report.entries.size();
    const auto expected_cells = static_cast<std::uint64_t>(top + 1) * static_cast<std::uint64_t>(4 * g);
    if (report.entries.size() != expected_cells)
        complete.fail(std::to_string(report.entries.size()) + " cells, expected " + std::to_string(expected_cells));

    CheckResult generic{"degeneration-generic-cells-match"};
    CheckResult witnesses{"degeneration-discrepancy-witnesses"};
    CheckResult ledger{"degeneration-ledger-confinement"};
    if (!opt.ledger) ledger.fail("no known-discrepancy ledger supplied");

    for (const ComparisonEntry& e : report.entries) {
        ++generic.examined;
        if (e.match) continue;
        const std::string cell = "(g=" + std::to_string(g) + ",r=" + std::to_string(r) + ",p=" + std::to_string(e.p) +
                                 ",k=" + std::to_string(e.k) + ")";
        if (e.p != 1 && e.p != top - 1) generic.fail("closed form and brute force differ at " + cell);

        ++witnesses.examined;
        if (e.extra_weights.empty()) witnesses.fail(cell + " has no brute-force weight to witness");
        for (Coord w : e.missing_weights)
            witnesses.fail(cell + ": closed-form weight " + std::to_string(w) + " is realized by no constituent");
        for (const auto& s : e.discrepancy_witnesses)
            for (auto& v : identity_violations(s.lambda, s.contribution)) witnesses.fail(cell + " " + v);

        ++ledger.examined;
        if (opt.ledger && !opt.ledger->contains(g, r, e.p, e.k)) ledger.fail(cell + " is not in the ledger");
    }

    std::vector<CheckResult> out{complete, generic, witnesses, ledger};
    if (g == 2 && r == 1) {
        CheckResult required{"degeneration-required-cell"};
        ++required.examined;
        const ComparisonEntry* e = report.find(1, 4);
        const TorusCharacter lambda({{0, 0, -1}, {0, 0, 0}}, 0);
        const WeylElement sigma({Perm::r132, Perm::r123});
        if (!e) {
            required.fail("cell (p=1,k=4) missing from the comparison");
        } else {
            if (e->brute_force != std::set<Coord>{7} || !e->closed_form.empty())
                required.fail("cell (p=1,k=4) should be brute {7} vs closed {}");
            const bool has_witness = std::ranges::any_of(e->discrepancy_witnesses, [&](const SourcedContribution& s) {
                return s.lambda == lambda && s.contribution.sigma == sigma && s.contribution.weight == 7;
            });
            if (!has_witness) required.fail("cell (p=1,k=4) lacks the witness lambda=0,0,-1;0,0,0|0 sigma=r132;r123");
        }
        if (!opt.ledger || !opt.ledger->contains(2, 1, 1, 4)) required.fail("cell (g=2,r=1,p=1,k=4) not in the ledger");
        out.push_back(required);
    }
    return out;
}

inline VerificationReport verify(Suite suite, int g, int r, const VerifyOptions& opt) {
    if (g < 1 || r < 1) throw DomainError("g and r must be positive");
    VerificationReport report{std::string(name(suite)), g, r, {}};
    auto& checks = report.checks;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Enumeration) {
        checks.push_back(check_enumeration_matches_oracle(g, r, opt));
        checks.push_back(check_oracle_dimension(g, r, opt));
        checks.push_back(check_duality_bijection(g, r, opt));
    }
    if (all || suite == Suite::Identities) {
        checks.push_back(check_golden_g2_table());
        checks.push_back(check_weight_identities(g, r, opt));
        checks.push_back(check_mixed_vanishing(g, r, opt));
        checks.push_back(check_kostant_counts(g));
    }
    if (all || suite == Suite::RegularAvoidance) checks.push_back(check_regular_avoidance(g, r, opt));
    if (all || suite == Suite::Parallel) {
        checks.push_back(check_parallel_equivalence(g, r, opt));
        checks.push_back(check_nonregular_avoidance_example());
    }
    if (all || suite == Suite::Degeneration)
        for (auto& c : check_degeneration(g, r, opt)) checks.push_back(std::move(c));
    return report;
}

}  // namespace picard
