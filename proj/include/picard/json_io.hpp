/**
 * @file json_io.hpp
 * @brief JSON encodings of every result type, plus the known-discrepancy ledger file.
 *
 * Objects use insertion-ordered keys so output is byte-stable for fixed input.
 */
#pragma once

#include "picard/avoidance.hpp"
#include "picard/boundary.hpp"
#include "picard/degeneration.hpp"
#include "picard/exterior.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace picard {

using Json = nlohmann::ordered_json;

inline Json to_json(const Contribution& c) {
    return Json{{"sigma", to_string(c.sigma)},
                {"mu", to_string(c.mu)},
                {"positivity", name(c.positivity())},
                {"m", c.m},
                {"kostant_m", c.kostant_m()},
                {"p0", c.p0},
                {"q0", c.q0},
                {"degree", c.degree},
                {"weight", c.weight},
                {"multiplicity", c.multiplicity}};
}

inline Json to_json(const WeightProfile& profile, const TorusCharacter& lambda, bool kuga_sato) {
    Json degrees = Json::object();
    for (const auto& [n, weights] : profile.degrees) {
        Json list = Json::array();
        for (const auto& [w, mult] : weights) list.push_back({{"weight", w}, {"multiplicity", mult}});
        degrees[std::to_string(n)] = std::move(list);
    }
    Json witnesses = Json::object();
    for (const auto& [n, list] : profile.witnesses) {
        Json items = Json::array();
        for (const Contribution& c : list) items.push_back(to_json(c));
        witnesses[std::to_string(n)] = std::move(items);
    }
    return Json{{"lambda", to_string(lambda)}, {"g", profile.g},           {"p", degree(lambda)},
                {"kuga_sato", kuga_sato},      {"degrees", std::move(degrees)}, {"witnesses", std::move(witnesses)}};
}

inline Json to_json(const ConstituentSet& set) {
    Json list = Json::array();
    for (const TorusCharacter& lambda : set.characters)
        list.push_back({{"character", to_string(lambda)}, {"multiplicity", 1}});
    return Json{{"g", set.spec.g}, {"r", set.spec.r}, {"p", set.spec.p}, {"constituents", std::move(list)}};
}

inline Json to_json(const EnumerationSpec& spec, const std::vector<OracleTerm>& terms) {
    Json list = Json::array();
    for (const OracleTerm& t : terms)
        list.push_back({{"character", to_string(t.character)}, {"multiplicity", t.multiplicity}});
    return Json{{"g", spec.g}, {"r", spec.r}, {"p", spec.p}, {"constituents", std::move(list)}};
}

inline Json to_json(const Classification& c, const TorusCharacter& lambda, const EnumerationSpec& spec) {
    return Json{{"lambda", to_string(lambda)},
                {"g", spec.g},
                {"r", spec.r},
                {"p", degree(lambda)},
                {"verdict", name(c.verdict)},
                {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

inline Json to_json(const SourcedContribution& s) {
    Json out{{"lambda", to_string(s.lambda)}};
    const Json contribution = to_json(s.contribution);
    for (const auto& [key, value] : contribution.items()) out[key] = value;
    return out;
}

inline Json to_json(const ComparisonEntry& e) {
    Json witnesses = Json::array();
    for (const auto& w : e.discrepancy_witnesses) witnesses.push_back(to_json(w));
    return Json{{"p", e.p},
                {"k", e.k},
                {"closed_form", e.closed_form},
                {"brute_force", e.brute_force},
                {"match", e.match},
                {"extra_weights", e.extra_weights},
                {"missing_weights", e.missing_weights},
                {"discrepancy_witnesses", std::move(witnesses)}};
}

inline Json to_json(const ComparisonReport& report) {
    Json entries = Json::array();
    std::size_t mismatches = 0;
    for (const auto& e : report.entries) {
        entries.push_back(to_json(e));
        mismatches += e.match ? 0 : 1;
    }
    return Json{{"g", report.g},         {"r", report.r},           {"p_min", report.p_min},
                {"p_max", report.p_max}, {"mismatches", mismatches}, {"entries", std::move(entries)}};
}

/// Rows p, columns k; cells hold the brute-force weights, `!` marks a mismatch.
inline std::string to_tsv_matrix(const ComparisonReport& report) {
    std::string out = "p";
    for (Coord k = 0; k < 4 * static_cast<Coord>(report.g); ++k) out += "\tk=" + std::to_string(k);
    out += '\n';
    for (Coord p = report.p_min; p <= report.p_max; ++p) {
        out += std::to_string(p);
        for (Coord k = 0; k < 4 * static_cast<Coord>(report.g); ++k) {
            out += '\t';
            const ComparisonEntry* e = report.find(p, k);
            if (!e) continue;
            bool first = true;
            for (Coord w : e->brute_force) {
                if (!first) out += ',';
                out += std::to_string(w);
                first = false;
            }
            if (!e->match) out += '!';
        }
        out += '\n';
    }
    return out;
}

inline Json to_json(const KnownDiscrepancyLedger& ledger) {
    Json out = Json::array();
    for (const LedgerCell& c : ledger.cells)
        out.push_back({{"g", c.g}, {"r", c.r}, {"p", c.p}, {"k", c.k}, {"note", c.note}});
    return out;
}

inline KnownDiscrepancyLedger ledger_from_json(const Json& json) {
    if (!json.is_array()) throw DomainError("ledger must be a JSON list");
    KnownDiscrepancyLedger ledger;
    for (const Json& item : json) {
        try {
            ledger.cells.push_back({item.at("g").get<int>(), item.at("r").get<int>(), item.at("p").get<Coord>(),
                                    item.at("k").get<Coord>(), item.value("note", std::string{})});
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("malformed ledger entry: ") + e.what());
        }
    }
    return ledger;
}

inline KnownDiscrepancyLedger load_ledger(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open ledger file " + path);
    try {
        return ledger_from_json(Json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("ledger file " + path + " is not valid JSON: " + e.what());
    }
}

}  // namespace picard
