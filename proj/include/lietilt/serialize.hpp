#pragma once

// JSON and CSV renderings of the report types. Object keys are emitted in a
// fixed order and weights are written as decimal strings, largest first.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gzeta.hpp"
#include "liechar.hpp"
#include "report.hpp"
#include "tiltchar.hpp"

namespace lietilt {

using Json = nlohmann::ordered_json;

inline Json entries_json(const Decomposition& d) {
    Json e = Json::object();
    for (auto [m, c] : d.entries) e[std::to_string(m)] = c;
    return e;
}

inline Json character_json(const SymCharacter& c) {
    Json e = Json::object();
    for (auto it = c.half().rbegin(); it != c.half().rend(); ++it) e[std::to_string(it->first)] = it->second;
    return e;
}

inline Json decomposition_json(std::string_view kind, const Decomposition& d, std::string_view provenance) {
    Json j;
    j["kind"] = kind;
    j["r"] = d.degree;
    j["p"] = d.p.value();
    j["basis"] = to_string(d.basis);
    j["entries"] = entries_json(d);
    j["provenance"] = provenance;
    return j;
}

inline Json tensor_json(int r, PrimeChar p) {
    return decomposition_json("decompose-tensor", tensor_power_decomp(r, p), "tensor-power-tilting-decomposition");
}

inline Json lie_report_json(std::string_view kind, const LieDecompReport& rep) {
    Json j;
    j["kind"] = kind;
    j["r"] = rep.r;
    j["p"] = rep.p.value();
    j["basis"] = to_string(rep.decomposition.basis);
    j["entries"] = entries_json(rep.decomposition);
    j["verdict"] = to_string(rep.verdict);
    j["dimension"] = rep.character.dimension();
    j["provenance"] = rep.r % rep.p.value() == 0 ? "lie-power-character-decomposition"
                                                 : "lie-power-summand-of-tensor-power";
    return j;
}

inline Json stohr_json(int r) {
    Json j;
    j["kind"] = "stohr";
    j["r"] = r;
    j["p"] = 2;
    j["basis"] = "tilting";
    Decomposition total{Basis::Tilting, r, PrimeChar{2}, {}};
    Json summands = Json::array();
    for (const auto& x : stohr_pairs(r)) {
        const Decomposition d = stohr_tilting_decomp(x);
        for (auto [m, c] : d.entries) total.entries[m] += x.mult * c;
        Json s;
        s["s"] = x.s;
        s["t"] = x.t;
        s["mult"] = x.mult;
        s["dimension"] = x.character.dimension();
        s["entries"] = entries_json(d);
        summands.push_back(std::move(s));
    }
    j["entries"] = entries_json(total);
    j["summands"] = std::move(summands);
    j["provenance"] = "stohr-decomposition-degree-one-terms";
    return j;
}

inline Json gzeta_json(int r, PrimeChar p) {
    const GZetaProfile prof = gzeta_profile(r, p);
    Json j;
    j["kind"] = "gzeta";
    j["r"] = r;
    j["p"] = p.value();
    j["dim"] = prof.dim;
    j["is_p_power"] = is_power_of(r, p.value());
    j["coeffs"] = prof.coeffs;
    Json e = Json::object();
    for (int v = 1; v <= r; ++v) e[std::to_string(r - 2 * v)] = prof.nonzero[static_cast<std::size_t>(v - 1)] ? 1 : 0;
    j["entries"] = std::move(e);
    j["provenance"] = "gzeta-coefficient-sequence";
    return j;
}

inline Json theorem_b_json(int r, PrimeChar p) {
    const bool pred = theorem_b_predicate(r, p);
    Json j;
    j["kind"] = "theorem-b";
    j["r"] = r;
    j["p"] = p.value();
    j["gzeta_dim"] = r % p.value() == 0 ? Json(gzeta_dim(r, p)) : Json(nullptr);
    j["closed_form"] = theorem_b_closed_form(r, p);
    j["entries"] = Json{{std::to_string(r - 2), pred ? 1 : 0}};
    j["verdict"] = pred ? "summand" : "not-summand";
    j["provenance"] = r % p.value() == 0 ? "gzeta-dimension" : "p-does-not-divide-r";
    return j;
}

inline bool all_certified(const std::vector<TheoremARow>& rows) {
    for (const auto& row : rows)
        if (!row.certified) return false;
    return true;
}

inline Json theorem_a_json(int r, const std::vector<TheoremARow>& rows) {
    Json j;
    j["kind"] = "theorem-a";
    j["r"] = r;
    j["p"] = 2;
    Json e = Json::object();
    Json rs = Json::array();
    for (const auto& row : rows) {
        e[std::to_string(weight_of(row.lambda))] = row.computed ? 1 : 0;
        Json o;
        o["lambda"] = {row.lambda.first, row.lambda.second};
        o["expected"] = row.expected;
        o["computed"] = row.computed;
        o["evidence"] = to_string(row.evidence);
        o["certified"] = row.certified;
        o["lower_bound"] = row.lower_bound;
        rs.push_back(std::move(o));
    }
    j["entries"] = std::move(e);
    j["rows"] = std::move(rs);
    j["verdict"] = all_certified(rows) ? "certified" : "failed";
    j["provenance"] = "zero-weight-space/gzeta-predicate/stohr-summand";
    return j;
}

inline Json theorem_c_json(int r, PrimeChar p, const std::vector<TheoremCRow>& rows) {
    Json j;
    j["kind"] = "theorem-c";
    j["r"] = r;
    j["p"] = p.value();
    j["clause"] = rows.empty() ? "" : to_string(rows.front().clause);
    Json e = Json::object();
    Json rs = Json::array();
    for (const auto& row : rows) {
        e[std::to_string(weight_of(row.lambda))] = row.claimed ? 1 : 0;
        Json o;
        o["lambda"] = {row.lambda.first, row.lambda.second};
        o["claimed"] = row.claimed;
        o["char_consistent"] = row.char_consistent;
        o["status"] = TheoremCRow::status;
        rs.push_back(std::move(o));
    }
    j["entries"] = std::move(e);
    j["rows"] = std::move(rs);
    j["verdict"] = TheoremCRow::status;
    j["provenance"] = "necessary-condition-only";
    return j;
}

inline void write_entries_csv(std::ostream& os, const Json& j) {
    os << "weight,multiplicity\n";
    for (const auto& [k, v] : j.at("entries").items()) os << k << ',' << v.get<std::int64_t>() << '\n';
}

inline void write_theorem_a_csv(std::ostream& os, const std::vector<TheoremARow>& rows) {
    os << "lambda1,lambda2,expected,evidence,certified\n";
    for (const auto& row : rows)
        os << row.lambda.first << ',' << row.lambda.second << ',' << (row.expected ? "true" : "false") << ','
           << to_string(row.evidence) << ',' << (row.certified ? "true" : "false") << '\n';
}

inline void write_theorem_c_csv(std::ostream& os, const std::vector<TheoremCRow>& rows) {
    os << "lambda1,lambda2,expected,evidence,certified\n";
    for (const auto& row : rows)
        os << row.lambda.first << ',' << row.lambda.second << ',' << (row.claimed ? "true" : "false") << ','
           << (row.char_consistent ? "char-consistent" : "char-inconsistent") << ",false\n";
}

}  // namespace lietilt
