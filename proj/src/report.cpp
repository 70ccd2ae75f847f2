#include "resq/report.hpp"

#include "resq/parse.hpp"

namespace resq {

Json to_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.exponent();
}

Json to_json(const Residues& residues) {
    Json out = Json::array();
    for (std::uint64_t r : residues) out.push_back(r);
    return out;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ModMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const CongruenceReport& r) {
    Json out;
    out["label"] = r.label;
    out["q"] = r.q;
    out["modulus_power"] = r.modulus_power;
    if (r.k) out["k"] = to_json(*r.k);
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
    out["holds"] = r.holds;
    out["preconditions_met"] = r.preconditions_met;
    out["reason"] = r.reason;
    return out;
}

Json to_json(const ModAnalysis& a) {
    Json out;
    out["q"] = a.q;
    out["f"] = to_string(a.f);
    out["g"] = to_string(a.g);
    out["n"] = a.n;
    out["m"] = a.m;
    out["roots_f"] = to_json(a.roots_f);
    out["roots_g"] = to_json(a.roots_g);
    out["common_roots"] = to_json(a.common_roots);
    out["ell"] = a.ell;
    out["rank_p"] = a.rank_p ? Json(*a.rank_p) : Json(nullptr);
    out["resultant"] = to_json(a.resultant);
    out["v_q"] = to_json(a.v_q);
    out["bound_theorem1"] = a.bound_theorem1;
    out["bound_corollary1"] = a.bound_corollary1 ? Json(*a.bound_corollary1) : Json(nullptr);
    out["ell_vs_rank"] = a.ell_vs_rank ? Json(*a.ell_vs_rank) : Json(nullptr);
    return out;
}

Json make_document(const std::string& command, Json inputs, Json results) {
    Json doc;
    doc["command"] = command;
    doc["version"] = kToolVersion;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    return doc;
}

}  // namespace resq
