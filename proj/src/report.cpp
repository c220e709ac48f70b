#include "catcoh/report.hpp"

namespace catcoh {

namespace {

Json integer(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace

Json invariants_json(const GradedInvariants& g) {
    Json out = Json::object();
    for (std::size_t n = 0; n < g.degrees.size(); ++n) {
        Json torsion = Json::array();
        for (const auto& t : g.degrees[n].torsion) torsion.push_back(integer(t));
        out["H" + std::to_string(n)] = Json{{"rank", g.degrees[n].rank}, {"torsion", torsion}};
    }
    return out;
}

Json report_json(const TheoremReport& R, bool timing) {
    if (R.empty()) return Json::object();
    Json out;
    out["theorem"] = R.theorem;
    out["verdict"] = R.verdict;
    if (!R.note.empty()) out["note"] = R.note;
    out["window"] = R.window;
    Json inputs = Json::object();
    for (const auto& [k, v] : R.inputs) inputs[k] = v;
    out["inputs"] = inputs;
    Json sides = Json::object();
    for (const auto& [k, v] : R.sides) {
        Json side = invariants_json(v);
        side["ring"] = v.ring.to_string();
        sides[k] = side;
    }
    out["sides"] = sides;
    Json checks = Json::array();
    for (const auto& c : R.checks) {
        Json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(j);
    }
    out["checks"] = checks;
    if (!R.tables.empty()) {
        Json tables = Json::object();
        for (const auto& [name, table] : R.tables) {
            Json t = Json::object();
            for (const auto& [pq, dim] : table) t[std::to_string(pq.first) + "," + std::to_string(pq.second)] = dim;
            tables[name] = t;
        }
        out["tables"] = tables;
    }
    if (!R.hypotheses.empty()) {
        Json subs = Json::array();
        for (const auto& [label, sub] : R.hypotheses) {
            Json s = report_json(sub, timing);
            s["label"] = label;
            subs.push_back(s);
        }
        out["subreports"] = subs;
    }
    if (timing) out["wall_ms"] = R.wall_ms;
    return out;
}

std::string serialize_invariants(const GradedInvariants& g) { return invariants_json(g).dump(); }

std::string serialize_report(const TheoremReport& report, bool timing, int indent) {
    return report_json(report, timing).dump(indent);
}

}  // namespace catcoh
