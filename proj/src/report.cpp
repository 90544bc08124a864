#include "orientlab/report.hpp"

#include <json.hpp>
#include <sstream>

#include "orientlab/analysis.hpp"

namespace orientlab {

ReportEntry verify_construction(const ConstructionResult& r) {
    ReportEntry e;
    e.id = r.id;
    e.family = r.family;
    e.parent_order = r.parent.n;
    e.parent_diameter = metrics(r.parent).diameter;
    e.multiplicities = r.spec.s;
    e.claimed_diameter = r.claimed_diameter;
    e.claim_exact = r.claim_exact;
    e.cycle_bound = r.cycle_bound;
    e.class_claim = r.claimed_class;

    DirectedMetrics dm = directed_metrics(r.orient);
    e.strong = dm.strong;
    if (dm.strong) {
        e.computed_diameter = *dm.diameter;
        e.min_cycle = min_cycle_per_vertex(r.orient);
    }
    bool diameter_ok = dm.strong && (r.claim_exact ? e.computed_diameter == r.claimed_diameter
                                                   : e.computed_diameter <= r.claimed_diameter);
    e.match = diameter_ok && e.min_cycle >= 0 && e.min_cycle <= r.cycle_bound;

    if (dm.strong) {
        ClassVerdict v = classify(r.parent, r.spec.s, &r.orient, r.id);
        e.class_verdict = v.describe();
    }
    return e;
}

Report verify_all() {
    Report rep;
    for (const auto& id : verification_ids()) {
        rep.entries.push_back(verify_construction(build_construction(id)));
        if (!rep.entries.back().match) ++rep.mismatches;
    }
    return rep;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["schema"] = "orientlab-report/1";
    j["mismatches"] = mismatches;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["id"] = e.id;
        je["family"] = e.family;
        je["parent_order"] = e.parent_order;
        je["parent_diameter"] = e.parent_diameter;
        je["multiplicities"] = e.multiplicities;
        je["claimed_diameter"] = e.claimed_diameter;
        je["claim_exact"] = e.claim_exact;
        je["computed_diameter"] = e.computed_diameter;
        je["strong"] = e.strong;
        je["min_cycle"] = e.min_cycle;
        je["cycle_bound"] = e.cycle_bound;
        je["class_claim"] = e.class_claim;
        je["class_verdict"] = e.class_verdict;
        je["match"] = e.match;
        j["entries"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << (e.match ? "ok   " : "FAIL ") << e.id << ": claimed " << e.claimed_diameter
            << (e.claim_exact ? "" : " (upper bound)") << ", computed ";
        if (e.strong)
            out << e.computed_diameter;
        else
            out << "unreachable pairs";
        out << ", min cycle " << e.min_cycle << " (bound " << e.cycle_bound << "), class "
            << e.class_verdict << "\n";
    }
    out << entries.size() << " constructions, " << mismatches << " mismatches\n";
    return out.str();
}

}  // namespace orientlab
