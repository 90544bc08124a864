#ifndef ORIENTLAB_REPORT_HPP
#define ORIENTLAB_REPORT_HPP

#include <string>
#include <vector>

#include "orientlab/constructions.hpp"

namespace orientlab {

struct ReportEntry {
    std::string id;
    std::string family;
    int parent_order = 0;
    int parent_diameter = 0;
    std::vector<int> multiplicities;
    int claimed_diameter = 0;
    bool claim_exact = true;
    int computed_diameter = -1;  // -1 when not strong
    bool strong = false;
    int min_cycle = -1;
    int cycle_bound = 0;
    std::string class_claim;
    std::string class_verdict;  // from the classification window + this witness
    bool match = false;
};

ReportEntry verify_construction(const ConstructionResult& r);

struct Report {
    std::vector<ReportEntry> entries;
    int mismatches = 0;
    std::string to_json() const;  // schema "orientlab-report/1"
    std::string to_text() const;
};

// Builds and checks every construction in the verification table.
Report verify_all();

}  // namespace orientlab

#endif
