#pragma once

#include <string>
#include <vector>

namespace corona {

// one comparison between a coefficient as printed in the upstream formula
// source and the same coefficient produced by the derived templates, judged
// against the numeric eigensolver on a pinned instance
struct reconciliation_entry {
    std::string source_id;   // identifier of the upstream statement, emitted as data
    std::string item;        // which piece of the statement is compared
    std::string instance;    // operation/kind/graphs the adjudication ran on
    std::string printed;     // coefficient as printed
    std::string derived;     // coefficient the templates produce
    std::string printed_value;  // exact value of the printed coefficient on the instance
    std::string derived_value;  // exact value of the derived coefficient
    bool printed_matches_derived = false;
    // "confirms_both" when printed == derived and the eigensolver agrees;
    // "confirms_derived" when they differ and the eigensolver sides with the
    // templates; "inconclusive" otherwise (never expected)
    std::string oracle_verdict;
    double derived_deviation = 0.0;  // derived roots vs eigensolver, max abs
    double printed_deviation = -1.0; // printed roots vs eigensolver; -1 when not comparable
    std::string note;
};

// run every pinned comparison; throws only on internal inconsistency
std::vector<reconciliation_entry> run_reconciliation();

} // namespace corona
