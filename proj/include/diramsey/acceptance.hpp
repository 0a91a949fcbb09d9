#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diramsey {

struct AcceptanceOptions {
    int jobs = 1;
    unsigned seed = 20170611;
    int sumner_max_n = 5;              // exhaustive hosts up to 2n-2 = 8
    int el_sahili_exhaustive_max_n = 4; // exhaustive hosts up to 3n-3 = 9
    int el_sahili_samples = 300;        // sampled 12-vertex hosts for n = 5
    bool verbose = false;
};

struct CriterionResult {
    int index;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<CriterionResult> run_acceptance_suite(const AcceptanceOptions& options,
                                                  std::ostream& log);

// one line per criterion; returns overall pass
bool print_acceptance_results(std::ostream& out, const std::vector<CriterionResult>& results);

} // namespace diramsey
