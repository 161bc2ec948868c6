#pragma once

#include "qnil/search.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qnil {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    std::string detail;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240601;
    /// Smaller sample counts and no exhaustive finite check; the thresholds stay the same.
    bool quick = false;
    SearchConfig cfg;
};

/// One line per criterion, e.g. "[PASS] 4 completion: ... (0.12 s, limit 5 s)".
std::string format_result(const CriterionResult& r);

/// Runs every acceptance criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace qnil
