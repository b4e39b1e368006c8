#pragma once

#include <string>
#include <vector>

#include "gptb/config.hpp"

namespace gptb {

/* One verification criterion: a named, self-contained check with its own
 * tolerances pinned in code. `details` is a short human-readable summary of
 * what was measured. */
struct CriterionReport {
    std::string id;
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

/// All eight criteria, in order. The config's parallelism and seed are
/// honored; arithmetic modes are fixed per criterion (exact wherever the
/// data is rational).
std::vector<CriterionReport> run_acceptance(const Config& cfg);

/// A single criterion by 1-based index.
CriterionReport run_criterion(int index, const Config& cfg);

}  // namespace gptb
