#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glho::selfcheck {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  ///< first failure, or a one-line summary when passing
};

/// Runs every acceptance criterion with fixed seeds. Deterministic.
std::vector<CriterionResult> run_all();

/// Prints one pass/fail line per criterion; returns true iff all pass.
bool report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace glho::selfcheck
