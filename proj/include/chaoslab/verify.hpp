#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chaoslab {

enum class VerifyLevel { fast, full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The invariant batteries of every module, at two sizes. `fast` keeps
// n <= 1024 and reps <= 1e5 with correspondingly relaxed fit tolerances;
// `full` runs the shipped acceptance parameters.
std::vector<CheckResult> verify_suite(VerifyLevel level);

// One line per check ("PASS name (1.23s): detail"); returns true iff all
// checks pass.
bool print_verify_report(const std::vector<CheckResult>& results);

}  // namespace chaoslab
