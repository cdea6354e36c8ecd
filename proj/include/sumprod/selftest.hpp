#pragma once

#include <string>
#include <vector>

namespace sumprod::selftest {

enum class Level { Quick, Full };

struct SuiteResult {
    std::string name;
    unsigned long long cases = 0;
    unsigned long long failures = 0;
    double ms = 0.0;
    std::string first_failure;  // empty when clean

    bool passed() const { return failures == 0; }
};

/// Runs the property suites (all of them, or the named subset) and returns
/// one result per suite. Every suite is deterministic; randomized suites use
/// fixed seeds.
std::vector<SuiteResult> run(Level level);
std::vector<SuiteResult> run(Level level, const std::vector<std::string>& only);

std::vector<std::string> suite_names();
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace sumprod::selftest
