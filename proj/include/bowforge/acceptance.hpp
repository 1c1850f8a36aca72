#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bowforge {

struct AcceptanceOptions {
    std::vector<std::string> ids; // empty runs every check
    int depth = 4;
    std::uint64_t seed = 20240611;
    int random_cases = 1000;
};

struct AcceptanceResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

std::vector<std::string> acceptance_ids();

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& opts);

/* "AC-k PASS|FAIL (t s) title: detail" */
std::string format_result(const AcceptanceResult& r);

} // namespace bowforge
