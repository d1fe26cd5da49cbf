#pragma once

#include <string>
#include <vector>

namespace rla {

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool ok = false;        // the mathematical check
    bool skipped = false;
    double seconds = 0;
    double limit = 0;       // wall-clock budget in seconds
    std::string detail;
    bool pass() const { return skipped || (ok && seconds <= limit); }
};

struct AcceptanceOptions
{
    bool quick = false;     // skip the slow criteria (5, 6, 9)
    std::string tool_path;  // CLI binary used for the determinism check
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);
std::string format_result(const CriterionResult& r);

}  // namespace rla
