#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mpa {

/// Desk runs the full acceptance ranges; Smoke shrinks every range for quick CLI checks.
enum class VerifyScale { Smoke, Desk };

struct VerifyOptions {
    std::vector<int> criteria;  // empty means 1..9
    VerifyScale scale = VerifyScale::Desk;
    std::uint64_t seed = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    double seconds = 0;
    bool passed() const { return failures == 0 && checks > 0; }
};

/// Short names of criteria 1..9, e.g. "worked-examples".
const std::vector<std::string>& criterion_names();

/// Accepts "3" or "orbit-basis"; throws InvalidArgument otherwise.
int criterion_id(const std::string& name);

CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

}  // namespace mpa
