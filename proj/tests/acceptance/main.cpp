#include "mpa/verify.hpp"

#include <cstdio>
#include <string>

// Runs the acceptance battery at desk scale; one line per criterion.
int main(int argc, char** argv) {
    mpa::VerifyOptions options;
    for (int i = 1; i < argc; ++i) options.criteria.push_back(mpa::criterion_id(argv[i]));
    int failed = 0;
    for (const auto& r : mpa::run_acceptance(options)) {
        std::printf("criterion %d %-17s %s  checks=%llu failures=%llu  %.2fs\n", r.id, r.name.c_str(), r.passed() ? "PASS" : "FAIL",
                    static_cast<unsigned long long>(r.checks), static_cast<unsigned long long>(r.failures), r.seconds);
        if (!r.passed()) {
            std::printf("    first failure: %s\n", r.first_failure.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
