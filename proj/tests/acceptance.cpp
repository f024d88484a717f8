#include <cstdio>
#include <cstdlib>
#include <string>

#include "ratsign/verify.hpp"

int main(int argc, char** argv) {
    ratsign::VerifyOptions options;
    if (argc > 1) options.seed = std::stoull(argv[1]);
    int failures = 0;
    for (int id = 1; id <= ratsign::kCheckCount; ++id) {
        const auto r = ratsign::run_check(id, options);
        failures += !r.passed;
        std::printf("%s criterion %2d  %-38s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", ratsign::kCheckCount - failures, ratsign::kCheckCount);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
