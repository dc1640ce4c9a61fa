#include <cstdio>

#include "dtop/acceptance.hpp"

int main() {
    auto results = dtop::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::printf("%2d  %s  %-34s  %s\n", r.index, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        std::fprintf(stderr, "%2d  %8.2fs  %s\n", r.index, r.seconds, r.name.c_str());
    }
    std::printf("%s\n", all ? "all criteria passed" : "FAILURES present");
    return all ? 0 : 1;
}
