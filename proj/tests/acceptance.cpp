// Acceptance gate: runs every check in the suite and prints one pass/fail
// line per criterion; exits 0 only if all pass.
#include <cstdio>

#include "curves/papercheck.hpp"

int main() {
    bool all_pass = true;
    int n = 0;
    for (const curves::CheckResult& r : curves::run_paper_checks()) {
        all_pass = all_pass && r.pass;
        std::printf("[%s] %2d. %-13s %s\n", r.pass ? "PASS" : "FAIL", ++n,
                    r.id.c_str(), r.title.c_str());
        if (!r.pass) std::printf("          %s\n", r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d criteria, %s\n", n, all_pass ? "all passed" : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
