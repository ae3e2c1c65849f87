#ifndef CURVES_PAPERCHECK_HPP
#define CURVES_PAPERCHECK_HPP

#include <string>
#include <vector>

namespace curves {

/// Outcome of one acceptance check.  `id` is the stable anchor used by the
/// CLI `--only` filter; `detail` summarizes the verified values, or carries
/// the failure message.
struct CheckResult {
    std::string id;
    std::string title;
    bool pass;
    std::string detail;
};

struct CheckOptions {
    std::string only; // substring filter on the check id; empty = all
    bool slow = false; // widen spot checks to their full sweeps
};

/// Runs the acceptance checks (filtered by options) in a fixed order;
/// failures are reported in the results, never thrown.
std::vector<CheckResult> run_paper_checks(const CheckOptions& options = {});

} // namespace curves

#endif
