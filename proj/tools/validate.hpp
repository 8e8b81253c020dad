#pragma once

#include <string>

namespace lmgmqc {

struct ValidateArgs {
    int max_n = 8;
    int workers = 1;
    std::string out_dir;
};

/// Runs the oracle and invariant battery; writes validate.csv and
/// returns the number of failed checks.
int run_validate(const ValidateArgs& args);

}  // namespace lmgmqc
