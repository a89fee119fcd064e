#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclenum {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Cross-checks every engine against the brute-force oracle and the
/// bijection for words up to `max_word_len` letters (1..7). Used by the CLI
/// `verify` command.
std::vector<CheckResult> run_self_check(int max_word_len);

}  // namespace cyclenum
