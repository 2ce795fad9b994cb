#pragma once

#include <string>
#include <vector>

namespace susp {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Runs one `susp` command line (without the program name).
// Exit 0 on success, 1 when a predicate verb answers negatively, 2 on errors.
CliResult run_cli(const std::vector<std::string>& args);

// The worked-example regression run behind `susp verify-paper`: one
// "PASS name: detail" or "FAIL name: detail" line per check.
CliResult verify_paper();

}  // namespace susp
