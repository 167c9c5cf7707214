#pragma once

#include <string>
#include <vector>

namespace tsdq::cli {

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 mathematical failure, 2 usage or input error
    std::string out;
    std::string err;
};

// args excludes the program name.
RunResult run_command(const std::vector<std::string>& args);

}  // namespace tsdq::cli
