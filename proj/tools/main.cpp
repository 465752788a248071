#include "fanofib/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = fanofib::cli::run(args);
    if (!result.output.empty())
        std::fputs(result.output.c_str(), stdout);
    if (!result.error.empty())
        std::fputs(result.error.c_str(), stderr);
    return result.exit_code;
}
