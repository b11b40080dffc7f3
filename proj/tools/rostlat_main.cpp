#include <iostream>
#include <string>
#include <vector>

#include "rostlat/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const rostlat::CommandResult result = rostlat::run_command(args);
    std::cout << result.output;
    return result.exit_code;
}
