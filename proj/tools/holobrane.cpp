#include <iostream>

#include "holo/cli/commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return holo::cli::run(args, std::cout, std::cerr);
}
