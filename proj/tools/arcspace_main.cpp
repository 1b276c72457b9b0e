// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include <arcspace/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return arcspace::run_cli(args, std::cout, std::cerr);
}
