#include <iostream>
#include <string>
#include <vector>

#include "qforms/cli.hpp"

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qforms::cli::run(args, std::cout, std::cerr);
}
