#include <iostream>
#include <string>
#include <vector>

#include "kreinccr/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return kreinccr::cli::run(args, std::cout, std::cerr);
}
