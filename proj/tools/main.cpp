#include "osctail/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return osctail::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
