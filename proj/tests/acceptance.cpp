// Acceptance gate: one PASS/FAIL line per criterion, every check listed.
#include "osctail/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"osctail acceptance criteria"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "Run one criterion (default: all)")
        ->check(CLI::Range(1, osctail::acceptance::criterion_count));
    CLI11_PARSE(app, argc, argv);

    if (criterion == 0)
        return osctail::acceptance::run_all(std::cout, true) ? 0 : 1;
    const auto result = osctail::acceptance::run_criterion(criterion);
    osctail::acceptance::print(std::cout, result, true);
    return result.passed() ? 0 : 1;
}
