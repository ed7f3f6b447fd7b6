#ifndef OSCTAIL_ACCEPTANCE_HPP
#define OSCTAIL_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace osctail::acceptance {

inline constexpr int criterion_count = 7;

struct Check {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    /// Wall-clock budget; 0 means none.
    double budget_seconds = 0.0;

    bool passed() const;
};

/// Runs criterion 1..7. Throws DomainError for other ids.
CriterionResult run_criterion(int id);

/// One PASS/FAIL line; with verbose, one indented line per check beneath it.
void print(std::ostream& out, const CriterionResult& result, bool verbose);

/// Runs every criterion, printing as it goes. Returns true when all pass.
bool run_all(std::ostream& out, bool verbose);

} // namespace osctail::acceptance

#endif // OSCTAIL_ACCEPTANCE_HPP
