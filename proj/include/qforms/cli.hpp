#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qforms/represent.hpp"

namespace qforms::cli {

/// Exit codes of the qforms tool.
enum ExitCode : int
{
    exit_ok = 0,
    exit_validation = 1,
    exit_consistency = 2,
    exit_resource = 3,
};

struct Mismatch
{
    std::int64_t n, p, q;
    bool decision;
    std::optional<Witness> brute_force;
};

struct VerifyReport
{
    std::int64_t n_max = 0;
    std::int64_t p_max = 0;
    std::int64_t pairs_tested = 0;
    std::int64_t representable = 0;
    std::vector<Mismatch> mismatches; ///< (n, p, q) order
};

/// decide_pq against brute_force_pq for every n <= n_max and distinct odd
/// primes p < q <= p_max not dividing n. Work is split over `jobs` threads;
/// the report does not depend on the split. inject_fault flips the first
/// decision, for exercising the harness.
VerifyReport verify_sweep(std::int64_t n_max, std::int64_t p_max, unsigned jobs, bool inject_fault = false);

/// Runs the tool on `args` (program name excluded) and returns the exit code.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace qforms::cli
