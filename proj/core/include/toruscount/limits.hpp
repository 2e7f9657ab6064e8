#pragma once

#include <cstdint>

namespace toruscount {

/// Enumeration caps shared across the solver, the polygon algebra and the
/// counting stage.  Exceeding a cap raises CapError naming the bound; caps
/// never truncate silently.
struct Limits {
    /// Largest partition block handled by the unit-equation solver.
    int solver_block_cap = 6;
    /// Largest support enumerated by the partition generator.
    int partition_support_cap = 10;
    /// Longest polygon accepted by the primitivity subset search.
    int primitivity_length_cap = 16;
    /// Inclusion-exclusion subset budget in the counting stage.
    std::uint64_t subset_budget = 1u << 20;
    /// Brute-force oracle evaluation budget.
    std::uint64_t oracle_budget = 10'000'000;
};

}  // namespace toruscount
