#pragma once

#include "rospave/free_sets.hpp"
#include "rospave/index_set.hpp"
#include "rospave/matrix.hpp"

#include <cstddef>

namespace rospave {

inline constexpr std::size_t kDefaultOracleLimit = 12;

// Exhaustive ground truth: the fewest blocks any set partition of [0, n)
// needs so that every block epsilon-fragments the matrix (epsilon here is
// absolute, not scaled by the norm).
struct OptimalPaving {
    std::size_t min_blocks;
    IndexPartition witness; // lexicographically least optimal assignment
    Rational epsilon;       // the absolute threshold that was enforced
};

// Enumerates set partitions as restricted growth strings, deepening the
// allowed block count until a feasible partition appears; subtrees die as
// soon as any residual exceeds epsilon_abs. Throws InstanceTooLarge past
// the limit. n = 0 yields 0 blocks.
OptimalPaving min_paving_number(const NonnegativeMatrix& m, const Rational& epsilon_abs,
                                std::size_t limit = kDefaultOracleLimit);

struct OptimalFreePartition {
    std::size_t min_blocks;
    IndexPartition witness;
    bool exhaustive; // false when the structural route answered instead
};

// Fewest blocks each free for f. Exhaustive search up to the limit; past it
// the answer comes from the conflict-graph structure (2 when no odd cycle
// exists, else 3), which is exact, so no error is raised.
OptimalFreePartition min_free_partition_number(const FixedPointFreeMap& f,
                                               std::size_t limit = kDefaultOracleLimit);

} // namespace rospave
