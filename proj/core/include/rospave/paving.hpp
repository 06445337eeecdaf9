#pragma once

#include "rospave/fragmentation.hpp"
#include "rospave/index_set.hpp"
#include "rospave/matrix.hpp"

namespace rospave {

// Least positive integer l with 2/l < epsilon. Throws NonPositiveEpsilon;
// throws std::overflow_error if l does not fit in 64 bits.
unsigned long long paving_arity(const Rational& epsilon);

// Guaranteed block count for pave: 1 when epsilon >= 1, else paving_arity
// squared. The greedy paver never exceeds this.
unsigned long long block_budget(const Rational& epsilon);

// Greedy coloring with l colors, indices ascending; each index takes the
// least color whose backward sum in its row stays <= 1/l. Requires a
// strictly lower-triangular matrix (entries only where column < row) with
// row sums <= 1. At most l blocks; every block's within-block backward sums
// are <= 1/l.
IndexPartition pave_lower_triangular(const NonnegativeMatrix& m, std::size_t l);

// Same bound for forward sums, indices processed in decreasing order.
// Requires strictly upper-triangular input with row sums <= 1.
IndexPartition pave_upper_triangular(const NonnegativeMatrix& m, std::size_t l);

// Full paving: split off the diagonal into scaled triangular halves, pave
// each with paving_arity(epsilon) colors, intersect the two partitions.
// Every output block fragments m at threshold epsilon * norm_inf(m); block
// count <= block_budget(epsilon).
IndexPartition pave(const NonnegativeMatrix& m, const Rational& epsilon);

// Same, with a caller-chosen color count per half. l must satisfy
// 2/l < epsilon (else PreconditionViolated), which keeps every intersection
// block under the epsilon * norm_inf(m) threshold; block count <= l*l.
IndexPartition pave_with_arity(const NonnegativeMatrix& m, const Rational& epsilon, std::size_t l);

} // namespace rospave
