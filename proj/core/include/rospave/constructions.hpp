#pragma once

#include "rospave/fragmentation.hpp"
#include "rospave/free_sets.hpp"
#include "rospave/index_set.hpp"
#include "rospave/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rospave {

// A list of nonempty index sets over a common ambient range.
class SetFamily {
public:
    SetFamily(std::size_t ambient, std::vector<IndexSet> sets);

    std::size_t ambient_dim() const { return n_; }
    std::size_t size() const { return sets_.size(); }
    const std::vector<IndexSet>& sets() const { return sets_; }

private:
    std::size_t n_ = 0;
    std::vector<IndexSet> sets_;
};

// Partition of [0, n) into consecutive intervals, stored as the strictly
// increasing endpoint sequence 0 = e_0 < e_1 < ... < e_m = n. Interval r is
// [e_r, e_{r+1}).
class IntervalPartition {
public:
    explicit IntervalPartition(std::vector<std::size_t> endpoints);

    std::size_t ambient_dim() const { return endpoints_.back(); }
    std::size_t interval_count() const { return endpoints_.size() - 1; }
    std::span<const std::size_t> endpoints() const { return endpoints_; }
    std::size_t interval_of(std::size_t index) const;
    std::size_t max_interval_length() const;

private:
    std::vector<std::size_t> endpoints_;
};

// A set C with |F intersect C| >= t and |F minus C| >= t for every family
// member, or nullopt once exhaustive backtracking rules every C out.
// Elements are decided in ascending order, in before out, with unit
// propagation on members whose undecided elements exactly match one side's
// remaining deficit.
std::optional<IndexSet> find_splitter(const SetFamily& family, std::size_t t);

// m pairwise disjoint blocks, each meeting every family member in >= t
// points, with >= t points of every member left outside all of them.
// Round r searches the ambient left by earlier rounds for a set holding
// >= t points of every member inside and >= (m-r)*t points outside, which
// reserves enough for the remaining rounds; nullopt when a round's
// exhaustive search fails.
std::optional<std::vector<IndexSet>> build_disjoint_blocks(const SetFamily& family, std::size_t m,
                                                           std::size_t t);

// f(k) = r for k in B_r minus {r}, successor (with wrap) elsewhere. Sends
// every family member onto [0, m). Requires each B_r minus {r} to meet
// every member.
FixedPointFreeMap covering_map(const SetFamily& family, const std::vector<IndexSet>& blocks);

// True when all but at most `exceptions` intervals of `outer` contain a
// whole interval of `inner`.
bool dominates(const IntervalPartition& outer, const IntervalPartition& inner,
               std::size_t exceptions = 0);

// Even iterates f^0(0), f^2(0), f^4(0), ... while they stay below n, for a
// strictly increasing f with f(0) >= 1 given by its value table (values may
// exceed n). Consecutive members k < k' satisfy f(k) < k'.
IndexSet endpoint_set(const std::vector<std::size_t>& increasing_values);

// Per-column cutoffs: least K with m(k, j) <= eps/2^(j+2) for every k >= K.
std::vector<std::size_t> c0_column_cutoffs(const NonnegativeMatrix& m, const Rational& epsilon);
// Per-row cutoffs: least G with the row-k tail sum over columns >= G at
// most eps/2.
std::vector<std::size_t> c0_tail_cutoffs(const NonnegativeMatrix& m, const Rational& epsilon);

struct C0FragmentResult {
    IndexSet set;
    FragmentationCertificate certificate; // always fragmented at epsilon
};

// Greedy single fragmenting set for a zero-diagonal matrix whose columns
// decay: a_0 = 0, each next member one past the max of the current member's
// column and tail cutoffs. The two eps/2 half-budgets (columns below, tail
// above) make the whole set epsilon-fragmenting.
C0FragmentResult c0_fragment_set(const NonnegativeMatrix& m, const Rational& epsilon);

struct FiniteToOneWitness {
    FixedPointFreeMap map;         // declared preimage bound = max interval length + 2
    std::size_t preimage_bound;    // the declared bound, for convenience
    std::vector<bool> single_piece_hit; // per member: some interval holds i and g(i), both in it
};

// f agrees with g wherever i and g(i) share an interval, and falls back to
// the successor (wrapping n-1 to 0) elsewhere. The interval discipline caps
// every preimage.
FiniteToOneWitness finite_to_one_witness(const SetFamily& family, const FixedPointFreeMap& g,
                                         const IntervalPartition& intervals);

} // namespace rospave
