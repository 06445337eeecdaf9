#pragma once

#include "rospave/constructions.hpp"
#include "rospave/fragmentation.hpp"
#include "rospave/free_sets.hpp"
#include "rospave/index_set.hpp"
#include "rospave/matrix.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rospave {

// Accepts the JSON triplet document {"n": int, "entries": [[row, col,
// "value"], ...]} or dense CSV (n lines of n comma-separated rationals; a
// document whose first non-space character is not '{' is treated as CSV).
NonnegativeMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const NonnegativeMatrix& m);

// {"n": int, "blocks": [[int, ...], ...]}. A document carrying a
// "partition" object (as the pave command emits) is unwrapped first, so
// pave output can be fed back directly.
IndexPartition parse_partition(std::string_view text);
std::string serialize_partition(const IndexPartition& p);

// {"n": int, "set": [int, ...]}
IndexSet parse_index_set(std::string_view text);
std::string serialize_index_set(const IndexSet& s);

// {"n": int, "f": [int, ...]} with optional "finite_to_one_bound".
FixedPointFreeMap parse_map(std::string_view text);
std::string serialize_map(const FixedPointFreeMap& f);

// {"n": int, "sets": [[int, ...], ...]}
SetFamily parse_family(std::string_view text);
std::string serialize_family(const SetFamily& f);

// {"endpoints": [int, ...]}
IntervalPartition parse_intervals(std::string_view text);
std::string serialize_intervals(const IntervalPartition& p);

// Same shape as a partition document but without the coverage requirement:
// a bare list of disjoint sets, as the blocks command emits.
std::pair<std::size_t, std::vector<IndexSet>> parse_block_list(std::string_view text);
std::string serialize_block_list(std::size_t ambient, const std::vector<IndexSet>& blocks);

// {"epsilon": str, "set": [...], "residuals": [[k, str], ...],
//  "verdict": "fragmented" | {"violated_at": k}}
std::string serialize_certificate(const FragmentationCertificate& c);

} // namespace rospave
