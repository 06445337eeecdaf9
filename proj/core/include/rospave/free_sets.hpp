#pragma once

#include "rospave/index_set.hpp"
#include "rospave/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rospave {

// Total map on [0, n) with f(i) != i everywhere. May carry a declared bound
// on preimage sizes; the constructor checks it against the actual preimages.
class FixedPointFreeMap {
public:
    explicit FixedPointFreeMap(std::vector<std::size_t> values,
                               std::optional<std::size_t> finite_to_one_bound = std::nullopt);

    std::size_t dim() const { return values_.size(); }
    std::size_t operator()(std::size_t i) const;
    std::span<const std::size_t> values() const { return values_; }
    const std::optional<std::size_t>& finite_to_one_bound() const { return bound_; }

    friend bool operator==(const FixedPointFreeMap&, const FixedPointFreeMap&) = default;

private:
    std::vector<std::size_t> values_;
    std::optional<std::size_t> bound_;
};

// The 0/1 matrix with a single 1 per row, at (k, f(k)). Zero diagonal, row
// sums exactly 1, column j holding |f^-1(j)| ones.
NonnegativeMatrix matrix_of_map(const FixedPointFreeMap& f);

// True iff no member of the set maps back into the set.
bool is_free(const FixedPointFreeMap& f, const IndexSet& set);

// Partition of [0, n) into at most 3 blocks, each free for f. Blocks are
// the color classes of the undirected conflict graph {i, f(i)}: trees are
// 2-colored by depth parity from their cycle, even cycles alternate, odd
// cycles spend the third color on their least index. The count matches the
// chromatic number, so it is minimal.
IndexPartition pave_free(const FixedPointFreeMap& f);

} // namespace rospave
