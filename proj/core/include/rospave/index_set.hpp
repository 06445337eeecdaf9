#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rospave {

// A subset of the ambient index range [0, n), kept sorted ascending.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t ambient) : n_(ambient) {}
    // Sorts; rejects out-of-range indices and duplicates.
    IndexSet(std::size_t ambient, std::vector<std::size_t> members);

    static IndexSet full(std::size_t ambient);

    std::size_t ambient_dim() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::size_t index) const;
    std::span<const std::size_t> members() const { return members_; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> members_;
};

// An ordered list of disjoint nonempty blocks covering [0, n). The empty
// list is the (only) partition of the empty range.
class IndexPartition {
public:
    IndexPartition(std::size_t ambient, std::vector<IndexSet> blocks);

    std::size_t ambient_dim() const { return n_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<IndexSet>& blocks() const { return blocks_; }
    // Position in blocks() of the block holding index.
    std::size_t block_of(std::size_t index) const;

    friend bool operator==(const IndexPartition&, const IndexPartition&) = default;

private:
    std::size_t n_ = 0;
    std::vector<IndexSet> blocks_;
    std::vector<std::size_t> block_of_;
};

} // namespace rospave
