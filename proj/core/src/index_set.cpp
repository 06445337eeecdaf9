#include "rospave/index_set.hpp"

#include "rospave/errors.hpp"

#include <algorithm>
#include <string>

namespace rospave {

IndexSet::IndexSet(std::size_t ambient, std::vector<std::size_t> members)
    : n_(ambient), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] >= n_) {
            throw IndexOutOfRange("index " + std::to_string(members_[i]) +
                                  " outside ambient range [0, " + std::to_string(n_) + ")");
        }
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw ParseError("duplicate index " + std::to_string(members_[i]) + " in set");
        }
    }
}

IndexSet IndexSet::full(std::size_t ambient) {
    IndexSet s(ambient);
    s.members_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.members_[i] = i;
    }
    return s;
}

bool IndexSet::contains(std::size_t index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

IndexPartition::IndexPartition(std::size_t ambient, std::vector<IndexSet> blocks)
    : n_(ambient), blocks_(std::move(blocks)), block_of_(ambient, 0) {
    std::vector<char> seen(n_, 0);
    std::size_t covered = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].ambient_dim() != n_) {
            throw DimensionMismatch("partition block has ambient " +
                                    std::to_string(blocks_[b].ambient_dim()) + ", expected " +
                                    std::to_string(n_));
        }
        if (blocks_[b].empty()) {
            throw PreconditionViolated("partition contains an empty block");
        }
        for (std::size_t i : blocks_[b].members()) {
            if (seen[i]) {
                throw PreconditionViolated("partition blocks overlap at index " + std::to_string(i));
            }
            seen[i] = 1;
            block_of_[i] = b;
            ++covered;
        }
    }
    if (covered != n_) {
        throw PreconditionViolated("partition covers " + std::to_string(covered) + " of " +
                                   std::to_string(n_) + " indices");
    }
}

std::size_t IndexPartition::block_of(std::size_t index) const {
    if (index >= n_) {
        throw IndexOutOfRange("index " + std::to_string(index) + " outside ambient range [0, " +
                              std::to_string(n_) + ")");
    }
    return block_of_[index];
}

} // namespace rospave
