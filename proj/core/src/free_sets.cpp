#include "rospave/free_sets.hpp"

#include "rospave/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rospave {

FixedPointFreeMap::FixedPointFreeMap(std::vector<std::size_t> values,
                                     std::optional<std::size_t> finite_to_one_bound)
    : values_(std::move(values)), bound_(finite_to_one_bound) {
    const std::size_t n = values_.size();
    std::vector<std::size_t> preimage_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (values_[i] >= n) {
            throw IndexOutOfRange("f(" + std::to_string(i) + ") = " + std::to_string(values_[i]) +
                                  " outside domain [0, " + std::to_string(n) + ")");
        }
        if (values_[i] == i) {
            throw PreconditionViolated("fixed point at " + std::to_string(i));
        }
        ++preimage_count[values_[i]];
    }
    if (bound_.has_value()) {
        for (std::size_t j = 0; j < n; ++j) {
            if (preimage_count[j] > *bound_) {
                throw PreconditionViolated("preimage of " + std::to_string(j) + " has size " +
                                           std::to_string(preimage_count[j]) +
                                           ", declared bound " + std::to_string(*bound_));
            }
        }
    }
}

std::size_t FixedPointFreeMap::operator()(std::size_t i) const {
    if (i >= values_.size()) {
        throw IndexOutOfRange("argument " + std::to_string(i) + " outside domain [0, " +
                              std::to_string(values_.size()) + ")");
    }
    return values_[i];
}

NonnegativeMatrix matrix_of_map(const FixedPointFreeMap& f) {
    std::vector<NonnegativeMatrix::Entry> entries;
    entries.reserve(f.dim());
    for (std::size_t k = 0; k < f.dim(); ++k) {
        entries.push_back({k, f(k), Rational(1)});
    }
    return NonnegativeMatrix::from_triplets(f.dim(), std::move(entries));
}

bool is_free(const FixedPointFreeMap& f, const IndexSet& set) {
    if (set.ambient_dim() != f.dim()) {
        throw DimensionMismatch("set ambient " + std::to_string(set.ambient_dim()) +
                                " does not match map domain " + std::to_string(f.dim()));
    }
    for (std::size_t i : set.members()) {
        if (set.contains(f(i))) {
            return false;
        }
    }
    return true;
}

IndexPartition pave_free(const FixedPointFreeMap& f) {
    const std::size_t n = f.dim();
    if (n == 0) {
        return IndexPartition(0, {});
    }
    if (n < 2) {
        throw DomainTooSmall("no fixed-point-free map exists on a 1-point domain");
    }

    // Each weakly connected component of the functional graph contains
    // exactly one cycle; locate the cycle vertices by walking f with a
    // three-state mark.
    std::vector<unsigned char> state(n, 0); // 0 fresh, 1 on current walk, 2 settled
    std::vector<char> on_cycle(n, 0);
    std::vector<std::size_t> walk;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) {
            continue;
        }
        walk.clear();
        std::size_t v = start;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = f(v);
        }
        if (state[v] == 1) { // closed a new cycle: v..back of walk
            for (std::size_t i = walk.size(); i-- > 0;) {
                on_cycle[walk[i]] = 1;
                if (walk[i] == v) {
                    break;
                }
            }
        }
        for (std::size_t u : walk) {
            state[u] = 2;
        }
    }

    constexpr int kUnset = -1;
    std::vector<int> color(n, kUnset);
    for (std::size_t v = 0; v < n; ++v) {
        if (!on_cycle[v] || color[v] != kUnset) {
            continue;
        }
        // v is the least unprocessed index on its cycle, hence the least on
        // the cycle overall; it takes the odd cycle's third color.
        std::vector<std::size_t> cycle{v};
        for (std::size_t u = f(v); u != v; u = f(u)) {
            cycle.push_back(u);
        }
        const bool odd = cycle.size() % 2 == 1 && cycle.size() > 1;
        color[cycle[0]] = odd ? 2 : 0;
        for (std::size_t i = 1; i < cycle.size(); ++i) {
            color[cycle[i]] = static_cast<int>((i - 1) % 2 == 0 ? (odd ? 0 : 1) : (odd ? 1 : 0));
        }
    }

    // Tree vertices: color against the parent f(v), walking each pending
    // chain down to its first colored vertex and unwinding.
    std::vector<std::size_t> chain;
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != kUnset) {
            continue;
        }
        chain.clear();
        std::size_t v = start;
        while (color[v] == kUnset) {
            chain.push_back(v);
            v = f(v);
        }
        for (std::size_t i = chain.size(); i-- > 0;) {
            color[chain[i]] = color[f(chain[i])] == 0 ? 1 : 0;
        }
    }

    std::vector<std::vector<std::size_t>> members(3);
    for (std::size_t i = 0; i < n; ++i) {
        members[static_cast<std::size_t>(color[i])].push_back(i);
    }
    std::vector<IndexSet> blocks;
    for (auto& ms : members) {
        if (!ms.empty()) {
            blocks.emplace_back(n, std::move(ms));
        }
    }
    return IndexPartition(n, std::move(blocks));
}

} // namespace rospave
