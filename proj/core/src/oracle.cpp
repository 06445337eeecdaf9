#include "rospave/oracle.hpp"

#include "rospave/errors.hpp"
#include "rospave/fragmentation.hpp"
#include "rospave/paving.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rospave {

namespace {

// Depth-first search over restricted growth strings with at most `target`
// blocks. Index i may join any open block or open block min(open, target-1);
// trying block numbers in ascending order makes the first full assignment
// the lexicographically least one.
class PavingSearch {
public:
    PavingSearch(const NonnegativeMatrix& m, const Rational& eps, std::size_t target)
        : n_(m.dim()), eps_(eps), target_(target), dense_(n_ * n_, Rational(0)) {
        for (const auto& e : m.all_entries()) {
            if (e.row != e.col) {
                dense_[e.row * n_ + e.col] = e.value;
            }
        }
        members_.reserve(target);
        residuals_.reserve(target);
    }

    bool run(std::vector<std::size_t>& assignment_out) {
        assignment_.assign(n_, 0);
        const bool ok = dfs(0);
        if (ok) {
            assignment_out = assignment_;
        }
        return ok;
    }

private:
    bool dfs(std::size_t i) {
        if (i == n_) {
            return true;
        }
        const std::size_t open = members_.size();
        const std::size_t last = std::min(open, target_ - 1);
        for (std::size_t b = 0; b <= last; ++b) {
            if (!fits(i, b)) {
                continue;
            }
            place(i, b);
            if (dfs(i + 1)) {
                return true;
            }
            remove(i, b);
        }
        return false;
    }

    bool fits(std::size_t i, std::size_t b) const {
        if (b == members_.size()) {
            return true; // fresh singleton block, residual 0 <= eps always
        }
        Rational incoming(0);
        for (std::size_t idx = 0; idx < members_[b].size(); ++idx) {
            const std::size_t k = members_[b][idx];
            incoming += dense_[i * n_ + k];
            if (residuals_[b][idx] + dense_[k * n_ + i] > eps_) {
                return false;
            }
        }
        return incoming <= eps_;
    }

    void place(std::size_t i, std::size_t b) {
        if (b == members_.size()) {
            members_.emplace_back();
            residuals_.emplace_back();
        }
        Rational incoming(0);
        for (std::size_t idx = 0; idx < members_[b].size(); ++idx) {
            const std::size_t k = members_[b][idx];
            incoming += dense_[i * n_ + k];
            residuals_[b][idx] += dense_[k * n_ + i];
        }
        members_[b].push_back(i);
        residuals_[b].push_back(std::move(incoming));
        assignment_[i] = b;
    }

    void remove(std::size_t i, std::size_t b) {
        members_[b].pop_back();
        residuals_[b].pop_back();
        for (std::size_t idx = 0; idx < members_[b].size(); ++idx) {
            residuals_[b][idx] -= dense_[members_[b][idx] * n_ + i];
        }
        if (members_[b].empty()) {
            members_.pop_back();
            residuals_.pop_back();
        }
    }

    std::size_t n_;
    Rational eps_;
    std::size_t target_;
    std::vector<Rational> dense_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<Rational>> residuals_;
    std::vector<std::size_t> assignment_;
};

// Same skeleton with the free-set constraint: i may join block b only if
// f(i) is not in b and no member of b maps to i.
class FreePartitionSearch {
public:
    FreePartitionSearch(const FixedPointFreeMap& f, std::size_t target)
        : n_(f.dim()), f_(f.values().begin(), f.values().end()), target_(target) {}

    bool run(std::vector<std::size_t>& assignment_out) {
        assignment_.assign(n_, 0);
        const bool ok = dfs(0);
        if (ok) {
            assignment_out = assignment_;
        }
        return ok;
    }

private:
    bool dfs(std::size_t i) {
        if (i == n_) {
            return true;
        }
        const std::size_t open = members_.size();
        const std::size_t last = std::min(open, target_ - 1);
        for (std::size_t b = 0; b <= last; ++b) {
            if (b < open && !fits(i, b)) {
                continue;
            }
            if (b == open) {
                members_.emplace_back();
            }
            members_[b].push_back(i);
            assignment_[i] = b;
            if (dfs(i + 1)) {
                return true;
            }
            members_[b].pop_back();
            if (members_[b].empty()) {
                members_.pop_back();
            }
        }
        return false;
    }

    bool fits(std::size_t i, std::size_t b) const {
        for (std::size_t k : members_[b]) {
            if (k == f_[i] || f_[k] == i) {
                return false;
            }
        }
        return true;
    }

    std::size_t n_;
    std::vector<std::size_t> f_;
    std::size_t target_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> assignment_;
};

IndexPartition partition_from_assignment(std::size_t n, std::size_t blocks,
                                         const std::vector<std::size_t>& assignment) {
    std::vector<std::vector<std::size_t>> members(blocks);
    for (std::size_t i = 0; i < n; ++i) {
        members[assignment[i]].push_back(i);
    }
    std::vector<IndexSet> sets;
    sets.reserve(blocks);
    for (auto& ms : members) {
        sets.emplace_back(n, std::move(ms));
    }
    return IndexPartition(n, std::move(sets));
}

} // namespace

OptimalPaving min_paving_number(const NonnegativeMatrix& m, const Rational& epsilon_abs,
                                std::size_t limit) {
    if (epsilon_abs < 0) {
        throw NonPositiveEpsilon("threshold must be nonnegative, got " +
                                 format_rational(epsilon_abs));
    }
    const std::size_t n = m.dim();
    if (n > limit) {
        throw InstanceTooLarge("dimension " + std::to_string(n) + " exceeds oracle limit " +
                               std::to_string(limit));
    }
    if (n == 0) {
        return {0, IndexPartition(0, {}), epsilon_abs};
    }
    std::vector<std::size_t> assignment;
    for (std::size_t target = 1; target <= n; ++target) {
        PavingSearch search(m, epsilon_abs, target);
        if (search.run(assignment)) {
            return {target, partition_from_assignment(n, target, assignment), epsilon_abs};
        }
    }
    // Unreachable: singleton blocks always fragment (residuals are 0).
    throw std::logic_error("no partition found; singleton fallback failed");
}

OptimalFreePartition min_free_partition_number(const FixedPointFreeMap& f, std::size_t limit) {
    const std::size_t n = f.dim();
    if (n == 0) {
        return {0, IndexPartition(0, {}), true};
    }
    if (n > limit) {
        IndexPartition structural = pave_free(f);
        return {structural.block_count(), std::move(structural), false};
    }
    std::vector<std::size_t> assignment;
    for (std::size_t target = 1; target <= n; ++target) {
        FreePartitionSearch search(f, target);
        if (search.run(assignment)) {
            return {target, partition_from_assignment(n, target, assignment), true};
        }
    }
    throw std::logic_error("no free partition found; singletons are always free");
}

} // namespace rospave
