#include "rospave/constructions.hpp"

#include "rospave/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rospave {

SetFamily::SetFamily(std::size_t ambient, std::vector<IndexSet> sets)
    : n_(ambient), sets_(std::move(sets)) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].ambient_dim() != n_) {
            throw DimensionMismatch("family member " + std::to_string(i) + " has ambient " +
                                    std::to_string(sets_[i].ambient_dim()) + ", expected " +
                                    std::to_string(n_));
        }
        if (sets_[i].empty()) {
            throw PreconditionViolated("family member " + std::to_string(i) + " is empty");
        }
    }
}

IntervalPartition::IntervalPartition(std::vector<std::size_t> endpoints)
    : endpoints_(std::move(endpoints)) {
    if (endpoints_.empty() || endpoints_.front() != 0) {
        throw PreconditionViolated("interval endpoints must start at 0");
    }
    for (std::size_t i = 1; i < endpoints_.size(); ++i) {
        if (endpoints_[i] <= endpoints_[i - 1]) {
            throw PreconditionViolated("interval endpoints must be strictly increasing");
        }
    }
}

std::size_t IntervalPartition::interval_of(std::size_t index) const {
    if (index >= ambient_dim()) {
        throw IndexOutOfRange("index " + std::to_string(index) + " outside ambient range [0, " +
                              std::to_string(ambient_dim()) + ")");
    }
    const auto it = std::upper_bound(endpoints_.begin(), endpoints_.end(), index);
    return static_cast<std::size_t>(it - endpoints_.begin()) - 1;
}

std::size_t IntervalPartition::max_interval_length() const {
    std::size_t best = 0;
    for (std::size_t r = 0; r + 1 < endpoints_.size(); ++r) {
        best = std::max(best, endpoints_[r + 1] - endpoints_[r]);
    }
    return best;
}

namespace {

// Exhaustive two-sided splitting: decide membership of every element of
// every family member, ascending, in before out. A member stays feasible
// while its undecided elements can still cover both remaining deficits;
// when they exactly match one deficit with the other already met, they are
// all forced to that side. Failure of the search is a proof that no
// splitter exists within the given ambient set.
class SplitterSearch {
public:
    SplitterSearch(const SetFamily& family, const std::vector<char>& ambient, std::size_t need_in,
                   std::size_t need_out)
        : need_in_(need_in), need_out_(need_out) {
        std::vector<std::size_t> var_of(family.ambient_dim(), kNoVar);
        for (const IndexSet& f : family.sets()) {
            for (std::size_t e : f.members()) {
                if (ambient[e] && var_of[e] == kNoVar) {
                    var_of[e] = 0; // provisional; renumbered below
                    elements_.push_back(e);
                }
            }
        }
        std::sort(elements_.begin(), elements_.end());
        for (std::size_t v = 0; v < elements_.size(); ++v) {
            var_of[elements_[v]] = v;
        }
        sets_of_var_.resize(elements_.size());
        vars_of_set_.resize(family.size());
        for (std::size_t s = 0; s < family.size(); ++s) {
            for (std::size_t e : family.sets()[s].members()) {
                if (ambient[e]) {
                    vars_of_set_[s].push_back(var_of[e]);
                    sets_of_var_[var_of[e]].push_back(s);
                }
            }
        }
        assign_.assign(elements_.size(), kUndecided);
        in_.assign(family.size(), 0);
        out_.assign(family.size(), 0);
        und_.resize(family.size());
        for (std::size_t s = 0; s < family.size(); ++s) {
            und_[s] = vars_of_set_[s].size();
        }
    }

    struct Sides {
        std::vector<std::size_t> in_side;  // ascending
        std::vector<std::size_t> out_side; // ascending
    };

    // Both sides of the first feasible assignment, or nullopt after
    // exhausting the space. A successful search leaves no variable
    // undecided.
    std::optional<Sides> run() {
        if (!propagate() || !dfs(0)) {
            return std::nullopt;
        }
        Sides sides;
        for (std::size_t v = 0; v < elements_.size(); ++v) {
            (assign_[v] == kIn ? sides.in_side : sides.out_side).push_back(elements_[v]);
        }
        return sides;
    }

private:
    static constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);
    static constexpr char kUndecided = 0;
    static constexpr char kIn = 1;
    static constexpr char kOut = 2;

    bool dfs(std::size_t from) {
        std::size_t v = from;
        while (v < assign_.size() && assign_[v] != kUndecided) {
            ++v;
        }
        if (v == assign_.size()) {
            return true; // propagate() keeps every set feasible; no undecided left means satisfied
        }
        for (char val : {kIn, kOut}) {
            const std::size_t mark = trail_.size();
            set_var(v, val);
            if (propagate() && dfs(v + 1)) {
                return true;
            }
            undo_to(mark);
        }
        return false;
    }

    void set_var(std::size_t v, char val) {
        assign_[v] = val;
        trail_.push_back(v);
        for (std::size_t s : sets_of_var_[v]) {
            --und_[s];
            ++(val == kIn ? in_[s] : out_[s]);
        }
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const std::size_t v = trail_.back();
            trail_.pop_back();
            const char val = assign_[v];
            assign_[v] = kUndecided;
            for (std::size_t s : sets_of_var_[v]) {
                ++und_[s];
                --(val == kIn ? in_[s] : out_[s]);
            }
        }
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < vars_of_set_.size(); ++s) {
                const std::size_t d_in = need_in_ > in_[s] ? need_in_ - in_[s] : 0;
                const std::size_t d_out = need_out_ > out_[s] ? need_out_ - out_[s] : 0;
                if (und_[s] < d_in + d_out) {
                    return false;
                }
                if (und_[s] > 0 && und_[s] == d_in + d_out && (d_in == 0 || d_out == 0)) {
                    const char forced = d_in > 0 ? kIn : kOut;
                    for (std::size_t v : vars_of_set_[s]) {
                        if (assign_[v] == kUndecided) {
                            set_var(v, forced);
                        }
                    }
                    changed = true;
                }
            }
        }
        return true;
    }

    std::size_t need_in_;
    std::size_t need_out_;
    std::vector<std::size_t> elements_;               // ascending element ids, one per variable
    std::vector<std::vector<std::size_t>> sets_of_var_;
    std::vector<std::vector<std::size_t>> vars_of_set_;
    std::vector<char> assign_;
    std::vector<std::size_t> in_, out_, und_;
    std::vector<std::size_t> trail_;
};

} // namespace

std::optional<IndexSet> find_splitter(const SetFamily& family, std::size_t t) {
    if (t == 0) {
        throw PreconditionViolated("threshold t must be positive");
    }
    std::vector<char> ambient(family.ambient_dim(), 1);
    SplitterSearch search(family, ambient, t, t);
    auto split = search.run();
    if (!split) {
        return std::nullopt;
    }
    return IndexSet(family.ambient_dim(), std::move(split->in_side));
}

std::optional<std::vector<IndexSet>> build_disjoint_blocks(const SetFamily& family, std::size_t m,
                                                           std::size_t t) {
    if (m == 0 || t == 0) {
        throw PreconditionViolated("m and t must be positive");
    }
    const std::size_t n = family.ambient_dim();
    // Round r splits what is left into the next block (t points of every
    // member) and a kept side whose reserve, (m-r-1)*t plus t for the final
    // leftover, pays for all later rounds. Searching with the kept side as
    // the in side makes the block the other, near-minimal side, so a round
    // does not strip members down to their bare reserve and starve the
    // rounds after it. The reversed orientation is retried once in case the
    // small-block trajectory dead-ends where a large-block one would not.
    const auto attempt = [&](bool small_blocks) -> std::optional<std::vector<IndexSet>> {
        std::vector<char> ambient(n, 1);
        std::vector<IndexSet> blocks;
        blocks.reserve(m);
        for (std::size_t r = 0; r < m; ++r) {
            const std::size_t reserve = (m - r) * t;
            SplitterSearch search(family, ambient, small_blocks ? reserve : t,
                                  small_blocks ? t : reserve);
            auto split = search.run();
            if (!split) {
                return std::nullopt;
            }
            std::vector<std::size_t>& taken = small_blocks ? split->out_side : split->in_side;
            for (std::size_t e : taken) {
                ambient[e] = 0;
            }
            blocks.emplace_back(n, std::move(taken));
        }
        return blocks;
    };
    auto blocks = attempt(true);
    return blocks ? blocks : attempt(false);
}

FixedPointFreeMap covering_map(const SetFamily& family, const std::vector<IndexSet>& blocks) {
    const std::size_t n = family.ambient_dim();
    if (n < 2) {
        throw PreconditionViolated("covering map needs an ambient range of at least 2");
    }
    std::vector<char> taken(n, 0);
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        if (blocks[r].ambient_dim() != n) {
            throw DimensionMismatch("block " + std::to_string(r) + " has ambient " +
                                    std::to_string(blocks[r].ambient_dim()) + ", expected " +
                                    std::to_string(n));
        }
        for (std::size_t e : blocks[r].members()) {
            if (taken[e]) {
                throw PreconditionViolated("blocks are not pairwise disjoint at " +
                                           std::to_string(e));
            }
            taken[e] = 1;
        }
        for (std::size_t s = 0; s < family.size(); ++s) {
            bool hit = false;
            for (std::size_t e : blocks[r].members()) {
                if (e != r && family.sets()[s].contains(e)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                throw PreconditionViolated("block " + std::to_string(r) + " minus {" +
                                           std::to_string(r) + "} misses family member " +
                                           std::to_string(s));
            }
        }
    }
    std::vector<std::size_t> f(n);
    for (std::size_t k = 0; k < n; ++k) {
        f[k] = k + 1 == n ? 0 : k + 1;
    }
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        for (std::size_t k : blocks[r].members()) {
            if (k != r) {
                f[k] = r;
            }
        }
    }
    return FixedPointFreeMap(std::move(f));
}

bool dominates(const IntervalPartition& outer, const IntervalPartition& inner,
               std::size_t exceptions) {
    if (outer.ambient_dim() != inner.ambient_dim()) {
        throw DimensionMismatch("interval partitions cover different ranges: " +
                                std::to_string(outer.ambient_dim()) + " vs " +
                                std::to_string(inner.ambient_dim()));
    }
    const auto oe = outer.endpoints();
    const auto ie = inner.endpoints();
    std::size_t missing = 0;
    for (std::size_t r = 0; r + 1 < oe.size(); ++r) {
        // The first inner interval starting at or after oe[r] is the only
        // candidate that can end by oe[r+1].
        const auto it = std::lower_bound(ie.begin(), ie.end(), oe[r]);
        const std::size_t j = static_cast<std::size_t>(it - ie.begin());
        const bool contains_one = j + 1 < ie.size() && ie[j + 1] <= oe[r + 1];
        if (!contains_one) {
            ++missing;
        }
    }
    return missing <= exceptions;
}

IndexSet endpoint_set(const std::vector<std::size_t>& increasing_values) {
    const std::size_t n = increasing_values.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (increasing_values[i] >= increasing_values[i + 1]) {
            throw PreconditionViolated("map values must be strictly increasing at " +
                                       std::to_string(i));
        }
    }
    if (n > 0 && increasing_values[0] < 1) {
        throw PreconditionViolated("map must satisfy f(0) >= 1");
    }
    std::vector<std::size_t> members;
    std::size_t v = 0;
    while (v < n) {
        members.push_back(v);
        const std::size_t w = increasing_values[v];
        if (w >= n || increasing_values[w] >= n) {
            break;
        }
        v = increasing_values[w];
    }
    return IndexSet(n, std::move(members));
}

namespace {

Rational pow2_fraction(const Rational& eps, std::size_t shift) {
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, shift);
    Rational out = eps / Rational(denom);
    return out;
}

} // namespace

std::vector<std::size_t> c0_column_cutoffs(const NonnegativeMatrix& m, const Rational& epsilon) {
    if (epsilon <= 0) {
        throw NonPositiveEpsilon("epsilon must be positive, got " + format_rational(epsilon));
    }
    const std::size_t n = m.dim();
    std::vector<Rational> bound(n);
    for (std::size_t j = 0; j < n; ++j) {
        bound[j] = pow2_fraction(epsilon, j + 2);
    }
    std::vector<std::size_t> cutoff(n, 0);
    for (const auto& e : m.all_entries()) {
        if (e.value > bound[e.col]) {
            cutoff[e.col] = std::max(cutoff[e.col], e.row + 1);
        }
    }
    return cutoff;
}

std::vector<std::size_t> c0_tail_cutoffs(const NonnegativeMatrix& m, const Rational& epsilon) {
    if (epsilon <= 0) {
        throw NonPositiveEpsilon("epsilon must be positive, got " + format_rational(epsilon));
    }
    const Rational half = epsilon / 2;
    const std::size_t n = m.dim();
    std::vector<std::size_t> cutoff(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Rational tail(0);
        for (const auto& e : m.row(k)) {
            tail += e.value;
        }
        std::size_t g = 0;
        for (const auto& e : m.row(k)) {
            if (tail <= half) {
                break;
            }
            tail -= e.value;
            g = e.col + 1;
        }
        cutoff[k] = g;
    }
    return cutoff;
}

C0FragmentResult c0_fragment_set(const NonnegativeMatrix& m, const Rational& epsilon) {
    const std::vector<std::size_t> col_cut = c0_column_cutoffs(m, epsilon);
    const std::vector<std::size_t> tail_cut = c0_tail_cutoffs(m, epsilon);
    const std::size_t n = m.dim();
    std::vector<std::size_t> members;
    std::size_t a = 0;
    while (a < n) {
        members.push_back(a);
        a = std::max({col_cut[a], tail_cut[a], a}) + 1;
    }
    IndexSet set(n, std::move(members));
    FragmentationCertificate cert = check_fragmentation(m, set, epsilon);
    return {std::move(set), std::move(cert)};
}

FiniteToOneWitness finite_to_one_witness(const SetFamily& family, const FixedPointFreeMap& g,
                                         const IntervalPartition& intervals) {
    const std::size_t n = g.dim();
    if (intervals.ambient_dim() != n) {
        throw DimensionMismatch("interval partition covers " +
                                std::to_string(intervals.ambient_dim()) + ", map domain is " +
                                std::to_string(n));
    }
    if (family.ambient_dim() != n) {
        throw DimensionMismatch("family ambient " + std::to_string(family.ambient_dim()) +
                                ", map domain is " + std::to_string(n));
    }
    if (n < 2) {
        throw PreconditionViolated("witness construction needs a domain of at least 2");
    }
    std::vector<std::size_t> piece(n);
    for (std::size_t i = 0; i < n; ++i) {
        piece[i] = intervals.interval_of(i);
    }
    std::vector<std::size_t> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (piece[i] == piece[g(i)]) {
            f[i] = g(i);
        } else {
            f[i] = i + 1 == n ? 0 : i + 1;
        }
    }
    const std::size_t bound = intervals.max_interval_length() + 2;
    FiniteToOneWitness out{FixedPointFreeMap(std::move(f), bound), bound, {}};
    out.single_piece_hit.reserve(family.size());
    for (const IndexSet& member : family.sets()) {
        bool hit = false;
        for (std::size_t i : member.members()) {
            if (member.contains(g(i)) && piece[i] == piece[g(i)]) {
                hit = true;
                break;
            }
        }
        out.single_piece_hit.push_back(hit);
    }
    return out;
}

} // namespace rospave
