#include "rospave/paving.hpp"

#include "rospave/errors.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace rospave {

unsigned long long paving_arity(const Rational& epsilon) {
    if (epsilon <= 0) {
        throw NonPositiveEpsilon("epsilon must be positive, got " + format_rational(epsilon));
    }
    // 2/l < eps  <=>  l > 2/eps, so l = floor(2/eps) + 1.
    Rational ratio = Rational(2) / epsilon;
    Integer l = rational_floor(ratio) + 1;
    if (!l.fits_ulong_p()) {
        throw std::overflow_error("paving arity does not fit in 64 bits for epsilon " +
                                  format_rational(epsilon));
    }
    return l.get_ui();
}

unsigned long long block_budget(const Rational& epsilon) {
    if (epsilon <= 0) {
        throw NonPositiveEpsilon("epsilon must be positive, got " + format_rational(epsilon));
    }
    if (epsilon >= 1) {
        return 1;
    }
    const unsigned long long l = paving_arity(epsilon);
    if (l > std::numeric_limits<unsigned long long>::max() / l) {
        throw std::overflow_error("block budget overflows for epsilon " + format_rational(epsilon));
    }
    return l * l;
}

namespace {

enum class Shape { Lower, Upper };

void require_pavable(const NonnegativeMatrix& m, std::size_t l, Shape shape) {
    if (l == 0) {
        throw PreconditionViolated("color count l must be positive");
    }
    for (const auto& e : m.all_entries()) {
        const bool ok = shape == Shape::Lower ? e.col < e.row : e.col > e.row;
        if (!ok) {
            throw PreconditionViolated(std::string("matrix is not strictly ") +
                                       (shape == Shape::Lower ? "lower" : "upper") +
                                       "-triangular at (" + std::to_string(e.row) + ", " +
                                       std::to_string(e.col) + ")");
        }
    }
    if (norm_inf(m) > 1) {
        throw PreconditionViolated("row-sum norm exceeds 1");
    }
}

IndexPartition blocks_by_color(std::size_t n, std::size_t l, const std::vector<std::size_t>& color) {
    std::vector<std::vector<std::size_t>> members(l);
    for (std::size_t i = 0; i < n; ++i) {
        members[color[i]].push_back(i);
    }
    std::vector<IndexSet> blocks;
    for (auto& ms : members) {
        if (!ms.empty()) {
            blocks.emplace_back(n, std::move(ms));
        }
    }
    return IndexPartition(n, std::move(blocks));
}

// Shared greedy: scan indices in the given order; all of row k's entries
// point at already-colored indices, so the per-color sums are exact. The
// pigeonhole argument (row sums <= 1 split over l colors) guarantees a
// feasible color; hitting the logic_error below means a precondition check
// was bypassed.
IndexPartition pave_triangular(const NonnegativeMatrix& m, std::size_t l, Shape shape) {
    require_pavable(m, l, shape);
    const std::size_t n = m.dim();
    const Rational cap(1, static_cast<unsigned long>(l));
    std::vector<std::size_t> color(n, 0);
    std::vector<Rational> per_color(l);
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t k = shape == Shape::Lower ? step : n - 1 - step;
        for (std::size_t c = 0; c < l; ++c) {
            per_color[c] = 0;
        }
        for (const auto& e : m.row(k)) {
            per_color[color[e.col]] += e.value;
        }
        bool placed = false;
        for (std::size_t c = 0; c < l; ++c) {
            if (per_color[c] <= cap) {
                color[k] = c;
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw std::logic_error("pigeonhole violation: no feasible color for index " +
                                   std::to_string(k));
        }
    }
    return blocks_by_color(n, l, color);
}

} // namespace

IndexPartition pave_lower_triangular(const NonnegativeMatrix& m, std::size_t l) {
    return pave_triangular(m, l, Shape::Lower);
}

IndexPartition pave_upper_triangular(const NonnegativeMatrix& m, std::size_t l) {
    return pave_triangular(m, l, Shape::Upper);
}

IndexPartition pave(const NonnegativeMatrix& m, const Rational& epsilon) {
    if (epsilon <= 0) {
        throw NonPositiveEpsilon("epsilon must be positive, got " + format_rational(epsilon));
    }
    if (epsilon < 1) {
        return pave_with_arity(m, epsilon, static_cast<std::size_t>(paving_arity(epsilon)));
    }
    return pave_with_arity(m, epsilon, 1);
}

IndexPartition pave_with_arity(const NonnegativeMatrix& m, const Rational& epsilon, std::size_t l) {
    if (epsilon <= 0) {
        throw NonPositiveEpsilon("epsilon must be positive, got " + format_rational(epsilon));
    }
    const std::size_t n = m.dim();
    if (n == 0) {
        return IndexPartition(0, {});
    }
    if (epsilon >= 1 || norm_inf(m) == 0) {
        return IndexPartition(n, {IndexSet::full(n)});
    }
    if (l == 0) {
        throw PreconditionViolated("arity must be positive");
    }
    Rational two_over_l(2, static_cast<unsigned long>(l));
    two_over_l.canonicalize();
    if (two_over_l >= epsilon) {
        throw PreconditionViolated("arity " + std::to_string(l) + " does not satisfy 2/l < " +
                                   format_rational(epsilon));
    }
    const TriangularSplit split = triangular_split(m);
    const IndexPartition upper_part = pave_upper_triangular(split.upper, l);
    const IndexPartition lower_part = pave_lower_triangular(split.lower, l);

    // Intersections keyed by (upper block, lower block); the map order makes
    // the output deterministic.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) {
        cells[{upper_part.block_of(i), lower_part.block_of(i)}].push_back(i);
    }
    std::vector<IndexSet> blocks;
    blocks.reserve(cells.size());
    for (auto& [key, members] : cells) {
        blocks.emplace_back(n, std::move(members));
    }
    return IndexPartition(n, std::move(blocks));
}

} // namespace rospave
