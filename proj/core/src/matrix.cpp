#include "rospave/matrix.hpp"

#include "rospave/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rospave {

NonnegativeMatrix::NonnegativeMatrix(std::size_t dim) : n_(dim), row_start_(dim + 1, 0) {}

NonnegativeMatrix NonnegativeMatrix::from_triplets(std::size_t dim, std::vector<Entry> entries) {
    for (const Entry& e : entries) {
        if (e.row >= dim || e.col >= dim) {
            throw IndexOutOfRange("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                                  ") outside " + std::to_string(dim) + "x" + std::to_string(dim) +
                                  " matrix");
        }
        if (e.value < 0) {
            throw NegativeEntry("negative value at (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ")");
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col) {
            throw ParseError("duplicate entry at (" + std::to_string(entries[i].row) + ", " +
                             std::to_string(entries[i].col) + ")");
        }
    }
    std::erase_if(entries, [](const Entry& e) { return e.value == 0; });

    NonnegativeMatrix m(dim);
    m.entries_ = std::move(entries);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        m.row_start_[k] = pos;
        while (pos < m.entries_.size() && m.entries_[pos].row == k) {
            ++pos;
        }
    }
    m.row_start_[dim] = pos;
    return m;
}

std::span<const NonnegativeMatrix::Entry> NonnegativeMatrix::row(std::size_t k) const {
    if (k >= n_) {
        throw IndexOutOfRange("row " + std::to_string(k) + " outside " + std::to_string(n_) +
                              "-dim matrix");
    }
    return {entries_.data() + row_start_[k], row_start_[k + 1] - row_start_[k]};
}

Rational NonnegativeMatrix::value_at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) {
        throw IndexOutOfRange("position (" + std::to_string(row) + ", " + std::to_string(col) +
                              ") outside " + std::to_string(n_) + "-dim matrix");
    }
    const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>(row_start_[row]);
    const auto end = entries_.begin() + static_cast<std::ptrdiff_t>(row_start_[row + 1]);
    const auto it = std::lower_bound(begin, end, col,
                                     [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != end && it->col == col) {
        return it->value;
    }
    return Rational(0);
}

Rational norm_inf(const NonnegativeMatrix& m) {
    Rational best(0);
    Rational sum;
    for (std::size_t k = 0; k < m.dim(); ++k) {
        sum = 0;
        for (const auto& e : m.row(k)) {
            sum += e.value;
        }
        if (sum > best) {
            best = sum;
        }
    }
    return best;
}

Rational norm_one(const NonnegativeMatrix& m) {
    std::vector<Rational> col_sums(m.dim(), Rational(0));
    for (const auto& e : m.all_entries()) {
        col_sums[e.col] += e.value;
    }
    Rational best(0);
    for (const Rational& s : col_sums) {
        if (s > best) {
            best = s;
        }
    }
    return best;
}

MatrixNorms matrix_norms(const NonnegativeMatrix& m) {
    return {norm_inf(m), norm_one(m)};
}

NonnegativeMatrix transpose(const NonnegativeMatrix& m) {
    std::vector<NonnegativeMatrix::Entry> flipped;
    flipped.reserve(m.entry_count());
    for (const auto& e : m.all_entries()) {
        flipped.push_back({e.col, e.row, e.value});
    }
    return NonnegativeMatrix::from_triplets(m.dim(), std::move(flipped));
}

NonnegativeMatrix zero_diagonal(const NonnegativeMatrix& m) {
    std::vector<NonnegativeMatrix::Entry> kept;
    kept.reserve(m.entry_count());
    for (const auto& e : m.all_entries()) {
        if (e.row != e.col) {
            kept.push_back(e);
        }
    }
    return NonnegativeMatrix::from_triplets(m.dim(), std::move(kept));
}

TriangularSplit triangular_split(const NonnegativeMatrix& m) {
    Rational scale = norm_inf(m);
    if (scale == 0) {
        throw ZeroMatrix("triangular split undefined for the zero matrix");
    }
    std::vector<NonnegativeMatrix::Entry> upper;
    std::vector<NonnegativeMatrix::Entry> lower;
    for (const auto& e : m.all_entries()) {
        if (e.row == e.col) {
            continue;
        }
        Rational scaled = e.value / scale;
        if (e.row < e.col) {
            upper.push_back({e.row, e.col, std::move(scaled)});
        } else {
            lower.push_back({e.row, e.col, std::move(scaled)});
        }
    }
    TriangularSplit out{NonnegativeMatrix::from_triplets(m.dim(), std::move(upper)),
                        NonnegativeMatrix::from_triplets(m.dim(), std::move(lower)),
                        std::move(scale)};
    return out;
}

} // namespace rospave
