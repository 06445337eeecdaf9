#pragma once

#include "rospave/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rospave {

// Square nonnegative matrix over exact rationals, stored as sorted row-major
// triplets; absent entries are zero. Immutable once constructed.
class NonnegativeMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        Rational value;

        friend bool operator==(const Entry& a, const Entry& b) {
            return a.row == b.row && a.col == b.col && a.value == b.value;
        }
    };

    explicit NonnegativeMatrix(std::size_t dim = 0);
    // Rejects out-of-range indices, negative values and duplicate positions;
    // explicit zeros are dropped.
    static NonnegativeMatrix from_triplets(std::size_t dim, std::vector<Entry> entries);

    std::size_t dim() const { return n_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t entry_count() const { return entries_.size(); }
    std::span<const Entry> row(std::size_t k) const;
    std::span<const Entry> all_entries() const { return entries_; }
    // Zero when the position holds no stored entry.
    Rational value_at(std::size_t row, std::size_t col) const;

    friend bool operator==(const NonnegativeMatrix& a, const NonnegativeMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::size_t> row_start_; // n_+1 offsets into entries_
};

struct MatrixNorms {
    Rational norm_inf; // max row sum
    Rational norm_one; // max column sum
};

// Off-diagonal triangular halves of a matrix, each rescaled by the row-sum
// norm of the source so that their row sums are at most 1.
struct TriangularSplit {
    NonnegativeMatrix upper; // entries with row < col, divided by scale
    NonnegativeMatrix lower; // entries with row > col, divided by scale
    Rational scale;          // row-sum norm of the source; always positive
};

// Max row sum. Zero for the empty or all-zero matrix.
Rational norm_inf(const NonnegativeMatrix& m);
// Max column sum.
Rational norm_one(const NonnegativeMatrix& m);
MatrixNorms matrix_norms(const NonnegativeMatrix& m);

NonnegativeMatrix transpose(const NonnegativeMatrix& m);
NonnegativeMatrix zero_diagonal(const NonnegativeMatrix& m);
// Throws ZeroMatrix when every entry is zero (no scale exists).
TriangularSplit triangular_split(const NonnegativeMatrix& m);

} // namespace rospave
