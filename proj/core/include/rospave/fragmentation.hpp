#pragma once

#include "rospave/index_set.hpp"
#include "rospave/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rospave {

// Witness for the fragmentation check: the residual row sum of every member
// of the set, plus the verdict those residuals force. Residuals never read
// the diagonal.
struct FragmentationCertificate {
    Rational epsilon;
    IndexSet set;
    // (k, sum of row k over the set minus column k), in member order.
    std::vector<std::pair<std::size_t, Rational>> residuals;
    // Least k whose residual exceeds epsilon; empty means fragmented.
    std::optional<std::size_t> violated_at;

    bool fragmented() const { return !violated_at.has_value(); }
};

// The sums on the left-hand side of the fragmentation inequality, one per
// member of the set, in ascending index order.
std::vector<std::pair<std::size_t, Rational>> residual_row_sums(const NonnegativeMatrix& m,
                                                                const IndexSet& set);

// Decides whether the set epsilon-fragments the matrix. epsilon may be 0,
// in which case fragmentation means the set induces no off-diagonal mass.
FragmentationCertificate check_fragmentation(const NonnegativeMatrix& m, const IndexSet& set,
                                             const Rational& epsilon);

// Row-sum norm of the matrix with rows and columns outside the set zeroed
// and the diagonal removed; equals the largest residual over the set.
Rational restricted_norm(const NonnegativeMatrix& m, const IndexSet& set);

// Column-sum counterpart: the largest column residual over the set. Dual to
// restricted_norm under transposition.
Rational restricted_norm_columns(const NonnegativeMatrix& m, const IndexSet& set);

// The finitely additive measures view: plain sum of row k over the set's
// columns, diagonal included.
Rational measures_view(const NonnegativeMatrix& m, std::size_t k, const IndexSet& set);

} // namespace rospave
