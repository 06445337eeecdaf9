#include "rospave/fragmentation.hpp"

#include "rospave/errors.hpp"

#include <string>

namespace rospave {

namespace {

void require_same_ambient(const NonnegativeMatrix& m, const IndexSet& set) {
    if (set.ambient_dim() != m.dim()) {
        throw DimensionMismatch("set ambient " + std::to_string(set.ambient_dim()) +
                                " does not match matrix dimension " + std::to_string(m.dim()));
    }
}

} // namespace

std::vector<std::pair<std::size_t, Rational>> residual_row_sums(const NonnegativeMatrix& m,
                                                                const IndexSet& set) {
    require_same_ambient(m, set);
    std::vector<char> in_set(m.dim(), 0);
    for (std::size_t i : set.members()) {
        in_set[i] = 1;
    }
    std::vector<std::pair<std::size_t, Rational>> out;
    out.reserve(set.size());
    for (std::size_t k : set.members()) {
        Rational sum(0);
        for (const auto& e : m.row(k)) {
            if (e.col != k && in_set[e.col]) {
                sum += e.value;
            }
        }
        out.emplace_back(k, std::move(sum));
    }
    return out;
}

FragmentationCertificate check_fragmentation(const NonnegativeMatrix& m, const IndexSet& set,
                                             const Rational& epsilon) {
    FragmentationCertificate cert;
    cert.epsilon = epsilon;
    cert.set = set;
    cert.residuals = residual_row_sums(m, set);
    for (const auto& [k, residual] : cert.residuals) {
        if (residual > epsilon) {
            cert.violated_at = k;
            break; // residuals are in ascending index order, so this k is least
        }
    }
    return cert;
}

Rational restricted_norm(const NonnegativeMatrix& m, const IndexSet& set) {
    Rational best(0);
    for (auto& [k, residual] : residual_row_sums(m, set)) {
        if (residual > best) {
            best = std::move(residual);
        }
    }
    return best;
}

Rational restricted_norm_columns(const NonnegativeMatrix& m, const IndexSet& set) {
    require_same_ambient(m, set);
    std::vector<char> in_set(m.dim(), 0);
    for (std::size_t i : set.members()) {
        in_set[i] = 1;
    }
    std::vector<Rational> col_sums(m.dim(), Rational(0));
    for (std::size_t k : set.members()) {
        for (const auto& e : m.row(k)) {
            if (e.col != k && in_set[e.col]) {
                col_sums[e.col] += e.value;
            }
        }
    }
    Rational best(0);
    for (std::size_t j : set.members()) {
        if (col_sums[j] > best) {
            best = col_sums[j];
        }
    }
    return best;
}

Rational measures_view(const NonnegativeMatrix& m, std::size_t k, const IndexSet& set) {
    require_same_ambient(m, set);
    if (k >= m.dim()) {
        throw IndexOutOfRange("row " + std::to_string(k) + " outside " + std::to_string(m.dim()) +
                              "-dim matrix");
    }
    std::vector<char> in_set(m.dim(), 0);
    for (std::size_t i : set.members()) {
        in_set[i] = 1;
    }
    Rational sum(0);
    for (const auto& e : m.row(k)) {
        if (in_set[e.col]) {
            sum += e.value;
        }
    }
    return sum;
}

} // namespace rospave
