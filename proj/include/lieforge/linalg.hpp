#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lieforge/sparse.hpp"

namespace lieforge {

enum class PivotOrder {
    RowOrder,      ///< rows visited in their stored order
    SparsestFirst  ///< rows visited by increasing number of nonzeros (stable)
};

/*
 * Incrementally built row echelon form. Each stored row has a distinct
 * leading column; optional tags record every stored row as a combination
 * of the inserted vectors, which is what span membership solving needs.
 */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim, bool track_combinations = false)
        : dim_(dim), track_(track_combinations) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Inserts v; returns true when v was independent of the rows already present.
    bool insert(const SparseVector& v);

    struct Reduction {
        SparseVector remainder;
        SparseVector coefficients;  ///< over inserted vectors (only when tracking)
    };
    /// Reduces v against the basis; v lies in the span iff the remainder is zero.
    Reduction reduce(const SparseVector& v) const;

    /// Reduced row echelon rows (leading entry 1), ordered by leading column.
    std::vector<SparseVector> reduced_rows() const;
    std::vector<std::size_t> pivot_columns() const;

private:
    struct Row {
        SparseVector v;
        SparseVector combo;
    };
    std::size_t dim_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
    std::map<std::size_t, std::size_t> by_lead_;
};

std::vector<SparseVector> kernel_basis(const SparseMatrix& m, PivotOrder order = PivotOrder::RowOrder);
std::size_t rank(const SparseMatrix& m, PivotOrder order = PivotOrder::RowOrder);

/// Rank by dense fraction-free (Bareiss) elimination over the integers; an
/// independent route to rank() used for cross-checking.
std::size_t rank_fraction_free(const SparseMatrix& m);

/// Returns c with v = c*w, or nullopt when v is not a multiple of w. Throws ZeroReference for w = 0.
std::optional<Rational> proportionality(const SparseVector& v, const SparseVector& w);

struct Inertia {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by exact symmetric elimination. Throws NotSymmetric.
Inertia ldl_signature(const SparseMatrix& b);

/// Inverse of a square matrix by dense Gauss-Jordan; throws DegenerateForm when singular.
SparseMatrix inverse(const SparseMatrix& m);

/// Expresses vectors in the span of a fixed linearly independent family.
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<SparseVector>& family);
    std::size_t size() const noexcept { return size_; }
    /// Coefficients of v in the family, or nullopt when v is outside the span.
    std::optional<SparseVector> solve(const SparseVector& v) const;

private:
    std::size_t size_;
    EchelonBasis basis_;
};

}  // namespace lieforge
