#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Sparse vector with entries sorted by index; never stores a zero.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVector() = default;
    explicit SparseVector(std::size_t dim) : dim_(dim) {}
    static SparseVector unit(std::size_t dim, std::size_t i, Rational value = 1);
    /// Builds from unsorted (index, value) pairs, summing duplicates and dropping zeros.
    static SparseVector from_entries(std::size_t dim, std::vector<Entry> entries);
    static SparseVector from_dense(std::span<const Rational> values);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    Rational get(std::size_t i) const;
    void set(std::size_t i, const Rational& value);

    /// this += factor * other
    void axpy(const Rational& factor, const SparseVector& other);
    SparseVector& operator*=(const Rational& factor);
    SparseVector operator-() const;

    friend SparseVector operator+(SparseVector a, const SparseVector& b) {
        a.axpy(1, b);
        return a;
    }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) {
        a.axpy(-1, b);
        return a;
    }
    friend SparseVector operator*(const Rational& s, SparseVector v) { return v *= s; }

    Rational dot(const SparseVector& other) const;
    std::vector<Rational> to_dense() const;

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// Row-major sparse matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    static SparseMatrix identity(std::size_t n, Rational value = 1);
    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const;

    const SparseVector& row(std::size_t r) const { return rows_.at(r); }
    SparseVector& row(std::size_t r) { return rows_.at(r); }
    const std::vector<SparseVector>& row_list() const noexcept { return rows_; }

    Rational get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, const Rational& v) { rows_.at(r).set(c, v); }

    SparseMatrix transpose() const;
    SparseVector apply(const SparseVector& v) const;
    /// v^T * this
    SparseVector apply_left(const SparseVector& v) const;
    bool is_symmetric() const;
    Rational trace() const;

    SparseMatrix& operator*=(const Rational& s);
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& s, SparseMatrix m) { return m *= s; }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

    /// Flattened entries as a vector of dimension rows*cols (row-major).
    SparseVector flatten() const;

private:
    std::size_t cols_ = 0;
    std::vector<SparseVector> rows_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);
/// trace(a * b) without forming the product.
Rational trace_product(const SparseMatrix& a, const SparseMatrix& b);

/// Dense accumulator for building sparse rows by scattered additions.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : values_(dim), touched_flag_(dim, 0) {}
    void add(std::size_t i, const Rational& v);
    void add_mul(std::size_t i, const Rational& a, const Rational& b);
    /// Extracts the accumulated vector and resets the accumulator.
    SparseVector take();

private:
    std::vector<Rational> values_;
    std::vector<char> touched_flag_;
    std::vector<std::size_t> touched_;
};

}  // namespace lieforge
