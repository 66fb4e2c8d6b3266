#include "lieforge/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "lieforge/error.hpp"

namespace lieforge {

// ---------------------------------------------------------------- EchelonBasis

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector& v) const {
    if (v.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "EchelonBasis::reduce");
    Reduction red{v, SparseVector(track_ ? inserted_ + 1 : 0)};
    while (!red.remainder.is_zero()) {
        const auto& [lead, value] = red.remainder.entries().front();
        auto it = by_lead_.find(lead);
        if (it == by_lead_.end()) break;
        const Row& row = rows_[it->second];
        Rational factor = value;  // stored rows have leading coefficient 1
        red.remainder.axpy(-factor, row.v);
        if (track_) {
            SparseVector combo = row.combo;
            // combo dims grow as vectors are inserted; align to current size
            SparseVector aligned(red.coefficients.dim());
            for (const auto& [i, x] : combo.entries()) aligned.set(i, x);
            red.coefficients.axpy(factor, aligned);
        }
    }
    if (track_) {
        SparseVector trimmed(inserted_);
        for (const auto& [i, x] : red.coefficients.entries())
            if (i < inserted_) trimmed.set(i, x);
        red.coefficients = std::move(trimmed);
    }
    return red;
}

bool EchelonBasis::insert(const SparseVector& v) {
    Reduction red = reduce(v);
    std::size_t index = inserted_++;
    if (red.remainder.is_zero()) return false;
    Rational lead_inv = red.remainder.entries().front().second.inverse();
    std::size_t lead = red.remainder.entries().front().first;
    Row row;
    row.v = std::move(red.remainder);
    row.v *= lead_inv;
    if (track_) {
        // row = v - sum(coeffs * family) = e_index - coeffs, scaled
        SparseVector combo(index + 1);
        for (const auto& [i, x] : red.coefficients.entries()) combo.set(i, -x);
        combo.set(index, 1);
        combo *= lead_inv;
        row.combo = std::move(combo);
    }
    by_lead_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
    std::vector<std::size_t> cols;
    for (const auto& [c, _] : by_lead_) cols.push_back(c);
    return cols;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [lead, idx] : by_lead_) out.push_back(rows_[idx].v);
    std::vector<std::size_t> leads = pivot_columns();
    for (std::size_t i = out.size(); i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational x = out[j].get(leads[i]);
            if (!x.is_zero()) out[j].axpy(-x, out[i]);
        }
    }
    return out;
}

// ---------------------------------------------------------------- kernel / rank

namespace {

std::vector<std::size_t> visit_order(const SparseMatrix& m, PivotOrder order) {
    std::vector<std::size_t> idx(m.rows());
    std::iota(idx.begin(), idx.end(), 0);
    if (order == PivotOrder::SparsestFirst) {
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return m.row(a).nnz() < m.row(b).nnz(); });
    }
    return idx;
}

}  // namespace

std::vector<SparseVector> kernel_basis(const SparseMatrix& m, PivotOrder order) {
    EchelonBasis basis(m.cols());
    for (std::size_t r : visit_order(m, order)) {
        basis.insert(m.row(r));
        if (basis.rank() == m.cols()) break;
    }
    std::vector<SparseVector> rref = basis.reduced_rows();
    std::vector<std::size_t> leads = basis.pivot_columns();
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : leads) is_pivot[c] = 1;

    std::vector<SparseVector> kernel;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVector::Entry> entries{{f, Rational(1)}};
        for (std::size_t p = 0; p < rref.size(); ++p) {
            Rational x = rref[p].get(f);
            if (!x.is_zero()) entries.emplace_back(leads[p], -x);
        }
        kernel.push_back(SparseVector::from_entries(m.cols(), std::move(entries)));
    }
    return kernel;
}

std::size_t rank(const SparseMatrix& m, PivotOrder order) {
    EchelonBasis basis(m.cols());
    for (std::size_t r : visit_order(m, order)) {
        basis.insert(m.row(r));
        if (basis.rank() == m.cols()) break;
    }
    return basis.rank();
}

std::size_t rank_fraction_free(const SparseMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (const auto& [c, x] : m.row(r).entries()) {
            mpz_class d = x.denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (const auto& [c, x] : m.row(r).entries()) {
            mpq_class q = x.to_mpq() * mpq_class(l);
            a[r][c] = q.get_num();
        }
    }
    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

std::optional<Rational> proportionality(const SparseVector& v, const SparseVector& w) {
    if (w.is_zero()) throw Error(ErrorCode::ZeroReference, "proportionality reference vector is zero");
    if (v.dim() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "proportionality");
    if (v.is_zero()) return Rational(0);
    if (v.nnz() != w.nnz()) return std::nullopt;
    Rational c = v.entries().front().second / w.entries().front().second;
    for (std::size_t i = 0; i < v.nnz(); ++i) {
        const auto& [iv, xv] = v.entries()[i];
        const auto& [iw, xw] = w.entries()[i];
        if (iv != iw || xv != c * xw) return std::nullopt;
    }
    return c;
}

// ---------------------------------------------------------------- dense helpers

Inertia ldl_signature(const SparseMatrix& b) {
    if (!b.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "ldl_signature requires a symmetric matrix");
    const std::size_t n = b.rows();
    std::vector<std::vector<Rational>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = b.row(i).to_dense();

    Inertia in;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][p].is_zero()) ++p;
        if (p == n) {
            // all remaining diagonals vanish; create one from an off-diagonal pair by congruence
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!a[i][j].is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                in.zeros += n - k;
                return in;
            }
            for (std::size_t c = k; c < n; ++c) a[pi][c] += a[pj][c];
            for (std::size_t r = k; r < n; ++r) a[r][pi] += a[r][pj];
            p = pi;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r][p], a[r][k]);
        }
        const Rational d = a[k][k];
        (d.sign() > 0 ? in.positives : in.negatives)++;
        Rational dinv = d.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] * dinv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
            a[i][k] = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    }
    return in;
}

SparseMatrix inverse(const SparseMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    std::vector<std::vector<Rational>> a(n), inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = m.row(i).to_dense();
        inv[i][i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw Error(ErrorCode::DegenerateForm, "matrix is singular");
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        Rational d = a[k][k].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[k][j].is_zero()) a[k][j] *= d;
            if (!inv[k][j].is_zero()) inv[k][j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            Rational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
                if (!inv[k][j].is_zero()) inv[i][j] -= f * inv[k][j];
            }
        }
    }
    std::vector<SparseVector> rows;
    rows.reserve(n);
    for (auto& r : inv) rows.push_back(SparseVector::from_dense(r));
    return SparseMatrix::from_rows(n, std::move(rows));
}

// ---------------------------------------------------------------- SpanSolver

SpanSolver::SpanSolver(const std::vector<SparseVector>& family)
    : size_(family.size()), basis_(family.empty() ? 0 : family.front().dim(), true) {
    for (const auto& v : family)
        if (!basis_.insert(v)) throw Error(ErrorCode::DegenerateForm, "SpanSolver family is linearly dependent");
}

std::optional<SparseVector> SpanSolver::solve(const SparseVector& v) const {
    auto red = basis_.reduce(v);
    if (!red.remainder.is_zero()) return std::nullopt;
    return red.coefficients;
}

}  // namespace lieforge
