#include "lieforge/sparse.hpp"

#include <algorithm>

#include "lieforge/error.hpp"

namespace lieforge {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroReference: return "ZeroReference";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadChirality: return "BadChirality";
        case ErrorCode::UnexpectedCentralizer: return "UnexpectedCentralizer";
        case ErrorCode::NoInvariantMetric: return "NoInvariantMetric";
        case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::NotProportional: return "NotProportional";
        case ErrorCode::NonNegativeC: return "NonNegativeC";
        case ErrorCode::NotCentral: return "NotCentral";
        case ErrorCode::NotProportionalToJ: return "NotProportionalToJ";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::ZeroBeta: return "ZeroBeta";
        case ErrorCode::NotWeylSymmetric: return "NotWeylSymmetric";
        case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
        case ErrorCode::NotRepresentation: return "NotRepresentation";
        case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- SparseVector

SparseVector SparseVector::unit(std::size_t dim, std::size_t i, Rational value) {
    SparseVector v(dim);
    v.set(i, value);
    return v;
}

SparseVector SparseVector::from_entries(std::size_t dim, std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v(dim);
    for (auto& [i, x] : entries) {
        if (i >= dim) throw Error(ErrorCode::DimensionMismatch, "SparseVector index out of range");
        if (!v.entries_.empty() && v.entries_.back().first == i) {
            v.entries_.back().second += x;
            if (v.entries_.back().second.is_zero()) v.entries_.pop_back();
        } else if (!x.is_zero()) {
            v.entries_.emplace_back(i, std::move(x));
        }
    }
    return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
    SparseVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) v.entries_.emplace_back(i, values[i]);
    return v;
}

Rational SparseVector::get(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return 0;
}

void SparseVector::set(std::size_t i, const Rational& value) {
    if (i >= dim_) throw Error(ErrorCode::DimensionMismatch, "SparseVector::set index out of range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) {
        if (value.is_zero())
            entries_.erase(it);
        else
            it->second = value;
    } else if (!value.is_zero()) {
        entries_.insert(it, Entry{i, value});
    }
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
    if (factor.is_zero() || other.entries_.empty()) return;
    if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "SparseVector::axpy");
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            Rational s = std::move(a->second);
            add_mul(s, factor, b->second);
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

SparseVector& SparseVector::operator*=(const Rational& factor) {
    if (factor.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= factor;
    return *this;
}

SparseVector SparseVector::operator-() const {
    SparseVector r = *this;
    for (auto& e : r.entries_) e.second = -e.second;
    return r;
}

Rational SparseVector::dot(const SparseVector& other) const {
    Rational s;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            add_mul(s, a->second, b->second);
            ++a;
            ++b;
        }
    }
    return s;
}

std::vector<Rational> SparseVector::to_dense() const {
    std::vector<Rational> d(dim_);
    for (const auto& [i, x] : entries_) d[i] = x;
    return d;
}

// ---------------------------------------------------------------- Accumulator

void Accumulator::add(std::size_t i, const Rational& v) {
    if (v.is_zero()) return;
    if (!touched_flag_[i]) {
        touched_flag_[i] = 1;
        touched_.push_back(i);
    }
    values_[i] += v;
}

void Accumulator::add_mul(std::size_t i, const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!touched_flag_[i]) {
        touched_flag_[i] = 1;
        touched_.push_back(i);
    }
    lieforge::add_mul(values_[i], a, b);
}

SparseVector Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<SparseVector::Entry> entries;
    entries.reserve(touched_.size());
    for (std::size_t i : touched_) {
        if (!values_[i].is_zero()) entries.emplace_back(i, std::move(values_[i]));
        values_[i] = Rational();
        touched_flag_[i] = 0;
    }
    touched_.clear();
    return SparseVector::from_entries(values_.size(), std::move(entries));
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, SparseVector(cols)) {}

SparseMatrix SparseMatrix::identity(std::size_t n, Rational value) {
    SparseMatrix m(n, n);
    if (value.is_zero()) return m;
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, value);
    return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
    SparseMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
        if (r.dim() != cols) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix::from_rows");
    m.rows_ = std::move(rows);
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.nnz();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.is_zero(); });
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<std::vector<SparseVector::Entry>> cols(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, x] : rows_[r].entries()) cols[c].emplace_back(r, x);
    std::vector<SparseVector> out;
    out.reserve(cols_);
    for (auto& c : cols) out.push_back(SparseVector::from_entries(rows_.size(), std::move(c)));
    return from_rows(rows_.size(), std::move(out));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    if (v.dim() != cols_) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix::apply");
    std::vector<SparseVector::Entry> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational s = rows_[r].dot(v);
        if (!s.is_zero()) out.emplace_back(r, std::move(s));
    }
    return SparseVector::from_entries(rows_.size(), std::move(out));
}

SparseVector SparseMatrix::apply_left(const SparseVector& v) const {
    if (v.dim() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix::apply_left");
    Accumulator acc(cols_);
    for (const auto& [r, x] : v.entries())
        for (const auto& [c, y] : rows_[r].entries()) acc.add_mul(c, x, y);
    return acc.take();
}

bool SparseMatrix::is_symmetric() const {
    if (rows_.size() != cols_) return false;
    return transpose() == *this;
}

Rational SparseMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_.size(), cols_); ++i) t += rows_[i].get(i);
    return t;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
    for (auto& r : rows_) r *= s;
    return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix product");
    Accumulator acc(b.cols());
    std::vector<SparseVector> out;
    out.reserve(a.rows());
    for (const auto& row : a.row_list()) {
        for (const auto& [k, x] : row.entries())
            for (const auto& [c, y] : b.row(k).entries()) acc.add_mul(c, x, y);
        out.push_back(acc.take());
    }
    return SparseMatrix::from_rows(b.cols(), std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix sum");
    SparseMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i) r.row(i).axpy(1, b.row(i));
    return r;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "SparseMatrix difference");
    SparseMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i) r.row(i).axpy(-1, b.row(i));
    return r;
}

SparseVector SparseMatrix::flatten() const {
    std::vector<SparseVector::Entry> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, x] : rows_[r].entries()) out.emplace_back(r * cols_ + c, x);
    return SparseVector::from_entries(rows_.size() * cols_, std::move(out));
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

Rational trace_product(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "trace_product");
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [k, x] : a.row(i).entries()) add_mul(t, x, b.get(k, i));
    return t;
}

}  // namespace lieforge
