#include "lieforge/forms.hpp"

#include <algorithm>

#include "lieforge/error.hpp"
#include "lieforge/linalg.hpp"

namespace lieforge {

namespace {

constexpr std::size_t kMaxIndex = 0xFFFF;

// Sorts the first n entries, returning the permutation sign, or 0 when an index repeats.
int sort_with_sign(std::size_t* idx, int n) {
    int sign = 1;
    for (int i = 1; i < n; ++i)
        for (int j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

void require_same_shape(const Form& a, const Form& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree())
        throw Error(ErrorCode::DimensionMismatch, "forms of different shape");
}

}  // namespace

// ---------------------------------------------------------------- Form

Form::Key Form::pack(const std::size_t* sorted, int degree) {
    Key k = 0;
    for (int p = 0; p < degree; ++p) {
        if (sorted[p] > kMaxIndex) throw Error(ErrorCode::DimensionMismatch, "form index exceeds 16 bits");
        k = (k << 16) | sorted[p];
    }
    return k;
}

Form::Index Form::unpack(Key key, int degree) {
    Index idx{};
    for (int p = degree - 1; p >= 0; --p) {
        idx[p] = key & kMaxIndex;
        key >>= 16;
    }
    return idx;
}

Rational Form::evaluate(const std::vector<std::size_t>& indices) const {
    if (static_cast<int>(indices.size()) != degree_) throw Error(ErrorCode::DimensionMismatch, "Form::evaluate");
    std::array<std::size_t, 4> idx{};
    std::copy(indices.begin(), indices.end(), idx.begin());
    int sign = sort_with_sign(idx.data(), degree_);
    if (sign == 0) return 0;
    Key k = pack(idx.data(), degree_);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, Key x) { return t.key < x; });
    if (it == terms_.end() || it->key != k) return 0;
    return sign > 0 ? it->value : -it->value;
}

Rational Form::scalar() const {
    if (degree_ != 0) throw Error(ErrorCode::DimensionMismatch, "scalar() on a form of positive degree");
    return terms_.empty() ? Rational(0) : terms_.front().value;
}

Form& Form::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.value *= s;
    return *this;
}

Form operator+(const Form& a, const Form& b) {
    require_same_shape(a, b);
    FormBuilder fb(a.dim(), a.degree());
    fb.add_form(a);
    fb.add_form(b);
    return fb.build();
}

Form operator-(const Form& a, const Form& b) {
    require_same_shape(a, b);
    FormBuilder fb(a.dim(), a.degree());
    fb.add_form(a);
    fb.add_form(b, -1);
    return fb.build();
}

bool operator==(const Form& a, const Form& b) {
    if (a.dim_ != b.dim_ || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].value != b.terms_[i].value) return false;
    return true;
}

// ---------------------------------------------------------------- FormBuilder

void FormBuilder::add(Form::Key key, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(key, v);
    if (!inserted) it->second += v;
}

void FormBuilder::add_unsorted(std::array<std::size_t, 4> indices, const Rational& v) {
    int sign = sort_with_sign(indices.data(), degree_);
    if (sign == 0 || v.is_zero()) return;
    Form::Key k = Form::pack(indices.data(), degree_);
    add(k, sign > 0 ? v : -v);
}

void FormBuilder::add_form(const Form& f, const Rational& scale) {
    for (const auto& t : f.terms()) add(t.key, t.value * scale);
}

Form FormBuilder::build() {
    Form f(dim_, degree_);
    f.terms_.reserve(acc_.size());
    for (auto& [k, v] : acc_)
        if (!v.is_zero()) f.terms_.push_back({k, std::move(v)});
    acc_.clear();
    std::sort(f.terms_.begin(), f.terms_.end(), [](const Form::Term& a, const Form::Term& b) { return a.key < b.key; });
    return f;
}

// ---------------------------------------------------------------- operations

Form two_form_of(const SparseMatrix& x, const SparseMatrix& b) {
    // B(X e_i, e_j) = (X^T B)_{ij}
    SparseMatrix xtb = x.transpose() * b;
    const std::size_t m = x.rows();
    FormBuilder fb(m, 2);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [j, v] : xtb.row(i).entries())
            if (i < j) fb.add_unsorted({i, j, 0, 0}, v);
    return fb.build();
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "wedge of forms on different spaces");
    const int da = a.degree(), db = b.degree();
    if (da + db > 4) throw Error(ErrorCode::DimensionMismatch, "wedge degree exceeds 4");
    FormBuilder fb(a.dim(), da + db);
    for (const auto& ta : a.terms()) {
        auto ia = Form::unpack(ta.key, da);
        for (const auto& tb : b.terms()) {
            auto ib = Form::unpack(tb.key, db);
            std::array<std::size_t, 4> idx{};
            for (int p = 0; p < da; ++p) idx[p] = ia[p];
            for (int p = 0; p < db; ++p) idx[da + p] = ib[p];
            fb.add_unsorted(idx, ta.value * tb.value);
        }
    }
    return fb.build();
}

std::optional<Rational> proportionality(const Form& a, const Form& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroReference, "proportionality reference form is zero");
    require_same_shape(a, b);
    if (a.is_zero()) return Rational(0);
    if (a.size() != b.size()) return std::nullopt;
    Rational c = a.terms().front().value / b.terms().front().value;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& ta = a.terms()[i];
        const auto& tb = b.terms()[i];
        if (ta.key != tb.key || ta.value != c * tb.value) return std::nullopt;
    }
    return c;
}

Form induced_action(const SparseMatrix& x, const Form& tau) {
    const int d = tau.degree();
    FormBuilder fb(tau.dim(), d);
    for (const auto& t : tau.terms()) {
        auto idx = Form::unpack(t.key, d);
        for (int p = 0; p < d; ++p) {
            // x acts on the covector e^k by -e^k o x = -sum_m x_{km} e^m
            for (const auto& [m, v] : x.row(idx[p]).entries()) {
                auto moved = idx;
                moved[p] = m;
                fb.add_unsorted(moved, -(t.value * v));
            }
        }
    }
    return fb.build();
}

Form lambda_contract(const Form& tau, const SparseMatrix& complex_structure, const SparseMatrix& b) {
    const int d = tau.degree();
    if (d < 2) throw Error(ErrorCode::DimensionMismatch, "lambda needs a form of degree >= 2");
    // coefficient of tau(e_i, e_c, ...) is (1/2) (I B^{-1})_{c i}
    SparseMatrix p = complex_structure * inverse(b);
    const Rational half(1, 2);
    FormBuilder fb(tau.dim(), d - 2);
    for (const auto& t : tau.terms()) {
        auto idx = Form::unpack(t.key, d);
        for (int a = 0; a < d; ++a)
            for (int c = 0; c < d; ++c) {
                if (a == c) continue;
                Rational coeff = p.get(idx[c], idx[a]);
                if (coeff.is_zero()) continue;
                int moves = a + c - (c > a ? 1 : 0);
                std::array<std::size_t, 4> rest{};
                int r = 0;
                for (int q = 0; q < d; ++q)
                    if (q != a && q != c) rest[r++] = idx[q];
                Rational v = half * coeff * t.value;
                fb.add(Form::pack(rest.data(), d - 2), moves % 2 == 0 ? v : -v);
            }
    }
    return fb.build();
}

// ---------------------------------------------------------------- Bianchi map

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v, std::size_t w, std::size_t z) {
    std::size_t idx[4] = {u, v, w, z};
    return Form::pack(idx, 4);
}

// Normalizes to u < v, w < z, (u,v) <= (w,z); returns the sign or 0 for a forced zero.
int normalize(std::size_t& u, std::size_t& v, std::size_t& w, std::size_t& z) {
    if (u == v || w == z) return 0;
    int sign = 1;
    if (u > v) {
        std::swap(u, v);
        sign = -sign;
    }
    if (w > z) {
        std::swap(w, z);
        sign = -sign;
    }
    if (std::make_pair(u, v) > std::make_pair(w, z)) {
        std::swap(u, w);
        std::swap(v, z);
    }
    return sign;
}

}  // namespace

void PairTable::set(std::size_t u, std::size_t v, std::size_t w, std::size_t z, const Rational& value) {
    int sign = normalize(u, v, w, z);
    if (sign == 0) return;
    std::uint64_t k = pair_key(u, v, w, z);
    if (value.is_zero()) {
        values_.erase(k);
        return;
    }
    values_[k] = sign > 0 ? value : -value;
}

Rational PairTable::get(std::size_t u, std::size_t v, std::size_t w, std::size_t z) const {
    int sign = normalize(u, v, w, z);
    if (sign == 0) return 0;
    auto it = values_.find(pair_key(u, v, w, z));
    if (it == values_.end()) return 0;
    return sign > 0 ? it->second : -it->second;
}

std::vector<std::array<std::size_t, 4>> PairTable::support() const {
    std::vector<std::array<std::size_t, 4>> out;
    for (const auto& [k, v] : values_) {
        auto idx = Form::unpack(k, 4);
        std::array<std::size_t, 4> s{idx[0], idx[1], idx[2], idx[3]};
        if (sort_with_sign(s.data(), 4) != 0) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Form bianchi(const PairTable& t) {
    FormBuilder fb(t.dim(), 4);
    for (const auto& q : t.support()) {
        const auto [a, b, c, d] = q;
        Rational v = t.get(a, b, c, d) + t.get(b, c, a, d) + t.get(c, a, b, d);
        fb.add(Form::pack(q.data(), 4), v);
    }
    return fb.build();
}

}  // namespace lieforge
