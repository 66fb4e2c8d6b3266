#include "lieforge/srep.hpp"

#include "lieforge/error.hpp"
#include "lieforge/linalg.hpp"

namespace lieforge {

namespace {

bool is_skew(const SparseMatrix& x, const SparseMatrix& b) {
    SparseMatrix bx = b * x;
    return (bx + bx.transpose()).is_zero();
}

SparseMatrix block_form(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, x] : a.row(i).entries()) out.set(i, j, x);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (const auto& [j, x] : b.row(i).entries()) out.set(a.rows() + i, a.cols() + j, x);
    return out;
}

SparseMatrix combination(const OrthRep& rep, const SparseVector& x) {
    SparseMatrix out(rep.dim_m, rep.dim_m);
    for (const auto& [k, c] : x.entries()) out = out + c * rep.rho[k];
    return out;
}

SparseVector embed_m(const CandidateAlgebra& cand, const SparseVector& v) {
    if (v.dim() != cand.m_dim) throw Error(ErrorCode::DimensionMismatch, "vector is not in m");
    SparseVector out(cand.g.dim());
    for (const auto& [i, c] : v.entries()) out.set(cand.h_dim + i, c);
    return out;
}

SparseVector part(const SparseVector& v, std::size_t begin, std::size_t size) {
    SparseVector out(size);
    for (const auto& [i, c] : v.entries())
        if (i >= begin && i < begin + size) out.set(i - begin, c);
    return out;
}

void require_structure(const OrthRep& rep, const SparseMatrix& s, const char* name) {
    const std::size_t m = rep.dim_m;
    if (s.rows() != m || s.cols() != m) throw Error(ErrorCode::DimensionMismatch, std::string(name) + " has wrong size");
    if (!(s * s == SparseMatrix::identity(m, -1)))
        throw Error(ErrorCode::NotRepresentation, std::string(name) + " does not square to -Id");
    if (!is_skew(s, rep.b_m)) throw Error(ErrorCode::NotRepresentation, std::string(name) + " is not orthogonal");
    for (const auto& r : rep.rho)
        if (!(r * s == s * r)) throw Error(ErrorCode::NotRepresentation, std::string(name) + " is not invariant");
}

AugmentationResult augment(const OrthRep& rep, const Form& reference, std::vector<SparseMatrix> extra,
                           std::vector<std::string> extra_labels) {
    Form cas = casimir_image(rep);
    auto c = proportionality(cas, reference);
    if (!c) throw Error(ErrorCode::NotProportional, "Casimir image is not proportional to the invariant four-form");
    if (c->sign() >= 0)
        throw Error(ErrorCode::NonNegativeC, "proportionality constant is " + c->str() + ", expected negative");
    AugmentationResult res;
    res.c = *c;
    res.r = -c->inverse();
    std::vector<SparseMatrix> rho = rep.rho;
    std::vector<std::string> labels = rep.h.labels();
    for (auto& e : extra) rho.push_back(std::move(e));
    for (auto& l : extra_labels) labels.push_back(std::move(l));
    SparseMatrix form = block_form(rep.h.form(), SparseMatrix::identity(extra_labels.size(), res.r));
    res.augmented = make_orth_rep(std::move(rho), std::move(labels), rep.b_m, std::move(form));
    res.candidate = build_candidate(res.augmented);
    return res;
}

}  // namespace

OrthRep make_orth_rep(std::vector<SparseMatrix> rho, std::vector<std::string> labels, SparseMatrix b_m) {
    if (rho.empty()) throw Error(ErrorCode::NotRepresentation, "empty representation");
    const std::size_t m = b_m.rows();
    if (ldl_signature(b_m) != Inertia{m, 0, 0})
        throw Error(ErrorCode::NoInvariantMetric, "B_m is not positive definite");
    for (const auto& r : rho) {
        if (r.rows() != m || r.cols() != m) throw Error(ErrorCode::DimensionMismatch, "representation matrix size");
        if (!is_skew(r, b_m)) throw Error(ErrorCode::NotRepresentation, "representation matrix is not B_m-skew");
    }
    OrthRep rep;
    rep.h = matrix_lie_algebra(rho, std::move(labels));
    rep.rho = std::move(rho);
    rep.b_m = std::move(b_m);
    rep.dim_m = m;
    return rep;
}

OrthRep make_orth_rep(std::vector<SparseMatrix> rho, std::vector<std::string> labels, SparseMatrix b_m,
                      SparseMatrix h_form) {
    OrthRep rep = make_orth_rep(std::move(rho), std::move(labels), std::move(b_m));
    rep.h.set_form(std::move(h_form));
    return rep;
}

Form tilde(const OrthRep& rep, const SparseVector& x) { return two_form_of(combination(rep, x), rep.b_m); }

Form tilde_basis(const OrthRep& rep, std::size_t k) { return two_form_of(rep.rho.at(k), rep.b_m); }

CandidateAlgebra build_candidate(const OrthRep& rep) {
    const std::size_t h = rep.h.dim(), m = rep.dim_m, n = h + m;
    SparseMatrix g_inv = inverse(rep.h.form());
    inverse(rep.b_m);  // DegenerateForm for a singular metric

    std::vector<std::string> labels = rep.h.labels();
    for (std::size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
    CandidateAlgebra cand;
    cand.h_dim = h;
    cand.m_dim = m;
    cand.g = LieAlgebra(std::move(labels), block_form(rep.h.form(), rep.b_m));
    cand.g.graded_split = h;

    auto shifted = [n](const SparseVector& v, std::size_t offset) {
        SparseVector out(n);
        for (const auto& [i, c] : v.entries()) out.set(offset + i, c);
        return out;
    };
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j)
            if (!rep.h.bracket(i, j).is_zero()) cand.g.set_bracket(i, j, shifted(rep.h.bracket(i, j), 0));
    for (std::size_t k = 0; k < h; ++k) {
        SparseMatrix cols = rep.rho[k].transpose();  // row i is rho_k e_i
        for (std::size_t i = 0; i < m; ++i)
            if (!cols.row(i).is_zero()) cand.g.set_bracket(k, h + i, shifted(cols.row(i), 0 + h));
    }
    std::vector<SparseVector> mm(m * m, SparseVector(n));
    for (std::size_t k = 0; k < h; ++k) {
        Form ak = tilde_basis(rep, k);
        for (const auto& t : ak.terms()) {
            auto idx = Form::unpack(t.key, 2);
            SparseVector& target = mm[idx[0] * m + idx[1]];
            for (const auto& [l, gkl] : g_inv.row(k).entries()) target.set(l, target.get(l) + t.value * gkl);
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!mm[i * m + j].is_zero()) cand.g.set_bracket(h + i, h + j, mm[i * m + j]);
    return cand;
}

bool candidate_conditions_hold(const CandidateAlgebra& cand) {
    const std::size_t h = cand.h_dim, n = cand.g.dim();
    auto in_h = [h](const SparseVector& v) { return v.is_zero() || v.entries().back().first < h; };
    auto in_m = [h](const SparseVector& v) { return v.is_zero() || v.entries().front().first >= h; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const SparseVector& b = cand.g.bracket(i, j);
            bool ok = (i < h && j < h) ? in_h(b) : (i < h) ? in_m(b) : in_h(b);
            if (!ok) return false;
        }
    // B_h(a_k, [e_i, e_j]) = B(a_k e_i, e_j) = B([a_k, e_i], e_j)
    const SparseMatrix& form = cand.g.form();
    for (std::size_t i = h; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseVector lhs = form.apply(cand.g.bracket(i, j));
            for (std::size_t k = 0; k < h; ++k) {
                Rational rhs = cand.g.bracket(k, i).dot(form.row(j));
                if (lhs.get(k) != rhs) return false;
            }
        }
    return true;
}

Form casimir_image(const OrthRep& rep) {
    const std::size_t h = rep.h.dim(), m = rep.dim_m;
    SparseMatrix g_inv = inverse(rep.h.form());
    std::vector<Form> forms;
    forms.reserve(h);
    for (std::size_t k = 0; k < h; ++k) forms.push_back(tilde_basis(rep, k));
    FormBuilder fb(m, 4);
    for (std::size_t k = 0; k < h; ++k)
        for (const auto& [l, gkl] : g_inv.row(k).entries()) {
            if (l < k) continue;
            Rational factor = l == k ? gkl : Rational(2) * gkl;
            for (const auto& ta : forms[k].terms()) {
                auto ia = Form::unpack(ta.key, 2);
                Rational fa = factor * ta.value;
                for (const auto& tb : forms[l].terms()) {
                    auto ib = Form::unpack(tb.key, 2);
                    fb.add_unsorted({ia[0], ia[1], ib[0], ib[1]}, fa * tb.value);
                }
            }
        }
    return fb.build();
}

SparseVector jacobi_defect(const CandidateAlgebra& cand, const SparseVector& u, const SparseVector& v,
                           const SparseVector& w) {
    const LieAlgebra& g = cand.g;
    SparseVector eu = embed_m(cand, u), ev = embed_m(cand, v), ew = embed_m(cand, w);
    SparseVector out = g.bracket(g.bracket(eu, ev), ew);
    out.axpy(1, g.bracket(g.bracket(ev, ew), eu));
    out.axpy(1, g.bracket(g.bracket(ew, eu), ev));
    return part(out, cand.h_dim, cand.m_dim);
}

AugmentationResult complex_augment(const OrthRep& rep, const SparseMatrix& i_struct) {
    require_structure(rep, i_struct, "I");
    Form omega = two_form_of(i_struct, rep.b_m);
    return augment(rep, wedge(omega, omega), {i_struct}, {"i"});
}

AugmentationResult quaternionic_augment(const OrthRep& rep, const SparseMatrix& i_struct,
                                        const SparseMatrix& j_struct) {
    require_structure(rep, i_struct, "I");
    require_structure(rep, j_struct, "J");
    if (!(i_struct * j_struct + j_struct * i_struct).is_zero())
        throw Error(ErrorCode::NotRepresentation, "I and J do not anticommute");
    SparseMatrix k_struct = i_struct * j_struct;
    Form wi = two_form_of(i_struct, rep.b_m), wj = two_form_of(j_struct, rep.b_m), wk = two_form_of(k_struct, rep.b_m);
    Form reference = wedge(wi, wi) + wedge(wj, wj) + wedge(wk, wk);
    return augment(rep, reference, {i_struct, j_struct, k_struct}, {"i", "j", "k"});
}

CentralElement central_element(const CandidateAlgebra& cand, const OrthRep& rep, const SparseMatrix& j_struct) {
    const std::size_t h = cand.h_dim, m = cand.m_dim;
    const LieAlgebra& g = cand.g;
    SparseMatrix b_inv = inverse(rep.b_m);
    SparseMatrix j_cols = j_struct.transpose();  // row j is J e_j

    // X_{ij} = [J e_i, e_j] as h-vectors
    std::vector<SparseVector> x(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        SparseVector je = embed_m(cand, j_cols.row(i));
        for (std::size_t j = 0; j < m; ++j) x[i * m + j] = part(g.bracket_basis(je, h + j), 0, h);
    }
    CentralElement ce;
    ce.a_j = SparseVector(h);
    // [e_i, J e_j] = -[J e_j, e_i]
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [j, bij] : b_inv.row(i).entries()) ce.a_j.axpy(-bij, x[j * m + i]);

    // centrality against the part of h commuting with J
    std::vector<SparseVector> cols;
    ce.j_commutes_with_h = true;
    for (const auto& r : rep.rho) {
        cols.push_back(commutator(r, j_struct).flatten());
        if (cols.back().nnz() != 0) ce.j_commutes_with_h = false;
    }
    SparseMatrix sys = SparseMatrix::from_rows(m * m, std::move(cols)).transpose();
    for (const auto& b : kernel_basis(sys))
        if (!rep.h.bracket(ce.a_j, b).is_zero())
            throw Error(ErrorCode::NotCentral, "a_J does not commute with the centralizer of J in h");

    SparseMatrix action = combination(rep, ce.a_j);
    auto mu = proportionality(action.flatten(), j_struct.flatten());
    if (!mu || mu->is_zero()) throw Error(ErrorCode::NotProportionalToJ, "a_J does not act as a nonzero multiple of J");
    ce.mu = *mu;

    // sum_{ij} Binv_ij B_m(a_J e_i, J e_j)
    SparseMatrix mtx = action.transpose() * rep.b_m * j_struct;
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [j, bij] : b_inv.row(i).entries()) ce.trace_lhs += bij * mtx.get(i, j);
    // mid: 2 sum Binv_ik Binv_jl B_h(X_ij, X_lk), rhs: 2 sum Binv_ik Binv_jl B_h(X_ij, X_kl)
    const SparseMatrix& gh = rep.h.form();
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [k, bik] : b_inv.row(i).entries())
            for (std::size_t j = 0; j < m; ++j) {
                if (x[i * m + j].is_zero()) continue;
                SparseVector gx = gh.apply(x[i * m + j]);
                for (const auto& [l, bjl] : b_inv.row(j).entries()) {
                    ce.trace_mid += Rational(2) * bik * bjl * gx.dot(x[l * m + k]);
                    ce.trace_rhs += Rational(2) * bik * bjl * gx.dot(x[k * m + l]);
                }
            }
    return ce;
}

std::pair<SparseVector, SparseVector> find_null_pair(const OrthRep& rep) {
    const std::size_t m = rep.dim_m;
    for (std::size_t t = 0; t < m; ++t) {
        SparseVector w0 = SparseVector::unit(m, t);
        std::vector<SparseVector> rows;
        for (const auto& r : rep.rho) rows.push_back(rep.b_m.apply(r.apply(w0)));
        for (const auto& v : kernel_basis(SparseMatrix::from_rows(m, std::move(rows)))) {
            if (proportionality(v, w0)) continue;
            return {v, w0};
        }
    }
    throw Error(ErrorCode::NoSolution, "no null pair: the orbit directions span the orthogonal complement");
}

}  // namespace lieforge
