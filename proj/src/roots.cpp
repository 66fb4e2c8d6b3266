#include <algorithm>
#include <numeric>

#include "lieforge/error.hpp"
#include "lieforge/lie_algebra.hpp"

namespace lieforge {

namespace {

using Poly = std::vector<Rational>;  // coefficients, lowest degree first

Rational evaluate(const Poly& p, const Rational& x) {
    Rational v;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(d, e);
        if (d > 1000000) throw Error(ErrorCode::NotDiagonalizable, "characteristic coefficients too large to factor");
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t count = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Distinct rational roots of p.
std::vector<Rational> rational_roots(Poly p) {
    std::vector<Rational> roots;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.size() <= 1) return roots;
    std::size_t shift = 0;
    while (p[shift].is_zero()) ++shift;
    if (shift) roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
    if (p.size() <= 1) return roots;
    mpz_class l = 1;
    for (const auto& c : p) {
        mpz_class d = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class a0 = mpq_class(p.front().to_mpq() * l).get_num();
    mpz_class an = mpq_class(p.back().to_mpq() * l).get_num();
    for (const auto& num : positive_divisors(a0))
        for (const auto& den : positive_divisors(an))
            for (int s : {1, -1}) {
                Rational cand(mpq_class(s * num, den));
                if (evaluate(p, cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

// Minimal polynomial of v under m (monic, lowest degree first).
Poly krylov_min_poly(const SparseMatrix& m, const SparseVector& v) {
    EchelonBasis basis(v.dim(), true);
    SparseVector w = v;
    while (true) {
        auto red = basis.reduce(w);
        if (red.remainder.is_zero()) {
            Poly p(basis.rank() + 1);
            for (const auto& [i, c] : red.coefficients.entries()) p[i] = -c;
            p[basis.rank()] = 1;
            return p;
        }
        basis.insert(w);
        w = m.apply(w);
    }
}

struct Eigenspace {
    Rational value;
    std::vector<SparseVector> vectors;
};

// Eigen-decomposition of a square matrix diagonalizable over Q; throws otherwise.
std::vector<Eigenspace> rational_eigenspaces(const SparseMatrix& m) {
    const std::size_t k = m.rows();
    std::vector<Eigenspace> spaces;
    EchelonBasis found(k);
    auto add_value = [&](const Rational& lambda) {
        for (const auto& s : spaces)
            if (s.value == lambda) return;
        SparseMatrix shifted = m - SparseMatrix::identity(k, lambda);
        Eigenspace e{lambda, kernel_basis(shifted)};
        if (e.vectors.empty()) return;
        for (const auto& v : e.vectors) found.insert(v);
        spaces.push_back(std::move(e));
    };
    std::size_t probe = 0;
    while (found.rank() < k) {
        while (probe < k && found.reduce(SparseVector::unit(k, probe)).remainder.is_zero()) ++probe;
        if (probe == k) break;
        std::size_t before = found.rank();
        for (const auto& r : rational_roots(krylov_min_poly(m, SparseVector::unit(k, probe)))) add_value(r);
        if (found.rank() == before)
            throw Error(ErrorCode::NotDiagonalizable, "matrix is not diagonalizable with rational eigenvalues");
    }
    return spaces;
}

// Matrix of m restricted to the invariant subspace spanned by `basis`, in those coordinates.
SparseMatrix restrict_to(const SparseMatrix& m, const std::vector<SparseVector>& basis, const SpanSolver& solver) {
    std::vector<SparseVector> cols;
    cols.reserve(basis.size());
    for (const auto& b : basis) {
        auto c = solver.solve(m.apply(b));
        if (!c) throw Error(ErrorCode::NotDiagonalizable, "seed elements do not commute");
        cols.push_back(std::move(*c));
    }
    return SparseMatrix::from_rows(basis.size(), std::move(cols)).transpose();
}

SparseVector lift(const std::vector<SparseVector>& basis, const SparseVector& coords) {
    SparseVector out(basis.front().dim());
    for (const auto& [i, c] : coords.entries()) out.axpy(c, basis[i]);
    return out;
}

struct Piece {
    std::vector<SparseVector> basis;
    std::vector<Rational> values;  // eigenvalue of each operator processed so far
};

// Refines each piece into eigenspaces of op(piece).
template <class OpFor>
std::vector<Piece> refine(std::vector<Piece> pieces, OpFor op_for) {
    std::vector<Piece> out;
    for (auto& piece : pieces) {
        const SparseMatrix* op = op_for(piece);
        if (!op) {
            out.push_back(std::move(piece));
            continue;
        }
        SpanSolver solver(piece.basis);
        SparseMatrix local = restrict_to(*op, piece.basis, solver);
        for (auto& e : rational_eigenspaces(local)) {
            Piece child;
            child.values = piece.values;
            child.values.push_back(e.value);
            for (const auto& v : e.vectors) child.basis.push_back(lift(piece.basis, v));
            out.push_back(std::move(child));
        }
    }
    return out;
}

}  // namespace

JointWeights joint_weights(const std::vector<SparseMatrix>& commuting, std::size_t dim) {
    JointWeights jw;
    if (dim == 0) return jw;
    const std::size_t r = commuting.size();
    std::vector<SparseMatrix> squares;
    for (const auto& a : commuting) squares.push_back(a * a);

    std::vector<Piece> pieces(1);
    for (std::size_t i = 0; i < dim; ++i) pieces[0].basis.push_back(SparseVector::unit(dim, i));
    for (std::size_t j = 0; j < r; ++j)
        pieces = refine(std::move(pieces), [&](const Piece&) { return &squares[j]; });

    // absolute values |beta_j| from A_j^2 = -beta_j^2
    for (auto& piece : pieces) {
        std::vector<Rational> abs_beta;
        for (const auto& v : piece.values) {
            Rational neg = -v;
            if (neg.sign() < 0 || !neg.is_square())
                throw Error(ErrorCode::NotDiagonalizable, "eigenvalue is not imaginary with rational modulus");
            abs_beta.push_back(neg.sqrt_exact());
        }
        auto lead = std::find_if(abs_beta.begin(), abs_beta.end(), [](const Rational& b) { return !b.is_zero(); });
        if (lead == abs_beta.end()) {
            for (const auto& a : commuting)
                for (const auto& v : piece.basis)
                    if (!a.apply(v).is_zero())
                        throw Error(ErrorCode::NotDiagonalizable, "nilpotent action on the zero weight space");
            jw.zero_dim += piece.basis.size();
            continue;
        }
        const std::size_t j0 = static_cast<std::size_t>(lead - abs_beta.begin());
        // relative signs from A_{j0} A_l = -beta_{j0} beta_l
        std::vector<Piece> parts(1);
        parts[0].basis = piece.basis;
        std::vector<SparseMatrix> products;
        std::vector<std::size_t> partners;
        for (std::size_t l = j0 + 1; l < r; ++l) {
            if (abs_beta[l].is_zero()) continue;
            products.push_back(commuting[j0] * commuting[l]);
            partners.push_back(l);
        }
        for (std::size_t p = 0; p < products.size(); ++p)
            parts = refine(std::move(parts), [&](const Piece&) { return &products[p]; });
        for (auto& part : parts) {
            if (part.basis.size() % 2 != 0)
                throw Error(ErrorCode::NotDiagonalizable, "odd-dimensional real weight space");
            std::vector<Rational> beta(r);
            beta[j0] = abs_beta[j0];
            for (std::size_t p = 0; p < partners.size(); ++p) {
                const std::size_t l = partners[p];
                Rational s = -part.values[p] / (abs_beta[j0] * abs_beta[l]);
                if (!(s == Rational(1) || s == Rational(-1)))
                    throw Error(ErrorCode::NotDiagonalizable, "inconsistent joint eigenvalues");
                beta[l] = s * abs_beta[l];
            }
            std::vector<Rational> neg(r);
            for (std::size_t j = 0; j < r; ++j) neg[j] = -beta[j];
            for (std::size_t c = 0; c < part.basis.size() / 2; ++c) {
                jw.weights.push_back(beta);
                jw.weights.push_back(neg);
            }
        }
    }
    std::sort(jw.weights.begin(), jw.weights.end());
    return jw;
}

RootData cartan_and_roots(const LieAlgebra& l, const std::vector<std::size_t>& cartan_seed) {
    std::vector<SparseMatrix> ads;
    for (std::size_t i : cartan_seed) {
        if (i >= l.dim()) throw Error(ErrorCode::DimensionMismatch, "Cartan seed index out of range");
        ads.push_back(l.ad_basis(i));
    }
    JointWeights jw = joint_weights(ads, l.dim());
    if (jw.zero_dim != cartan_seed.size())
        throw Error(ErrorCode::NotDiagonalizable, "seed is not a maximal torus (zero weight space has dimension " +
                                                      std::to_string(jw.zero_dim) + ")");
    RootData rd;
    rd.rank = cartan_seed.size();
    rd.roots = std::move(jw.weights);
    return rd;
}

SparseMatrix root_metric(const LieAlgebra& l, const std::vector<std::size_t>& cartan_seed) {
    const std::size_t r = cartan_seed.size();
    std::vector<SparseMatrix> ads;
    for (std::size_t i : cartan_seed) ads.push_back(l.ad_basis(i));
    SparseMatrix g(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) g.set(a, b, -trace_product(ads[a], ads[b]));
    return inverse(g);
}

std::size_t root_graph_components(const std::vector<std::vector<Rational>>& roots, const SparseMatrix& metric) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<SparseVector> vecs, images;
    for (const auto& r : roots) {
        vecs.push_back(SparseVector::from_dense(r));
        images.push_back(metric.apply(vecs.back()));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!vecs[a].dot(images[b]).is_zero()) parent[find(a)] = find(b);
    std::size_t comps = 0;
    for (std::size_t a = 0; a < n; ++a)
        if (find(a) == a) ++comps;
    return comps;
}

}  // namespace lieforge
