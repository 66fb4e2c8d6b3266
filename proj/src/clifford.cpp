#include "lieforge/clifford.hpp"

#include <algorithm>
#include <array>

#include "lieforge/error.hpp"
#include "lieforge/linalg.hpp"

namespace lieforge {

// ---------------------------------------------------------------- table

std::uint64_t CliffordDescriptor::module_dim() const {
    std::uint64_t k = base_field == BaseField::R ? 1 : base_field == BaseField::C ? 2 : 4;
    return matrix_size * k;
}

CliffordDescriptor clifford_table(int n) {
    if (n < 1) throw std::invalid_argument("clifford_table: n must be >= 1");
    const int k = (n - 1) / 8;
    const int s = n - 8 * k;  // 1..8
    struct Row {
        int exp_offset;
        BaseField field;
        bool split;
    };
    static constexpr std::array<Row, 8> rows{{
        {0, BaseField::C, false},  // 8k+1
        {0, BaseField::H, false},  // 8k+2
        {0, BaseField::H, true},   // 8k+3
        {1, BaseField::H, false},  // 8k+4
        {2, BaseField::C, false},  // 8k+5
        {3, BaseField::R, false},  // 8k+6
        {3, BaseField::R, true},   // 8k+7
        {4, BaseField::R, false},  // 8k+8
    }};
    const Row& row = rows[s - 1];
    CliffordDescriptor d;
    d.n = n;
    d.base_field = row.field;
    d.split = row.split;
    d.matrix_size = std::uint64_t{1} << (4 * k + row.exp_offset);
    return d;
}

TildeExtra tilde_extra(int n) {
    switch (((n % 8) + 8) % 8) {
        case 0:
        case 1:
        case 7: return TildeExtra::None;
        case 2:
        case 6: return TildeExtra::U1;
        default: return TildeExtra::Sp1;
    }
}

std::string to_string(Chirality c) {
    switch (c) {
        case Chirality::Full: return "full";
        case Chirality::Plus: return "plus";
        case Chirality::Minus: return "minus";
    }
    return "?";
}

std::string to_string(RepType t) {
    switch (t) {
        case RepType::Real: return "real";
        case RepType::Complex: return "complex";
        case RepType::Quaternionic: return "quaternionic";
    }
    return "?";
}

// ---------------------------------------------------------------- matrix helpers

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    const std::size_t rb = b.rows(), cb = b.cols();
    SparseMatrix out(a.rows() * rb, a.cols() * cb);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, x] : a.row(i).entries())
            for (std::size_t k = 0; k < rb; ++k)
                for (const auto& [l, y] : b.row(k).entries()) out.set(i * rb + k, j * cb + l, x * y);
    return out;
}

SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, x] : a.row(i).entries()) out.set(i, j, x);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (const auto& [j, x] : b.row(i).entries()) out.set(a.rows() + i, a.cols() + j, x);
    return out;
}

namespace {

// Imaginary octonion units e1..e7 with e_a e_b = e_c for each cyclic triple.
constexpr std::array<std::array<int, 3>, 7> kFano{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

// Left multiplication by e_a on the octonions (basis e0..e7), truncated to the first `size` basis vectors.
SparseMatrix octonion_left(int a, std::size_t size) {
    std::array<std::array<std::pair<int, int>, 8>, 8> mult{};  // (sign, index)
    for (int b = 0; b < 8; ++b) {
        mult[0][b] = {1, b};
        mult[b][0] = {1, b};
    }
    for (int b = 1; b < 8; ++b) mult[b][b] = {-1, 0};
    for (const auto& t : kFano) {
        for (int r = 0; r < 3; ++r) {
            int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
            mult[x][y] = {1, z};
            mult[y][x] = {-1, z};
        }
    }
    SparseMatrix m(size, size);
    for (std::size_t b = 0; b < size; ++b) {
        auto [sign, c] = mult[a][b];
        m.set(static_cast<std::size_t>(c), b, sign);
    }
    return m;
}

SparseMatrix complex_unit() {
    SparseMatrix e(2, 2);
    e.set(0, 1, -1);
    e.set(1, 0, 1);
    return e;
}

std::vector<SparseMatrix> base_module(int p) {
    std::vector<SparseMatrix> gens;
    if (p == 0) return gens;
    if (p == 1) return {complex_unit()};
    if (p <= 3) {
        for (int a = 1; a <= p; ++a) gens.push_back(octonion_left(a, 4));
        return gens;
    }
    if (p <= 7) {
        for (int a = 1; a <= p; ++a) gens.push_back(octonion_left(a, 8));
        return gens;
    }
    // p == 8: [[0, L_a], [L_a, 0]] for a = 1..7 and [[0, -1], [1, 0]]
    SparseMatrix swap(2, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    for (int a = 1; a <= 7; ++a) gens.push_back(kron(swap, octonion_left(a, 8)));
    gens.push_back(kron(complex_unit(), SparseMatrix::identity(8)));
    return gens;
}

SparseMatrix product_of(const std::vector<SparseMatrix>& ms, std::size_t dim) {
    SparseMatrix p = SparseMatrix::identity(dim);
    for (const auto& m : ms) p = p * m;
    return p;
}

}  // namespace

std::vector<SparseMatrix> clifford_module(int p) {
    if (p < 0) throw std::invalid_argument("clifford_module: negative p");
    if (p <= 8) return base_module(p);
    std::vector<SparseMatrix> f = base_module(8);
    std::vector<SparseMatrix> inner = clifford_module(p - 8);
    const std::size_t m = inner.empty() ? 1 : inner.front().rows();
    SparseMatrix omega = product_of(f, 16);  // squares to +1, anticommutes with each F_i
    std::vector<SparseMatrix> gens;
    gens.reserve(static_cast<std::size_t>(p));
    for (const auto& fi : f) gens.push_back(kron(fi, SparseMatrix::identity(m)));
    for (const auto& a : inner) gens.push_back(kron(omega, a));
    return gens;
}

// ---------------------------------------------------------------- spin representations

std::vector<std::string> SpinRep::labels() const {
    std::vector<std::string> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back("L" + std::to_string(a) + "_" + std::to_string(b));
    return out;
}

namespace {

struct SpinData {
    std::vector<SparseMatrix> basis;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::size_t> cartan;
};

SpinData spin_from_clifford(int n, const std::vector<SparseMatrix>& gamma) {
    SpinData d;
    const Rational half(1, 2);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            SparseMatrix m = b < n ? gamma[a - 1] * gamma[b - 1] : gamma[a - 1];
            m *= half;
            if (b == a + 1 && a % 2 == 1) d.cartan.push_back(d.basis.size());
            d.basis.push_back(std::move(m));
            d.pairs.emplace_back(a, b);
        }
    }
    return d;
}

// Image of e_1 e_2 ... e_n; on an irreducible module it is +-Id.
int spin_volume_sign(int n, const std::vector<SparseMatrix>& gamma) {
    SpinData d = spin_from_clifford(n, gamma);
    const std::size_t dim = gamma.front().rows();
    SparseMatrix v = SparseMatrix::identity(dim);
    for (std::size_t idx : d.cartan) v = v * (Rational(2) * d.basis[idx]);
    if (v == SparseMatrix::identity(dim)) return 1;
    if (v == SparseMatrix::identity(dim, -1)) return -1;
    throw Error(ErrorCode::UnexpectedCentralizer, "volume element is not scalar on the Clifford module");
}

std::vector<SparseMatrix> negated(std::vector<SparseMatrix> gens) {
    for (auto& g : gens) g *= Rational(-1);
    return gens;
}

}  // namespace

SpinRep build_spin_rep(int n, Chirality chirality) {
    if (n < 3) throw std::invalid_argument("build_spin_rep: n must be >= 3");
    const bool reducible = n % 4 == 0;
    if (chirality != Chirality::Full && !reducible)
        throw Error(ErrorCode::BadChirality, "half-spin representations need n = 0 mod 4, got n = " + std::to_string(n));

    std::vector<SparseMatrix> module = clifford_module(n - 1);
    SpinRep rep;
    rep.n = n;
    rep.chirality = chirality;

    std::vector<SparseMatrix> gamma;
    std::vector<SparseMatrix> plus_half;
    if (reducible) {
        // on the plus half e_1...e_n acts by i^{n/2}, i.e. (-1)^{n/4}
        const int target = (n / 4) % 2 == 0 ? 1 : -1;
        std::vector<SparseMatrix> plus = spin_volume_sign(n, module) == target ? module : negated(module);
        std::vector<SparseMatrix> minus = negated(plus);
        plus_half = plus;
        if (chirality == Chirality::Plus) {
            gamma = std::move(plus);
        } else if (chirality == Chirality::Minus) {
            gamma = std::move(minus);
        } else {
            for (std::size_t i = 0; i < plus.size(); ++i) gamma.push_back(block_diag(plus[i], minus[i]));
        }
    } else {
        gamma = std::move(module);
    }

    rep.dim_real = gamma.front().rows();
    SpinData d = spin_from_clifford(n, gamma);
    rep.clifford = std::move(gamma);
    rep.spin_basis = std::move(d.basis);
    rep.pairs = std::move(d.pairs);
    rep.cartan = std::move(d.cartan);

    if (reducible && chirality == Chirality::Full) {
        rep.type = detect_type(plus_half, plus_half.front().rows()).type;
    } else {
        TypeDetection t = detect_type(rep.clifford, rep.dim_real);
        rep.type = t.type;
        rep.structures = std::move(t.structures);
    }
    return rep;
}

// ---------------------------------------------------------------- commutant and type

std::vector<SparseMatrix> centralizer(const std::vector<SparseMatrix>& generators, std::size_t dim) {
    // Breadth-first orbit of e_0 under words in the generators, keeping independent vectors.
    std::vector<SparseVector> orbit;
    std::vector<SparseMatrix> words;
    EchelonBasis span(dim);
    orbit.push_back(SparseVector::unit(dim, 0));
    words.push_back(SparseMatrix::identity(dim));
    span.insert(orbit.front());
    for (std::size_t q = 0; q < orbit.size() && orbit.size() < dim; ++q) {
        for (const auto& g : generators) {
            SparseVector w = g.apply(orbit[q]);
            if (span.insert(w)) {
                orbit.push_back(std::move(w));
                words.push_back(g * words[q]);
                if (orbit.size() == dim) break;
            }
        }
    }
    if (orbit.size() != dim)
        throw Error(ErrorCode::UnexpectedCentralizer, "representation is not cyclic on e_0 (reducible input?)");

    // X w_b = W_b x for the unknown x = X e_0; impose X (g w_b) = g X w_b.
    SpanSolver solver(orbit);
    std::vector<SparseVector> rows;
    for (const auto& g : generators) {
        for (std::size_t b = 0; b < dim; ++b) {
            auto coeffs = solver.solve(g.apply(orbit[b]));
            SparseMatrix lhs(dim, dim);
            for (const auto& [c, x] : coeffs->entries()) lhs = lhs + x * words[c];
            SparseMatrix eq = lhs - g * words[b];
            for (const auto& r : eq.row_list())
                if (!r.is_zero()) rows.push_back(r);
        }
    }
    std::vector<SparseVector> kernel = kernel_basis(SparseMatrix::from_rows(dim, std::move(rows)));

    std::vector<SparseVector> cols_w = orbit;
    SparseMatrix w_mat = SparseMatrix::from_rows(dim, cols_w).transpose();  // columns are w_b
    SparseMatrix w_inv = inverse(w_mat);
    std::vector<SparseMatrix> out;
    for (const auto& x : kernel) {
        std::vector<SparseVector> ycols;
        ycols.reserve(dim);
        for (std::size_t b = 0; b < dim; ++b) ycols.push_back(words[b].apply(x));
        SparseMatrix y = SparseMatrix::from_rows(dim, std::move(ycols)).transpose();
        out.push_back(y * w_inv);
    }
    return out;
}

namespace {

// -tr(XY)/d, positive definite on traceless commutant elements
Rational commutant_inner(const SparseMatrix& x, const SparseMatrix& y, std::size_t dim) {
    return -trace_product(x, y) / Rational(static_cast<std::int64_t>(dim));
}

SparseMatrix traceless(const SparseMatrix& x, std::size_t dim) {
    Rational t = x.trace() / Rational(static_cast<std::int64_t>(dim));
    return x - SparseMatrix::identity(dim, t);
}

std::vector<SparseMatrix> orthogonalize(std::vector<SparseMatrix> xs, std::size_t dim) {
    std::vector<SparseMatrix> out;
    for (auto& x : xs) {
        for (const auto& u : out) x = x - (commutant_inner(x, u, dim) / commutant_inner(u, u, dim)) * u;
        if (!x.is_zero()) out.push_back(std::move(x));
    }
    return out;
}

// A unit-norm element (square = -Id) in the span of pairwise orthogonal traceless elements.
SparseMatrix rational_unit(const std::vector<SparseMatrix>& basis, std::size_t dim) {
    std::vector<Rational> norms;
    for (const auto& b : basis) norms.push_back(commutant_inner(b, b, dim));
    const int bound = 6;
    std::vector<int> coeff(basis.size(), -bound);
    for (int total = 1; total <= bound * static_cast<int>(basis.size()); ++total) {
        std::fill(coeff.begin(), coeff.end(), -bound);
        while (true) {
            int l1 = 0;
            for (int c : coeff) l1 += std::abs(c);
            if (l1 == total) {
                Rational n2;
                for (std::size_t i = 0; i < basis.size(); ++i) n2 += Rational(coeff[i] * coeff[i]) * norms[i];
                if (n2.is_square()) {
                    Rational s = n2.sqrt_exact().inverse();
                    SparseMatrix u(dim, dim);
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        if (coeff[i] != 0) u = u + (Rational(coeff[i]) * s) * basis[i];
                    return u;
                }
            }
            std::size_t k = 0;
            while (k < coeff.size() && coeff[k] == bound) coeff[k++] = -bound;
            if (k == coeff.size()) break;
            ++coeff[k];
        }
    }
    throw Error(ErrorCode::UnexpectedCentralizer, "no rational complex structure in the commutant");
}

void require_complex_structure(const SparseMatrix& j, std::size_t dim) {
    if (!(j * j == SparseMatrix::identity(dim, -1)))
        throw Error(ErrorCode::UnexpectedCentralizer, "commutant element does not square to -Id");
    if (!(j.transpose() == Rational(-1) * j))
        throw Error(ErrorCode::UnexpectedCentralizer, "complex structure is not orthogonal");
}

}  // namespace

TypeDetection detect_type(const std::vector<SparseMatrix>& generators, std::size_t dim) {
    std::vector<SparseMatrix> comm = centralizer(generators, dim);
    TypeDetection det;
    det.centralizer_dim = comm.size();
    if (comm.size() == 1) {
        det.type = RepType::Real;
        return det;
    }
    if (comm.size() != 2 && comm.size() != 4)
        throw Error(ErrorCode::UnexpectedCentralizer, "commutant has dimension " + std::to_string(comm.size()));

    std::vector<SparseMatrix> tl;
    for (const auto& c : comm) tl.push_back(traceless(c, dim));
    std::vector<SparseMatrix> ortho = orthogonalize(std::move(tl), dim);
    if (ortho.size() != comm.size() - 1)
        throw Error(ErrorCode::UnexpectedCentralizer, "commutant does not contain the identity");
    for (const auto& u : ortho) {
        SparseMatrix sq = u * u;
        Rational q = -commutant_inner(u, u, dim);
        if (!(sq == SparseMatrix::identity(dim, q)) || q.sign() >= 0)
            throw Error(ErrorCode::UnexpectedCentralizer, "commutant is not a division algebra");
    }

    SparseMatrix i_struct = rational_unit(ortho, dim);
    require_complex_structure(i_struct, dim);
    det.structures.push_back(i_struct);
    if (comm.size() == 2) {
        det.type = RepType::Complex;
        return det;
    }
    std::vector<SparseMatrix> rest{i_struct};
    for (const auto& u : ortho) rest.push_back(u);
    rest = orthogonalize(std::move(rest), dim);
    rest.erase(rest.begin());
    SparseMatrix j_struct = rational_unit(rest, dim);
    require_complex_structure(j_struct, dim);
    if (!((i_struct * j_struct + j_struct * i_struct).is_zero()))
        throw Error(ErrorCode::UnexpectedCentralizer, "quaternionic structures do not anticommute");
    det.structures.push_back(j_struct);
    det.type = RepType::Quaternionic;
    return det;
}

TypeDetection detect_type(const SpinRep& rep) {
    if (rep.chirality == Chirality::Full && rep.n % 4 == 0)
        throw Error(ErrorCode::UnexpectedCentralizer, "full spin representation is reducible for n = 0 mod 4");
    return detect_type(rep.clifford, rep.dim_real);
}

SparseMatrix invariant_inner_product(const SpinRep& rep) {
    for (const auto& a : rep.spin_basis)
        if (!(a.transpose() == Rational(-1) * a))
            throw Error(ErrorCode::NoInvariantMetric, "spin generators are not skew for the standard inner product");
    return SparseMatrix::identity(rep.dim_real);
}

}  // namespace lieforge
