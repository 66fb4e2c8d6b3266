#include "lieforge/constructions.hpp"

#include <array>
#include <stdexcept>

#include "lieforge/error.hpp"
#include "lieforge/linalg.hpp"

namespace lieforge {

namespace {

SparseMatrix complex_unit_block() {
    SparseMatrix e(2, 2);
    e.set(0, 1, -1);
    e.set(1, 0, 1);
    return e;
}

void put_block(SparseMatrix& target, std::size_t row, std::size_t col, const SparseMatrix& block, const Rational& s) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (const auto& [j, x] : block.row(i).entries()) target.set(row + i, col + j, s * x);
}

// Product of quaternion units (0 = 1, 1 = i, 2 = j, 3 = k) as (sign, unit).
std::pair<int, int> quaternion_product(int a, int b) {
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (a == b) return {-1, 0};
    int c = 6 - a - b;
    bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return {cyclic ? 1 : -1, c};
}

SparseMatrix quaternion_left(int u) {
    SparseMatrix m(4, 4);
    for (int b = 0; b < 4; ++b) {
        auto [s, c] = quaternion_product(u, b);
        m.set(static_cast<std::size_t>(c), static_cast<std::size_t>(b), s);
    }
    return m;
}

SparseMatrix quaternion_right(int u) {
    SparseMatrix m(4, 4);
    for (int b = 0; b < 4; ++b) {
        auto [s, c] = quaternion_product(b, u);
        m.set(static_cast<std::size_t>(c), static_cast<std::size_t>(b), s);
    }
    return m;
}

std::string idx_label(const std::string& stem, std::size_t a, std::size_t b) {
    return stem + std::to_string(a + 1) + "_" + std::to_string(b + 1);
}

}  // namespace

OrthRep spin_orth_rep(const SpinRep& spin) {
    return make_orth_rep(spin.spin_basis, spin.labels(), SparseMatrix::identity(spin.dim_real));
}

OrthRep so_standard(std::size_t n) {
    std::vector<SparseMatrix> rho;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            SparseMatrix m(n, n);
            m.set(a, b, -1);
            m.set(b, a, 1);
            rho.push_back(std::move(m));
            labels.push_back(idx_label("E", a, b));
        }
    return make_orth_rep(std::move(rho), std::move(labels), SparseMatrix::identity(n));
}

OrthRep su_standard(std::size_t n, SparseMatrix* i_struct) {
    const std::size_t d = 2 * n;
    const SparseMatrix jc = complex_unit_block(), id2 = SparseMatrix::identity(2);
    std::vector<SparseMatrix> rho;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            SparseMatrix re(d, d), im(d, d);
            put_block(re, 2 * p, 2 * q, id2, 1);
            put_block(re, 2 * q, 2 * p, id2, -1);
            put_block(im, 2 * p, 2 * q, jc, 1);
            put_block(im, 2 * q, 2 * p, jc, 1);
            rho.push_back(std::move(re));
            labels.push_back(idx_label("R", p, q));
            rho.push_back(std::move(im));
            labels.push_back(idx_label("S", p, q));
        }
    for (std::size_t p = 0; p + 1 < n; ++p) {
        SparseMatrix h(d, d);
        put_block(h, 2 * p, 2 * p, jc, 1);
        put_block(h, 2 * p + 2, 2 * p + 2, jc, -1);
        rho.push_back(std::move(h));
        labels.push_back("H" + std::to_string(p + 1));
    }
    if (i_struct) {
        *i_struct = SparseMatrix(d, d);
        for (std::size_t p = 0; p < n; ++p) put_block(*i_struct, 2 * p, 2 * p, jc, 1);
    }
    return make_orth_rep(std::move(rho), std::move(labels), SparseMatrix::identity(d));
}

OrthRep sp_standard(std::size_t n, SparseMatrix* i_struct, SparseMatrix* j_struct) {
    const std::size_t d = 4 * n;
    static const char* units = "1ijk";
    std::vector<SparseMatrix> rho;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q)
            for (int u = (p == q ? 1 : 0); u < 4; ++u) {
                SparseMatrix m(d, d);
                SparseMatrix l = quaternion_left(u);
                if (p == q) {
                    put_block(m, 4 * p, 4 * p, l, 1);
                } else {
                    put_block(m, 4 * p, 4 * q, l, 1);
                    put_block(m, 4 * q, 4 * p, l, u == 0 ? -1 : 1);
                }
                rho.push_back(std::move(m));
                labels.push_back(std::string(1, units[u]) + std::to_string(p + 1) + "_" + std::to_string(q + 1));
            }
    auto right = [&](int u) {
        SparseMatrix m(d, d);
        for (std::size_t p = 0; p < n; ++p) put_block(m, 4 * p, 4 * p, quaternion_right(u), 1);
        return m;
    };
    if (i_struct) *i_struct = right(1);
    if (j_struct) *j_struct = right(2);
    return make_orth_rep(std::move(rho), std::move(labels), SparseMatrix::identity(d));
}

OrthRep so3_on_r7() {
    // cubic monomials x^a y^b z^c
    std::vector<std::array<int, 3>> mono;
    for (int a = 3; a >= 0; --a)
        for (int b = 3 - a; b >= 0; --b) mono.push_back({a, b, 3 - a - b});
    auto index_of = [&](std::array<int, 3> e) -> std::size_t {
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i] == e) return i;
        throw std::logic_error("monomial not found");
    };
    const std::size_t n = mono.size();
    // L = x_s d/dx_t - x_t d/dx_s for (s, t) = (1,2), (2,0), (0,1): rotations about x, y, z
    const std::array<std::pair<int, int>, 3> axes{{{1, 2}, {2, 0}, {0, 1}}};
    std::vector<SparseMatrix> ops;
    for (auto [s, t] : axes) {
        SparseMatrix op(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto e = mono[i];
            if (e[t] > 0) {  // x_s d/dx_t
                auto f = e;
                f[t] -= 1;
                f[s] += 1;
                op.set(index_of(f), i, op.get(index_of(f), i) + Rational(e[t]));
            }
            if (e[s] > 0) {  // - x_t d/dx_s
                auto f = e;
                f[s] -= 1;
                f[t] += 1;
                op.set(index_of(f), i, op.get(index_of(f), i) - Rational(e[s]));
            }
        }
        ops.push_back(std::move(op));
    }
    // Laplacian: cubic -> linear (x, y, z)
    SparseMatrix lap(3, n);
    for (std::size_t i = 0; i < n; ++i)
        for (int v = 0; v < 3; ++v) {
            auto e = mono[i];
            if (e[v] < 2) continue;
            int target = e[v] == 3 ? v : (e[(v + 1) % 3] == 1 ? (v + 1) % 3 : (v + 2) % 3);
            lap.set(static_cast<std::size_t>(target), i, lap.get(target, i) + Rational(e[v] * (e[v] - 1)));
        }
    std::vector<SparseVector> harmonic = kernel_basis(lap);
    SpanSolver solver(harmonic);
    std::vector<SparseMatrix> rho;
    for (const auto& op : ops) {
        std::vector<SparseVector> cols;
        for (const auto& h : harmonic) {
            auto c = solver.solve(op.apply(h));
            if (!c) throw Error(ErrorCode::NotRepresentation, "harmonic polynomials are not rotation invariant");
            cols.push_back(std::move(*c));
        }
        rho.push_back(SparseMatrix::from_rows(harmonic.size(), std::move(cols)).transpose());
    }
    // O(3)-invariant inner product <x^a, x^b> = a! delta_ab on monomials
    auto weight = [](const std::array<int, 3>& e) {
        std::int64_t w = 1;
        for (int v : e)
            for (int k = 2; k <= v; ++k) w *= k;
        return Rational(w);
    };
    const std::size_t m = harmonic.size();
    SparseMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational s;
            for (const auto& [k, x] : harmonic[i].entries()) s += x * harmonic[j].get(k) * weight(mono[k]);
            if (!s.is_zero()) gram.set(i, j, s);
        }
    return make_orth_rep(std::move(rho), {"Lx", "Ly", "Lz"}, std::move(gram));
}

OrthRep adjoint_rep(const LieAlgebra& h) {
    std::vector<SparseMatrix> rho;
    for (std::size_t i = 0; i < h.dim(); ++i) rho.push_back(h.ad_basis(i));
    OrthRep rep = make_orth_rep(std::move(rho), h.labels(), h.form());
    return rep;
}

// ---------------------------------------------------------------- named targets

namespace {

Construction plain(const std::string& name, OrthRep rep, std::vector<std::size_t> seed) {
    Construction c;
    c.name = name;
    c.base_h_dim = rep.h.dim();
    c.candidate = build_candidate(rep);
    c.rep = std::move(rep);
    c.cartan_seed = std::move(seed);
    return c;
}

Construction augmented(const std::string& name, const OrthRep& base, const AugmentationResult& aug,
                       std::vector<std::size_t> seed) {
    Construction c;
    c.name = name;
    c.base_h_dim = base.h.dim();
    c.c = aug.c;
    c.r = aug.r;
    c.rep = aug.augmented;
    c.candidate = aug.candidate;
    c.cartan_seed = std::move(seed);
    return c;
}

Construction from_spin(const std::string& name, int n, Chirality chirality) {
    SpinRep spin = build_spin_rep(n, chirality);
    OrthRep rep = spin_orth_rep(spin);
    std::vector<std::size_t> seed = spin.cartan;
    switch (tilde_extra(n)) {
        case TildeExtra::None: return plain(name, std::move(rep), std::move(seed));
        case TildeExtra::U1: {
            auto aug = complex_augment(rep, spin.structures.at(0));
            seed.push_back(rep.h.dim());
            return augmented(name, rep, aug, std::move(seed));
        }
        case TildeExtra::Sp1: {
            auto aug = quaternionic_augment(rep, spin.structures.at(0), spin.structures.at(1));
            seed.push_back(rep.h.dim());
            return augmented(name, rep, aug, std::move(seed));
        }
    }
    throw std::logic_error("unreachable");
}

std::size_t parse_suffix(const std::string& name, const std::string& stem) {
    std::size_t pos = 0;
    std::size_t n = std::stoul(name.substr(stem.size()), &pos);
    if (pos + stem.size() != name.size()) throw std::invalid_argument("bad target: " + name);
    return n;
}

}  // namespace

std::vector<std::string> construction_names() {
    return {"f4", "e6", "e7", "e8", "sp3", "n6", "cp<n>", "hp<n>", "sphere<n>"};
}

Construction construct(const std::string& name) {
    if (name == "f4") return from_spin(name, 9, Chirality::Full);
    if (name == "e8") return from_spin(name, 16, Chirality::Plus);
    if (name == "e6") return from_spin(name, 10, Chirality::Full);
    if (name == "e7") return from_spin(name, 12, Chirality::Plus);
    if (name == "sp3") return from_spin(name, 5, Chirality::Full);
    if (name == "n6") {
        Construction c = from_spin(name, 6, Chirality::Full);
        c.note = "spin(6)+u(1) on the 8-dimensional spin module has dimension 24 (an su(5)-sized algebra)";
        return c;
    }
    if (name.rfind("cp", 0) == 0) {
        std::size_t n = parse_suffix(name, "cp");
        if (n < 2) throw std::invalid_argument("cp<n> needs n >= 2");
        SparseMatrix i_struct;
        OrthRep rep = su_standard(n, &i_struct);
        auto aug = complex_augment(rep, i_struct);
        std::vector<std::size_t> seed;
        for (std::size_t k = 0; k < rep.h.dim(); ++k)
            if (rep.h.labels()[k][0] == 'H') seed.push_back(k);
        seed.push_back(rep.h.dim());
        return augmented(name, rep, aug, std::move(seed));
    }
    if (name.rfind("hp", 0) == 0) {
        std::size_t n = parse_suffix(name, "hp");
        if (n < 1) throw std::invalid_argument("hp<n> needs n >= 1");
        SparseMatrix i_struct, j_struct;
        OrthRep rep = sp_standard(n, &i_struct, &j_struct);
        auto aug = quaternionic_augment(rep, i_struct, j_struct);
        std::vector<std::size_t> seed;
        for (std::size_t p = 0; p < n; ++p) {
            std::string label = "i" + std::to_string(p + 1) + "_" + std::to_string(p + 1);
            for (std::size_t k = 0; k < rep.h.dim(); ++k)
                if (rep.h.labels()[k] == label) seed.push_back(k);
        }
        seed.push_back(rep.h.dim());
        return augmented(name, rep, aug, std::move(seed));
    }
    if (name.rfind("sphere", 0) == 0) {
        std::size_t n = parse_suffix(name, "sphere");
        if (n < 2) throw std::invalid_argument("sphere<n> needs n >= 2");
        OrthRep base = so_standard(n);
        // -trace/2 makes the E_ab orthonormal, so the candidate is so(n+1) with its usual normalization
        OrthRep rep = make_orth_rep(base.rho, base.h.labels(), base.b_m, SparseMatrix::identity(base.h.dim()));
        std::vector<std::size_t> seed;
        for (std::size_t k = 0; k < rep.h.dim(); ++k) {
            const std::string& l = rep.h.labels()[k];
            for (std::size_t j = 0; 2 * j + 1 < n; ++j)
                if (l == idx_label("E", 2 * j, 2 * j + 1)) seed.push_back(k);
        }
        std::size_t h = rep.h.dim();
        if (n % 2 == 1) seed.push_back(h + n - 1);
        return plain(name, std::move(rep), std::move(seed));
    }
    throw std::invalid_argument("unknown construction target: " + name);
}

}  // namespace lieforge
