#include <random>

#include "doctest.h"
#include "lieforge/error.hpp"
#include "lieforge/linalg.hpp"

using namespace lieforge;

namespace {

Rational random_rational(std::mt19937_64& rng, bool allow_huge) {
    std::uniform_int_distribution<std::int64_t> small(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 12);
    if (allow_huge && rng() % 4 == 0) {
        std::uniform_int_distribution<std::int64_t> huge(std::numeric_limits<std::int64_t>::min() / 2,
                                                         std::numeric_limits<std::int64_t>::max() / 2);
        std::int64_t d = huge(rng);
        if (d == 0) d = 1;
        return Rational(huge(rng), d);
    }
    return Rational(small(rng), den(rng));
}

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
    SparseMatrix m(rows, cols);
    std::uniform_real_distribution<double> coin(0, 1);
    std::uniform_int_distribution<int> val(-3, 3);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) < density) m.set(r, c, val(rng));
    // plant dependent rows so kernels and rank deficits actually occur
    if (rows >= 3) {
        SparseVector dep = m.row(0);
        dep.axpy(Rational(2, 3), m.row(1));
        m.row(rows - 1) = dep;
    }
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic matches GMP and round-trips") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 4000; ++trial) {
        Rational a = random_rational(rng, true), b = random_rational(rng, true);
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        CHECK(((a + b) - b) == a);
        if (!b.is_zero()) {
            CHECK((a / b).to_mpq() == qa / qb);
            CHECK(((a * b) / b) == a);
        }
        CHECK((a < b) == (qa < qb));
    }
}

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
    CHECK_FALSE(Rational(2).is_square());
    // overflow of the small form spills to GMP and comes back when it fits again
    Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(4);
    CHECK_FALSE(big.is_small());
    CHECK((big / Rational(4)).is_small());
    CHECK(std::hash<Rational>{}(Rational(1, 2)) == std::hash<Rational>{}(Rational(2, 4)));
}

TEST_CASE("kernel_basis and rank on trivial examples") {
    CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
    CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);
    CHECK(rank(SparseMatrix::identity(5)) == 5);

    SparseMatrix prop(2, 2);
    prop.set(0, 0, 1);
    prop.set(0, 1, 2);
    prop.set(1, 0, 3);
    prop.set(1, 1, 6);
    CHECK(rank(prop) == 1);
    auto k = kernel_basis(prop);
    REQUIRE(k.size() == 1);
    CHECK(prop.apply(k[0]).is_zero());
}

TEST_CASE("rank of the D8 simple-root Gram matrix") {
    // simple roots e_i - e_{i+1} (i < 8) and e_7 + e_8
    std::vector<SparseVector> roots;
    for (std::size_t i = 0; i + 1 < 8; ++i)
        roots.push_back(SparseVector::from_entries(8, {{i, 1}, {i + 1, -1}}));
    roots.push_back(SparseVector::from_entries(8, {{6, 1}, {7, 1}}));
    SparseMatrix gram(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) gram.set(i, j, roots[i].dot(roots[j]));
    CHECK(rank_fraction_free(gram) == 8);
    CHECK(rank(gram) == 8);
    CHECK(ldl_signature(gram) == Inertia{8, 0, 0});
}

TEST_CASE("rank-nullity, kernel correctness and pivot-order independence on random sparse matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 50, cols = 1 + rng() % 50;
        SparseMatrix m = random_sparse(rng, rows, cols, 0.15);
        auto kernel = kernel_basis(m);
        std::size_t rk = rank(m);
        CHECK(rk + kernel.size() == cols);
        for (const auto& v : kernel) CHECK(m.apply(v).is_zero());
        // the kernel vectors are independent
        CHECK(rank(SparseMatrix::from_rows(cols, kernel)) == kernel.size());
        CHECK(rank(m, PivotOrder::SparsestFirst) == rk);
        CHECK(kernel_basis(m, PivotOrder::SparsestFirst).size() == kernel.size());
        CHECK(rank_fraction_free(m) == rk);
    }
}

TEST_CASE("proportionality") {
    SparseVector w = SparseVector::from_entries(4, {{0, 1}, {3, Rational(-1, 2)}});
    CHECK(proportionality(SparseVector(4), w) == Rational(0));
    CHECK(proportionality(Rational(3) * w, w) == Rational(3));
    SparseVector v = w;
    v.set(1, 1);
    CHECK_FALSE(proportionality(v, w).has_value());
    CHECK_THROWS_AS(proportionality(w, SparseVector(4)), Error);
}

TEST_CASE("ldl_signature") {
    CHECK(ldl_signature(SparseMatrix::identity(4)) == Inertia{4, 0, 0});
    SparseMatrix d(3, 3);
    d.set(0, 0, 1);
    d.set(1, 1, -1);
    CHECK(ldl_signature(d) == Inertia{1, 1, 1});
    SparseMatrix hyperbolic(2, 2);
    hyperbolic.set(0, 1, 1);
    hyperbolic.set(1, 0, 1);
    CHECK(ldl_signature(hyperbolic) == Inertia{1, 1, 0});
    SparseMatrix skew(2, 2);
    skew.set(0, 1, 1);
    try {
        ldl_signature(skew);
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSymmetric);
    }
}

TEST_CASE("inverse and span solving") {
    SparseMatrix m(2, 2);
    m.set(0, 0, 2);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    CHECK(m * inverse(m) == SparseMatrix::identity(2));
    CHECK_THROWS_AS(inverse(SparseMatrix(2, 2)), Error);

    std::vector<SparseVector> family{SparseVector::from_entries(3, {{0, 1}, {1, 1}}),
                                     SparseVector::from_entries(3, {{1, 1}, {2, 2}})};
    SpanSolver solver(family);
    SparseVector target = Rational(3) * family[0] + Rational(-2) * family[1];
    auto coeffs = solver.solve(target);
    REQUIRE(coeffs);
    CHECK(coeffs->get(0) == 3);
    CHECK(coeffs->get(1) == -2);
    CHECK_FALSE(solver.solve(SparseVector::unit(3, 0)).has_value());
}
