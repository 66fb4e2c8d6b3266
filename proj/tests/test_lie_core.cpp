#include "doctest.h"
#include "lieforge/error.hpp"
#include "lieforge/lie_algebra.hpp"

using namespace lieforge;

namespace {

// [b_i, b_j] = scale * eps_ijk b_k
LieAlgebra su2(const Rational& scale) {
    LieAlgebra l({"x", "y", "z"}, SparseMatrix::identity(3));
    l.set_bracket(0, 1, SparseVector::unit(3, 2, scale));
    l.set_bracket(1, 2, SparseVector::unit(3, 0, scale));
    l.set_bracket(2, 0, SparseVector::unit(3, 1, scale));
    return l;
}

std::vector<SparseMatrix> so_basis(std::size_t n, std::vector<std::string>& labels) {
    std::vector<SparseMatrix> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            SparseMatrix m(n, n);
            m.set(a, b, -1);
            m.set(b, a, 1);
            out.push_back(std::move(m));
            labels.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
        }
    return out;
}

}  // namespace

TEST_CASE("su(2) passes verification and a perturbation fails") {
    LieAlgebra l = su2(1);
    auto rep = verify_structure(l);
    CHECK(rep.jacobi_ok);
    CHECK(rep.invariance_ok);

    LieAlgebra bad = su2(1);
    bad.set_bracket(0, 1, SparseVector::from_entries(3, {{0, Rational(1, 7)}, {2, 1}}));
    auto bad_rep = verify_structure(bad);
    CHECK_FALSE(bad_rep.jacobi_ok);
    CHECK(bad_rep.first_failure[0].has_value());
    CHECK_FALSE(verify_structure(bad, {JacobiMode::Sampled, 50, 3, 1}).jacobi_ok);
    CHECK(verify_structure(l, {JacobiMode::Sampled, 50, 3, 2}).jacobi_ok);
}

TEST_CASE("Killing forms") {
    // trace of ad_x ad_x for [.,.] = 2 eps: ad_x has entries +-2 in a 2x2 rotation block, so K = -8
    CHECK(killing_form(su2(2)) == SparseMatrix::identity(3, -8));
    LieAlgebra abelian({"a", "b"}, SparseMatrix::identity(2));
    CHECK(killing_form(abelian).is_zero());
}

TEST_CASE("roots of small algebras") {
    auto rd = cartan_and_roots(su2(1), {2});
    CHECK(rd.rank == 1);
    REQUIRE(rd.roots.size() == 2);
    CHECK(rd.roots[0] == std::vector<Rational>{-1});
    CHECK(rd.roots[1] == std::vector<Rational>{1});

    std::vector<std::string> labels;
    auto basis = so_basis(5, labels);
    LieAlgebra so5 = matrix_lie_algebra(basis, labels);
    CHECK(verify_structure(so5).jacobi_ok);
    // E1_2 and E3_4 are indices 0 and 7
    auto roots = cartan_and_roots(so5, {0, 7});
    CHECK(roots.roots.size() == 8);
    for (const auto& r : roots.roots) {
        Rational n2 = r[0] * r[0] + r[1] * r[1];
        CHECK((n2 == Rational(1) || n2 == Rational(2)));
    }
    CHECK(root_graph_components(roots.roots, root_metric(so5, {0, 7})) == 1);
    CHECK(ldl_signature(killing_form(so5)) == Inertia{0, 10, 0});

    // a non-commuting seed is rejected
    CHECK_THROWS_AS(cartan_and_roots(so5, {0, 1}), Error);
    // a torus that is too small leaves a zero weight space larger than the seed
    CHECK_THROWS_AS(cartan_and_roots(so5, {0}), Error);
}

TEST_CASE("so(4) splits into two components") {
    std::vector<std::string> labels;
    auto basis = so_basis(4, labels);
    LieAlgebra so4 = matrix_lie_algebra(basis, labels);
    // E1_2 index 0, E3_4 index 5
    auto rd = cartan_and_roots(so4, {0, 5});
    CHECK(rd.roots.size() == 4);
    CHECK(root_graph_components(rd.roots, root_metric(so4, {0, 5})) == 2);
}

TEST_CASE("structure-constant files round-trip byte for byte") {
    std::vector<std::string> labels;
    auto basis = so_basis(5, labels);
    LieAlgebra so5 = matrix_lie_algebra(basis, labels);
    std::string text = write_structure_constants(so5);
    CHECK(text.rfind("lie-sc v1 dim=10\nlabels E1_2,E1_3,", 0) == 0);
    LieAlgebra back = parse_structure_constants(text);
    CHECK(write_structure_constants(back) == text);
    CHECK(back.form() == so5.form());
    CHECK(back.bracket(0, 1) == so5.bracket(0, 1));

    LieAlgebra halfs = su2(Rational(1, 2));
    std::string t2 = write_structure_constants(halfs);
    CHECK(t2.find("0 1 2 1/2\n") != std::string::npos);
    CHECK(write_structure_constants(parse_structure_constants(t2)) == t2);

    CHECK_THROWS_AS(parse_structure_constants("lie-sc v2 dim=1\nlabels a\n"), Error);
    CHECK_THROWS_AS(parse_structure_constants("lie-sc v1 dim=2\nlabels a,b\n1 0 0 1\n"), Error);
}

TEST_CASE("matrix algebras must close") {
    SparseMatrix a(2, 2), b(2, 2);
    a.set(0, 1, 1);
    b.set(1, 0, 1);
    CHECK_THROWS_AS(matrix_lie_algebra({a, b}, {"a", "b"}), Error);
}
