#include <cstdlib>
#include <set>

#include "doctest.h"
#include "lieforge/characters.hpp"
#include "lieforge/error.hpp"
#include "lieforge/tables.hpp"
#include "lieforge/weights.hpp"
#include "oracle.hpp"

using namespace lieforge;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::ParseError;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Weyl dimension formula prod_{a > 0} <lambda + rho, a> / <rho, a>
Rational weyl_dimension(const RootDatum& d, const Weight& lambda) {
    Rational dim(1);
    Weight lr = lambda;
    for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += d.rho()[i];
    for (const auto& a : d.positive_roots()) dim *= Rational(d.inner(lr, a), d.inner(d.rho(), a));
    return dim;
}

Weight doubled(std::initializer_list<int> xs) { return Weight(xs); }

}  // namespace

TEST_CASE("half-spin weights") {
    auto w16 = halfspin_weights(16, Chirality::Plus);
    CHECK(w16.size() == 128);
    Metric metric = standard_metric(8);
    for (const auto& w : w16) CHECK(doubled_inner(w, w, metric) == 2);
    CHECK(halfspin_weights(8, Chirality::Plus).size() == 8);
    CHECK(halfspin_weights(9, Chirality::Full).size() == 16);
    CHECK(halfspin_weights(10, Chirality::Full, true).size() == 32);
    CHECK(code_of([] { halfspin_weights(9, Chirality::Plus); }) == ErrorCode::BadChirality);

    // plus and minus partition the full set by the parity of minus signs
    auto plus = halfspin_weights(12, Chirality::Plus), minus = halfspin_weights(12, Chirality::Minus);
    std::set<Weight> all(plus.begin(), plus.end());
    all.insert(minus.begin(), minus.end());
    CHECK(all.size() == 64);
}

TEST_CASE("q ratios of the case analysis") {
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        const std::size_t m = 4 * k;
        Metric metric = standard_metric(m);
        Weight beta(m, 1);
        Weight a2(m, 0), a1(m, 0);
        a2[0] = a2[1] = 2;
        a1[0] = 2;
        CHECK(q_ratio(a2, beta, metric) == Rational(2, k));
        CHECK(q_ratio(a1, beta, metric) == Rational(1, k));
        // n = 8k - 1: alpha = e_1, beta = 1/2 (e_1 + ... + e_{4k-1}); 2<a,b>/<b,b> = 1/((4k-1)/4)
        Metric odd = standard_metric(m - 1);
        Weight b_odd(m - 1, 1), a_odd(m - 1, 0);
        a_odd[0] = 2;
        CHECK(q_ratio(a_odd, b_odd, odd) == Rational(4, 4 * k - 1));
    }
    Metric metric = standard_metric(2);
    CHECK(code_of([&] { q_ratio(doubled({2, 0}), doubled({0, 0}), metric); }) == ErrorCode::ZeroBeta);
    // scale invariance
    CHECK(q_ratio(doubled({6, 6}), doubled({3, 3}), metric) == q_ratio(doubled({2, 2}), doubled({1, 1}), metric));
    Metric scaled = {Rational(5), Rational(5)};
    CHECK(q_ratio(doubled({2, 0}), doubled({1, 1}), scaled) == q_ratio(doubled({2, 0}), doubled({1, 1}), metric));
}

TEST_CASE("extension norm") {
    CHECK(solve_extension_norm(6) == 1);
    CHECK(solve_extension_norm(10) == 3);
    CHECK(solve_extension_norm(14) == 5);
    for (std::size_t k = 1; k <= 3; ++k) {
        Rational x = solve_extension_norm(4 * k + 2);
        Metric metric = standard_metric(2 * k + 1, x);
        Weight gamma(2 * k + 2, 0), alpha(2 * k + 2, 1);
        gamma[0] = gamma[1] = 2;
        CHECK(q_ratio(gamma, alpha, metric) == Rational(2, static_cast<std::int64_t>(k)));
    }
    CHECK_THROWS_AS(solve_extension_norm(8), std::invalid_argument);
}

TEST_CASE("Lie type scan") {
    std::set<std::size_t> feasible;
    for (const auto& c : lie_type_scan(5, 24))
        if (c.feasible) feasible.insert(c.n);
    CHECK(feasible == std::set<std::size_t>{5, 6, 8, 9, 10, 12, 16});
    CHECK_FALSE(lie_type_case(15).feasible);
    CHECK(*lie_type_case(15).witness_q == Rational(4, 7));
    CHECK_FALSE(lie_type_case(17).feasible);
    CHECK(*lie_type_case(17).witness_q == Rational(1, 2));
    CHECK(*lie_type_case(10).x == 3);
    CHECK(*lie_type_case(6).x == 1);
    // the quaternionic solutions have the sp(1) root of the same length as the long spin(n) roots
    CHECK(*lie_type_case(5).x == 2);
    CHECK(*lie_type_case(12).x == 2);
    CHECK_THROWS_AS(lie_type_scan(4, 6), std::invalid_argument);
}

TEST_CASE("root axioms recognise known root systems") {
    Metric m2 = standard_metric(2);
    // G2 in the plane would need irrational coordinates; use B2 and a broken variant instead
    std::vector<Weight> b2 = so_roots(5);
    CHECK_FALSE(root_axiom_violation(b2, m2).has_value());
    std::vector<Weight> broken = b2;
    broken.push_back(doubled({1, 1}));
    broken.push_back(doubled({-1, -1}));
    CHECK(root_axiom_violation(broken, m2).has_value());
}

TEST_CASE("character dimensions and the Newton recursion") {
    auto d4 = make_datum(Family::D, 4);
    auto a3 = make_datum(Family::A, 3);
    auto c2 = make_datum(Family::C, 2);
    auto b3 = make_datum(Family::B, 3);
    for (const Character& base : {spin_char(d4, Chirality::Plus), standard_char(a3), adjoint_char(c2), spin_char(b3, Chirality::Full)}) {
        const std::int64_t n = base.dim();
        for (std::size_t k = 0; k <= 4; ++k) {
            CAPTURE(k);
            Character e = ext_power_char(base, k);
            CHECK(e.dim() == binomial(n, static_cast<std::int64_t>(k)));
            CHECK(e == ext_power_by_subsets(base, k));
            CHECK(sym_power_char(base, k).dim() == binomial(n + static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(k)));
            CHECK_NOTHROW(require_weyl_symmetric(e));
        }
    }
    Character l2 = ext_power_char(standard_char(a3), 2);
    CHECK(l2 == irreducible_char(a3, a3->weight({1, 1, 0, 0})));
    CHECK(tensor_char(standard_char(a3), dual_char(standard_char(a3))) == adjoint_char(a3) + trivial_char(a3));
}

TEST_CASE("Freudenthal against the Weyl dimension formula") {
    struct Case {
        Family f;
        std::size_t rank;
        std::vector<Rational> hw;
    };
    std::vector<Case> cases = {
        {Family::A, 2, {2, 1, 0}},      {Family::A, 3, {3, 1, 1, 0}},          {Family::B, 2, {2, 1}},
        {Family::B, 3, {Rational(3, 2), Rational(1, 2), Rational(1, 2)}}, {Family::C, 3, {2, 1, 0}},
        {Family::D, 4, {2, 1, 1, 0}},   {Family::D, 5, {Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}},
        {Family::C, 4, {1, 1, 1, 1}},
    };
    for (const auto& c : cases) {
        auto d = make_datum(c.f, c.rank);
        Weight hw = d->weight(c.hw);
        CAPTURE(d->name());
        CAPTURE(format_weight(*d, hw));
        Character ch = irreducible_char(d, hw);
        CHECK(Rational(ch.dim()) == weyl_dimension(*d, hw));
        auto dec = decompose(ch);
        REQUIRE(dec.size() == 1);
        CHECK(dec[0].highest == hw);
    }
}

TEST_CASE("spin plethysms") {
    auto d8 = make_datum(Family::D, 8);
    Character s16 = spin_char(d8, Chirality::Plus);
    auto dec = decompose(ext_power_char(s16, 2));
    REQUIRE(dec.size() == 2);
    std::set<Weight> got{dec[0].highest, dec[1].highest};
    CHECK(got == std::set<Weight>{d8->weight({1, 1, 0, 0, 0, 0, 0, 0}), d8->weight({1, 1, 1, 1, 1, 1, 0, 0})});
    CHECK(dec[0].multiplicity == 1);
    CHECK(dec[1].multiplicity == 1);
    // dim Lambda^2 Sigma_8k^+ = 2^{4k-2}(2^{4k-1}-1)
    CHECK(ext_power_char(spin_char(make_datum(Family::D, 4), Chirality::Plus), 2).dim() == 28);
    CHECK(ext_power_char(s16, 2).dim() == 8128);

    auto b4 = make_datum(Family::B, 4);
    CHECK(trivial_multiplicity(ext_power_char(spin_char(b4, Chirality::Full), 4)) == 0);
    auto d6 = make_datum(Family::D, 6);
    CHECK(trivial_multiplicity(ext_power_char(spin_char(d6, Chirality::Plus), 2)) == 1);

    // Lambda^2 Sigma_10 over spin(10) + u(1), restricted to spin(10), is Lambda^3 C^10
    auto d5u = make_datum(Family::D, 5, Extension::U1);
    Character s10(d5u);
    for (const auto& w : halfspin_weights(10, Chirality::Full, true))
        if (w.back() > 0) s10.add(w, 1);
    CHECK(s10.dim() == 16);
    Character l2 = restrict_to_main(ext_power_char(s10, 2));
    auto d5 = l2.datum();
    auto dec10 = decompose(l2);
    REQUIRE(dec10.size() == 1);
    CHECK(dec10[0].highest == d5->weight({1, 1, 1, 0, 0}));
    CHECK(irreducibility_norm(ext_power_char(s10, 2)) == 1);
}

TEST_CASE("irreducibility norms") {
    auto a4 = make_datum(Family::A, 4);
    CHECK(irreducibility_norm(ext_power_char(standard_char(a4), 2)) == 1);
    // Lambda^2 of Sym^3 C^2 has weights {4,2,0,0,-2,-4} = V_4 + V_0
    auto c1 = make_datum(Family::C, 1);
    Character sym3 = sym_power_char(standard_char(c1), 3);
    Character l2 = ext_power_char(sym3, 2);
    CHECK(irreducibility_norm(l2) == 2);
    l2 -= trivial_char(c1);
    CHECK(irreducibility_norm(l2) == 1);
    CHECK(l2.dim() == 5);
}

TEST_CASE("weight table and Weyl sweep agree on trivial multiplicities") {
    auto d4 = make_datum(Family::D, 4);
    auto b3 = make_datum(Family::B, 3);
    auto a3 = make_datum(Family::A, 3);
    auto c2s = make_datum(Family::C, 2, Extension::Sp1);
    Character quat(c2s);
    for (const auto& [w, m] : standard_char(make_datum(Family::C, 2)).mult())
        for (int s : {1, -1}) {
            Weight e = w;
            e.push_back(s);
            quat.add(e, m);
        }
    for (const Character& ch : {ext_power_char(adjoint_char(d4), 3), ext_power_char(spin_char(b3, Chirality::Full), 4),
                                tensor_char(standard_char(a3), dual_char(standard_char(a3))), ext_power_char(quat, 4)}) {
        std::int64_t direct = 0;
        for (const auto& s : decompose(ch))
            if (std::all_of(s.highest.begin(), s.highest.end(), [](int x) { return x == 0; })) direct = s.multiplicity;
        CHECK(trivial_multiplicity(ch) == direct);
        CHECK(trivial_multiplicity(ch, 3) == direct);
    }
}

TEST_CASE("character error paths") {
    auto c1 = make_datum(Family::C, 1);
    Character broken(c1);
    broken.add(c1->weight({1}), 1);
    CHECK(code_of([&] { trivial_multiplicity(broken); }) == ErrorCode::NotWeylSymmetric);
    CHECK(code_of([&] { decompose(broken); }) == ErrorCode::NotWeylSymmetric);

    Character virtual_char(c1);
    virtual_char.add(c1->weight({2}), 1);
    virtual_char.add(c1->weight({-2}), 1);
    CHECK(code_of([&] { decompose(virtual_char); }) == ErrorCode::NegativeMultiplicity);

    Character small = trivial_char(c1);
    CHECK(code_of([&] { small -= standard_char(c1); }) == ErrorCode::NegativeMultiplicity);
    CHECK(code_of([&] { parse_datum("E8"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_rep(c1, "ext2:bogus"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_rep(c1, "hw=-1"); }) == ErrorCode::ParseError);
}

TEST_CASE("memory budget") {
    auto d8 = make_datum(Family::D, 8);
    Character s16 = spin_char(d8, Chirality::Plus);
    setenv("LIEFORGE_MAX_MEM_MB", "1", 1);
    CHECK(code_of([&] { ext_power_char(s16, 4); }) == ErrorCode::MemoryBudgetExceeded);
    unsetenv("LIEFORGE_MAX_MEM_MB");
    CHECK(memory_budget_bytes() == 0);
}

TEST_CASE("classical table rows") {
    for (const auto& r : verify_tables()) {
        CAPTURE(r.row.theorem);
        CAPTURE(r.row.type);
        if (r.row.exceptional) {
            CHECK(r.skipped);
            continue;
        }
        CHECK(r.passed);
    }
}

TEST_CASE("character engine against the Lambda^4 kernel oracle") {
    for (const auto& e : oracle::corpus()) {
        CAPTURE(e.name);
        REQUIRE(e.complexified.dim() == static_cast<std::int64_t>(e.rep.dim_m));
        CHECK(trivial_multiplicity(ext_power_char(e.complexified, 4)) ==
              static_cast<std::int64_t>(oracle::l4_invariant_dim(e.rep)));
    }
}
