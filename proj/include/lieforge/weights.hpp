#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/clifford.hpp"
#include "lieforge/rational.hpp"

namespace lieforge {

/*
 * A weight as integer coordinates over an orthonormal ambient basis, in units
 * of 1/denominator. The denominator is fixed by the context: spin weights use 2
 * (doubled coordinates), character engines record it in their RootDatum.
 */
using Weight = std::vector<int>;

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : w) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ull;
        return h;
    }
};

/// Diagonal metric: squared norm of each ambient basis vector.
using Metric = std::vector<Rational>;

Metric standard_metric(std::size_t n, std::optional<Rational> extension = std::nullopt);

/// <a, b> for doubled coordinates (units of 1/2).
Rational doubled_inner(const Weight& a, const Weight& b, const Metric& metric);

/// q(a, b) = 2<a, b>/<b, b>; throws ZeroBeta.
Rational q_ratio(const Weight& alpha, const Weight& beta, const Metric& metric);

/*
 * Doubled weights of the complexified spin module of spin(n): 1/2 sum eps_i e_i
 * over floor(n/2) coordinates. Plus keeps an even number of minus signs, Minus
 * an odd number; both need n even (BadChirality otherwise). With
 * complex_extension (n = 2 mod 4) the weights of Sigma_n + conjugate over
 * spin(n) + u(1) are returned: 2k+2 coordinates, the last one the u(1)
 * direction, with eps_1 ... eps_{2k+2} = 1.
 */
std::vector<Weight> halfspin_weights(std::size_t n, Chirality chirality, bool complex_extension = false);

/// Doubled roots of so(n): +-e_i +- e_j, plus +-e_i for n odd.
std::vector<Weight> so_roots(std::size_t n);

/// Squared norm x of the u(1) direction for n = 4k+2 forced by orthogonality of two weights; equals 2k-1.
Rational solve_extension_norm(std::size_t n);

enum class SpinKind { Real, Complex, Quaternionic };

struct LieTypeCase {
    std::size_t n = 0;
    SpinKind kind = SpinKind::Real;
    bool feasible = false;
    std::optional<Rational> x;  ///< squared norm of the extension direction when present
    Weight witness_alpha;       ///< doubled coordinates
    Weight witness_beta;
    std::optional<Rational> witness_q;
    std::string reason;
};

/*
 * Assembles the roots of spin~(n) together with the weights of Sigma_n^(+)
 * and tests the root-system axioms: q(a, b) integral with |q| <= 3 and, for
 * non-orthogonal non-proportional pairs, a + b or a - b in the set.
 */
LieTypeCase lie_type_case(std::size_t n);
std::vector<LieTypeCase> lie_type_scan(std::size_t n_min, std::size_t n_max);

/// Root-system axioms for a finite set of doubled vectors closed under negation; returns the first violation.
struct AxiomViolation {
    Weight alpha, beta;
    Rational q;
    std::string what;
};
std::optional<AxiomViolation> root_axiom_violation(const std::vector<Weight>& set, const Metric& metric);

const char* kind_name(SpinKind kind);

}  // namespace lieforge
