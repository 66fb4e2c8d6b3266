#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/linalg.hpp"
#include "lieforge/sparse.hpp"

namespace lieforge {

/*
 * Lie algebra given by exact structure constants [b_i, b_j] = sum_k c_ij^k b_k
 * and a symmetric bilinear form B. Brackets are set for i < j; the table
 * keeps both orders so lookups need no sign bookkeeping.
 */
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::vector<std::string> labels, SparseMatrix form);

    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const SparseMatrix& form() const noexcept { return form_; }
    void set_form(SparseMatrix form);

    /// Sets [b_i, b_j] = value (and [b_j, b_i] = -value); i != j.
    void set_bracket(std::size_t i, std::size_t j, const SparseVector& value);
    const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
    /// [x, b_j]
    SparseVector bracket_basis(const SparseVector& x, std::size_t j) const;

    /// Matrix of ad(x) in the basis (column j is [x, b_j]).
    SparseMatrix ad(const SparseVector& x) const;
    SparseMatrix ad_basis(std::size_t i) const;

    /// When set, the first graded_split basis vectors span a subalgebra h and the rest a complement m.
    std::optional<std::size_t> graded_split;

private:
    std::vector<std::string> labels_;
    SparseMatrix form_;
    std::vector<SparseVector> table_;
};

enum class JacobiMode { Full, Sampled, ViaCasimir };

struct VerificationReport {
    JacobiMode jacobi_checked = JacobiMode::Full;
    std::uint64_t samples = 0;
    bool jacobi_ok = false;
    bool invariance_ok = false;
    std::optional<std::size_t> first_failure[3];  ///< indices of a failing Jacobi triple, if any
    Inertia killing_signature;
    std::size_t rank = 0;
    std::size_t root_count = 0;
};

struct VerifyOptions {
    JacobiMode mode = JacobiMode::Full;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

/// Jacobi and B-invariance checks; failures are reported, never thrown. Killing/rank fields are left empty.
VerificationReport verify_structure(const LieAlgebra& l, const VerifyOptions& opts = {});

/// J(b_i, b_j, b_k) = [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
SparseVector jacobiator(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k);

/// Checks B([a,b],c) + B(b,[a,c]) = 0 for a ranging over [a_begin, a_end) and all basis b, c.
bool form_is_invariant(const LieAlgebra& l, std::size_t a_begin, std::size_t a_end);

/// K(a, b) = trace(ad_a ad_b)
SparseMatrix killing_form(const LieAlgebra& l);

/*
 * Joint weights of commuting real matrices that are simultaneously
 * diagonalizable over C with purely imaginary eigenvalues. Each real
 * two-plane on which the matrices act with eigenvalues +-i(beta_1..beta_r)
 * contributes beta and -beta once each.
 */
struct JointWeights {
    std::vector<std::vector<Rational>> weights;  ///< nonzero weights with multiplicity, sorted
    std::size_t zero_dim = 0;                     ///< dimension of the common kernel
};
JointWeights joint_weights(const std::vector<SparseMatrix>& commuting, std::size_t dim);

struct RootData {
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> roots;  ///< coordinates relative to the seed basis
};
/// Throws NotDiagonalizable when the seed is not a Cartan subalgebra of the required kind.
RootData cartan_and_roots(const LieAlgebra& l, const std::vector<std::size_t>& cartan_seed);

/// Connected components of the graph on roots joining non-orthogonal pairs (inner product given by `metric`).
std::size_t root_graph_components(const std::vector<std::vector<Rational>>& roots, const SparseMatrix& metric);

/// Inverse of minus the Killing form on the seed span: the induced inner product on root coordinates.
SparseMatrix root_metric(const LieAlgebra& l, const std::vector<std::size_t>& cartan_seed);

/*
 * Structure constants of the matrix Lie algebra spanned by `basis`, with
 * form -trace(XY). Throws NotRepresentation when the span is not closed
 * under commutators and DegenerateForm when the basis is dependent.
 */
LieAlgebra matrix_lie_algebra(const std::vector<SparseMatrix>& basis, std::vector<std::string> labels);

std::string write_structure_constants(const LieAlgebra& l);
LieAlgebra parse_structure_constants(const std::string& text);

}  // namespace lieforge
