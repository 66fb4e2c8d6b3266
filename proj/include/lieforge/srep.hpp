#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/forms.hpp"
#include "lieforge/lie_algebra.hpp"

namespace lieforge {

/*
 * Orthogonal representation rho: h -> so(m, B_m). The basis of h is the list
 * of representing matrices; h carries a form G that need not be diagonal.
 */
struct OrthRep {
    LieAlgebra h;
    std::vector<SparseMatrix> rho;
    SparseMatrix b_m;
    std::size_t dim_m = 0;
};

/*
 * Builds h from the span of the matrices (structure constants by exact
 * solving) with default form -trace(rho(a) rho(b)). Throws NotRepresentation
 * when the span is not a Lie algebra or a matrix is not B_m-skew,
 * DegenerateForm when the matrices are dependent.
 */
OrthRep make_orth_rep(std::vector<SparseMatrix> rho, std::vector<std::string> labels, SparseMatrix b_m);

/// Same, with an explicit form on h.
OrthRep make_orth_rep(std::vector<SparseMatrix> rho, std::vector<std::string> labels, SparseMatrix b_m,
                      SparseMatrix h_form);

/// a~(u, v) = B_m(a u, v) for a = sum_k x_k a_k.
Form tilde(const OrthRep& rep, const SparseVector& x);
Form tilde_basis(const OrthRep& rep, std::size_t k);

/// Candidate g = h + m; basis is a_0..a_{h-1} followed by e_0..e_{m-1}.
struct CandidateAlgebra {
    LieAlgebra g;
    std::size_t h_dim = 0;
    std::size_t m_dim = 0;
};

/// [v, w] = sum_{k,l} (G^{-1})_{kl} B_m(a_k v, w) a_l on m; not asserted to satisfy Jacobi.
CandidateAlgebra build_candidate(const OrthRep& rep);

/// Grading and condition B_h(a, [v, w]) = B_m(a v, w) on all basis elements.
bool candidate_conditions_hold(const CandidateAlgebra& cand);

/// rho~(Cas) = sum_{k,l} (G^{-1})_{kl} a~_k ^ a~_l.
Form casimir_image(const OrthRep& rep);

/// J(u,v,w) for m-vectors (coordinates on e_0..e_{m-1}); returns an m-vector.
SparseVector jacobi_defect(const CandidateAlgebra& cand, const SparseVector& u, const SparseVector& v,
                           const SparseVector& w);

struct AugmentationResult {
    Rational c;
    Rational r;
    OrthRep augmented;
    CandidateAlgebra candidate;
};

/// Adds u(1) acting by I with form r B_{u(1)}, |i| = 1; throws NotProportional, NonNegativeC.
AugmentationResult complex_augment(const OrthRep& rep, const SparseMatrix& i_struct);

/// Adds sp(1) acting by I, J, K = IJ with i, j, k orthonormal for B_{sp(1)}; throws NotProportional, NonNegativeC.
AugmentationResult quaternionic_augment(const OrthRep& rep, const SparseMatrix& i_struct, const SparseMatrix& j_struct);

/*
 * a_J = sum_{i,j} (B_m^{-1})_{ij} [e_i, J e_j]. Checks that a_J commutes with
 * every element of h whose action commutes with J, that a_J acts on m as mu J
 * with mu != 0, and evaluates the trace identity
 *   sum_j B_m(a_J e_j, J e_j) = -2 sum_{i,j} B_h([J e_i, e_j], [e_i, J e_j])
 *                             = 2 sum_{i,j} |[J e_i, e_j]|^2_h
 * (written for orthonormal e_i). The first equality uses only the Jacobi
 * identity; the second uses [J v, w] = -[v, J w], which needs J to commute
 * with h. Throws NotCentral, NotProportionalToJ.
 */
struct CentralElement {
    SparseVector a_j;  ///< h-vector
    Rational mu;
    Rational trace_lhs;
    Rational trace_mid;
    Rational trace_rhs;
    bool j_commutes_with_h = false;
    bool jacobi_trace_holds() const { return trace_lhs == trace_mid; }
    bool trace_identity_holds() const { return trace_lhs == trace_mid && trace_mid == trace_rhs; }
};
CentralElement central_element(const CandidateAlgebra& cand, const OrthRep& rep, const SparseMatrix& j_struct);

/// Nonzero v0, w0 with v0 ^ w0 != 0 and B_m(v0, a w0) = 0 for all a in h; throws NoSolution.
std::pair<SparseVector, SparseVector> find_null_pair(const OrthRep& rep);

}  // namespace lieforge
