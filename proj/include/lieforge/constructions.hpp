#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieforge/clifford.hpp"
#include "lieforge/srep.hpp"

namespace lieforge {

/// spin(n) acting on the (half-)spin module with the standard inner product.
OrthRep spin_orth_rep(const SpinRep& spin);

/// so(n) on R^n.
OrthRep so_standard(std::size_t n);

/*
 * su(n) on C^n = R^{2n} (z_p = x_{2p} + i x_{2p+1}); also returns the complex
 * structure given by multiplication with i.
 */
OrthRep su_standard(std::size_t n, SparseMatrix* i_struct = nullptr);

/*
 * sp(n) (quaternionic skew-Hermitian matrices) acting on H^n = R^{4n} from the
 * left; I and J are right multiplications by i and j.
 */
OrthRep sp_standard(std::size_t n, SparseMatrix* i_struct = nullptr, SparseMatrix* j_struct = nullptr);

/// so(3) on harmonic cubic polynomials (the 7-dimensional irreducible representation), invariant inner product included.
OrthRep so3_on_r7();

/// Adjoint representation of a compact algebra with B_m = its form.
OrthRep adjoint_rep(const LieAlgebra& h);

struct Construction {
    std::string name;
    OrthRep rep;  ///< final (possibly augmented) representation
    CandidateAlgebra candidate;
    std::size_t base_h_dim = 0;
    std::optional<Rational> c;
    std::optional<Rational> r;
    std::vector<std::size_t> cartan_seed;  ///< indices into the candidate basis
    std::string note;
};

/*
 * Named targets: f4, e6, e7, e8, sp3, n6 (spin(6)+u(1) on its spin module),
 * cp<n> (su(n) on C^n with u(1)), hp<n> (sp(n) on H^n with sp(1)),
 * sphere<n> (so(n) on R^n). Throws std::invalid_argument for unknown names.
 */
Construction construct(const std::string& name);
std::vector<std::string> construction_names();

}  // namespace lieforge
