#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/sparse.hpp"

namespace lieforge {

enum class BaseField { R, C, H };

/// Cl_n as K(r) or K(r) + K(r).
struct CliffordDescriptor {
    int n = 0;
    BaseField base_field = BaseField::R;
    std::uint64_t matrix_size = 1;
    bool split = false;
    /// Real dimension of one irreducible module.
    std::uint64_t module_dim() const;
};

CliffordDescriptor clifford_table(int n);

/*
 * p anticommuting signed-permutation matrices squaring to -Id, acting on an
 * irreducible real Cl_p module of minimal dimension. Base cases p <= 8 come
 * from octonion left multiplications; larger p use Cl_{p+8} = Cl_p (x) R(16).
 */
std::vector<SparseMatrix> clifford_module(int p);

enum class Chirality { Full, Plus, Minus };
enum class RepType { Real, Complex, Quaternionic };

std::string to_string(Chirality c);
std::string to_string(RepType t);

/*
 * Real spin representation of spin(n), obtained by restricting a Cl_{n-1}
 * module along spin(n) -> Cl_n^0 = Cl_{n-1} (e_i e_n -> gamma_i).
 *
 * spin_basis[k] represents e_a e_b / 2 for pairs[k] = (a, b), a < b, 1-based:
 *   gamma_a gamma_b / 2   for b < n,
 *   gamma_a / 2           for b = n.
 * Half-spin conventions: plus is the half whose weights (w.r.t. the Cartan
 * elements e_{2j-1} e_{2j} / 2) have an even number of minus signs.
 */
struct SpinRep {
    int n = 0;
    Chirality chirality = Chirality::Full;
    std::size_t dim_real = 0;
    std::vector<SparseMatrix> clifford;  ///< gamma_1 .. gamma_{n-1}
    std::vector<SparseMatrix> spin_basis;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::size_t> cartan;  ///< indices into spin_basis of e_{2j-1} e_{2j} / 2
    RepType type = RepType::Real;
    std::vector<SparseMatrix> structures;  ///< I, or I and J, commuting with spin_basis

    std::vector<std::string> labels() const;
};

SpinRep build_spin_rep(int n, Chirality chirality);

struct TypeDetection {
    RepType type = RepType::Real;
    std::size_t centralizer_dim = 1;
    std::vector<SparseMatrix> structures;
};

/// Type of an irreducible real representation from the dimension of its commutant.
TypeDetection detect_type(const std::vector<SparseMatrix>& generators, std::size_t dim);
TypeDetection detect_type(const SpinRep& rep);

/// Basis of the commutant {X : X g = g X for all generators}, computed from a cyclic vector.
std::vector<SparseMatrix> centralizer(const std::vector<SparseMatrix>& generators, std::size_t dim);

/// Gram matrix of an invariant inner product; throws NoInvariantMetric when the standard one fails.
SparseMatrix invariant_inner_product(const SpinRep& rep);

enum class TildeExtra { None, U1, Sp1 };
TildeExtra tilde_extra(int n);

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace lieforge
