#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieforge/clifford.hpp"
#include "lieforge/weights.hpp"

namespace lieforge {

enum class Family { A, B, C, D };
enum class Extension { None, U1, Sp1 };

/*
 * A simple classical root system, optionally times u(1) or sp(1), realized on
 * orthonormal coordinates. A_{r} uses r+1 traceless coordinates, B/C/D use r.
 * The extension, when present, is one extra coordinate of squared norm 1 on
 * which u(1) acts trivially and sp(1) has the roots +-e. Coordinates are stored
 * in units of 1/denominator (2 for B, C, D; 2(r+1) for A_r).
 */
class RootDatum {
public:
    RootDatum(Family family, std::size_t rank, Extension ext = Extension::None);

    Family family() const { return family_; }
    std::size_t rank() const { return rank_; }
    Extension extension() const { return ext_; }
    std::size_t main_coords() const { return main_; }
    std::size_t coords() const { return main_ + (ext_ == Extension::None ? 0 : 1); }
    int denominator() const { return denom_; }
    std::string name() const;

    const std::vector<Weight>& positive_roots() const { return positive_; }
    const Weight& rho() const { return rho_; }

    /// Integer inner product in units of 1/denominator^2.
    std::int64_t inner(const Weight& a, const Weight& b) const;

    /// Weight from coordinates given as p/q rationals in the standard basis.
    Weight weight(const std::vector<Rational>& coords) const;
    std::vector<Rational> rational_coords(const Weight& w) const;

    struct Reflected {
        Weight dominant;
        int sign = 1;          ///< det of a Weyl element taking the input to dominant
        bool regular = false;  ///< no root is orthogonal to the input
    };
    Reflected to_dominant(const Weight& w) const;
    bool is_dominant(const Weight& w) const;

    /// Distinct elements of the Weyl orbit of w.
    std::vector<Weight> orbit(const Weight& w) const;

    /// Order of the Weyl group.
    std::uint64_t weyl_order() const;

    /// Datum with the extension coordinate removed.
    RootDatum without_extension() const;

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.family_ == b.family_ && a.rank_ == b.rank_ && a.ext_ == b.ext_;
    }

private:
    Family family_;
    std::size_t rank_;
    Extension ext_;
    std::size_t main_;
    int denom_;
    std::vector<Weight> positive_;
    Weight rho_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;
DatumPtr make_datum(Family family, std::size_t rank, Extension ext = Extension::None);

/// Formal character: weight -> multiplicity.
class Character {
public:
    using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

    explicit Character(DatumPtr datum) : datum_(std::move(datum)) {}
    Character(DatumPtr datum, Map mult);

    const DatumPtr& datum() const { return datum_; }
    const Map& mult() const { return mult_; }
    std::int64_t multiplicity(const Weight& w) const;
    std::int64_t dim() const;
    std::size_t distinct() const { return mult_.size(); }

    void add(const Weight& w, std::int64_t m);
    Character& operator+=(const Character& o);
    /// Subtraction of a subrepresentation; throws NegativeMultiplicity.
    Character& operator-=(const Character& o);

    /// Multiplicities differing only in zero entries compare equal.
    friend bool operator==(const Character& a, const Character& b);

private:
    DatumPtr datum_;
    Map mult_;
};

Character operator+(Character a, const Character& b);
Character operator-(Character a, const Character& b);
Character scaled(const Character& ch, std::int64_t factor);

/*
 * Memory budget for accumulation tables, from LIEFORGE_MAX_MEM_MB (unset or 0:
 * unlimited). Tables exceeding it throw MemoryBudgetExceeded.
 */
std::size_t memory_budget_bytes();
void check_table_budget(std::size_t entries, std::size_t key_size);

// standard characters
Character trivial_char(const DatumPtr& d);
/// C^{r+1} for A_r, C^{2r+1} for B_r, C^{2r} for C_r and D_r, extension coordinate 0.
Character standard_char(const DatumPtr& d);
/// Spin module of B_r (Full) or half-spin module of D_r (Plus: even number of minus signs).
Character spin_char(const DatumPtr& d, Chirality chirality);
/// Roots plus the rank (with the extension) zero weights.
Character adjoint_char(const DatumPtr& d);
/// Character of the irreducible module with dominant highest weight lambda (Freudenthal).
Character irreducible_char(const DatumPtr& d, const Weight& highest);

/// Dominant weight multiplicities of the irreducible module with highest weight lambda.
Character::Map freudenthal_dominant(const RootDatum& d, const Weight& highest);

// operations
Character adams(const Character& ch, int j);
Character tensor_char(const Character& a, const Character& b);
Character dual_char(const Character& ch);
Character ext_power_char(const Character& ch, std::size_t k);
Character sym_power_char(const Character& ch, std::size_t k);
/// Lambda^k by enumerating k-subsets of the weight list (with repetition by multiplicity); cross-check path.
Character ext_power_by_subsets(const Character& ch, std::size_t k);
/// Forget the extension factor.
Character restrict_to_main(const Character& ch);
/// Shift every weight by a fixed vector (tensoring with a one-dimensional character).
Character shifted(const Character& ch, const Weight& by);

/// Throws NotWeylSymmetric when some weight and its dominant representative have different multiplicities.
void require_weyl_symmetric(const Character& ch);

/// sum_{w in W} det(w) mult(rho - w rho), by a streaming sweep over the Weyl group; throws NotWeylSymmetric.
std::int64_t trivial_multiplicity(const Character& ch, unsigned jobs = 1);

struct Summand {
    Weight highest;
    std::int64_t multiplicity = 0;
};

/*
 * Irreducible decomposition by reflecting mu + rho into the dominant chamber
 * for every weight mu. The result is re-summed from Freudenthal multiplicities
 * and compared on dominant weights. Throws NotWeylSymmetric, NegativeMultiplicity.
 */
std::vector<Summand> decompose(const Character& ch);

/// Sum of squared multiplicities of the decomposition.
std::int64_t irreducibility_norm(const Character& ch);

std::string format_weight(const RootDatum& d, const Weight& w);

}  // namespace lieforge
