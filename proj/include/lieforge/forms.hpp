#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lieforge/sparse.hpp"

namespace lieforge {

/*
 * Exterior form of degree <= 4 on an m-dimensional space, stored as
 * coefficients tau(e_i1, ..., e_ik) on strictly increasing index tuples.
 * With this convention (e^1 ^ e^2)(e_1, e_2) = 1.
 */
class Form {
public:
    using Key = std::uint64_t;
    using Index = std::array<std::size_t, 4>;
    struct Term {
        Key key;
        Rational value;
    };

    Form() = default;
    Form(std::size_t dim, int degree) : dim_(dim), degree_(degree) {}

    std::size_t dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient on the given (not necessarily sorted) indices, with the permutation sign.
    Rational evaluate(const std::vector<std::size_t>& indices) const;
    /// Value of a 0-form.
    Rational scalar() const;

    static Key pack(const std::size_t* sorted, int degree);
    static Index unpack(Key key, int degree);

    Form& operator*=(const Rational& s);
    friend Form operator*(const Rational& s, Form f) { return f *= s; }
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend bool operator==(const Form& a, const Form& b);

    friend class FormBuilder;

private:
    std::size_t dim_ = 0;
    int degree_ = 0;
    std::vector<Term> terms_;  // sorted by key, no zeros
};

/// Accumulates coefficients on sorted index tuples.
class FormBuilder {
public:
    FormBuilder(std::size_t dim, int degree) : dim_(dim), degree_(degree) {}
    void add(Form::Key key, const Rational& v);
    /// Adds v * e^{i_1} ^ ... ^ e^{i_k} for unsorted indices; repeated indices contribute nothing.
    void add_unsorted(std::array<std::size_t, 4> indices, const Rational& v);
    void add_form(const Form& f, const Rational& scale = 1);
    Form build();

private:
    std::size_t dim_;
    int degree_;
    std::unordered_map<Form::Key, Rational> acc_;
};

/// omega_X(u, v) = B(X u, v) for an endomorphism X that is B-skew.
Form two_form_of(const SparseMatrix& x, const SparseMatrix& b);

Form wedge(const Form& a, const Form& b);

/// Returns c with a = c * b, nullopt when not proportional; throws ZeroReference when b = 0.
std::optional<Rational> proportionality(const Form& a, const Form& b);

/// Derivation action (x . tau)(v_1, ...) = -sum_i tau(..., x v_i, ...).
Form induced_action(const SparseMatrix& x, const Form& tau);

/// lambda(tau) = 1/2 sum_{i,j} (B^{-1})_{ij} tau(e_i, I e_j, ...), lowering the degree by 2.
Form lambda_contract(const Form& tau, const SparseMatrix& complex_structure, const SparseMatrix& b);

/*
 * Pairing on two-forms given by its values T(u, v, w, z) on basis vectors,
 * stored for u < v and w < z; T must be antisymmetric in (u, v) and (w, z)
 * and symmetric under swapping the two pairs.
 */
class PairTable {
public:
    explicit PairTable(std::size_t dim) : dim_(dim) {}
    std::size_t dim() const noexcept { return dim_; }
    /// Sets T(u,v,w,z) and the values forced by the symmetries.
    void set(std::size_t u, std::size_t v, std::size_t w, std::size_t z, const Rational& value);
    Rational get(std::size_t u, std::size_t v, std::size_t w, std::size_t z) const;
    std::vector<std::array<std::size_t, 4>> support() const;

private:
    std::size_t dim_;
    std::unordered_map<std::uint64_t, Rational> values_;
};

/// beta(T)(u,v,w,z) = T(u,v,w,z) + T(v,w,u,z) + T(w,u,v,z)
Form bianchi(const PairTable& t);

}  // namespace lieforge
