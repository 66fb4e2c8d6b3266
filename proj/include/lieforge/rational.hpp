#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lieforge {

/*
 * Exact rational number.
 *
 * Values whose numerator and denominator fit in an int64 are kept inline;
 * anything larger spills into a GMP rational. Both representations are
 * always normalized (lowest terms, positive denominator), and a value that
 * fits the small form is never kept in the big form, so equality and hashing
 * can compare representations directly.
 */
class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit from integers is intended
    Rational(int n) noexcept : num_(n) {}           // NOLINT
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view s);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const noexcept { return !big_; }
    int sign() const noexcept;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;

    /// Exact square root when this is the square of a rational; throws otherwise.
    bool is_square() const;
    Rational sqrt_exact() const;

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::size_t hash() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void assign_big(mpq_class q);
    void set_from_i128(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

/// Fused a += b * c, the inner step of every elimination and contraction loop.
void add_mul(Rational& a, const Rational& b, const Rational& c);

}  // namespace lieforge

template <>
struct std::hash<lieforge::Rational> {
    std::size_t operator()(const lieforge::Rational& r) const { return r.hash(); }
};
