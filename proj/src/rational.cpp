#include "lieforge/rational.hpp"

#include <limits>

namespace lieforge {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi = static_cast<unsigned long>(u >> 64);
    mpz_class lo = static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min(); }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    set_from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    std::string str(s);
    for (std::size_t i = 0; i < str.size(); ++i) {
        char c = str[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && c == '-');
        if (!ok) throw std::invalid_argument("Rational::parse: bad character in '" + str + "'");
    }
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + str + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

void Rational::assign_big(mpq_class q) {
    q.canonicalize();
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rational::set_from_i128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (abs128(n) <= kMax && d <= kMax) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
    } else {
        mpq_class q(from_i128(n), from_i128(d));
        assign_big(std::move(q));
    }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

std::string Rational::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    mpz_class n = numerator(), d = denominator();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

Rational Rational::sqrt_exact() const {
    if (!is_square()) throw std::domain_error("Rational::sqrt_exact: " + str() + " is not a rational square");
    mpz_class n = numerator(), d = denominator();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    if (big_) {
        Rational r;
        r.assign_big(1 / *big_);
        return r;
    }
    Rational r;
    r.set_from_i128(den_, num_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            set_from_i128(static_cast<__int128>(num_) + o.num_, den_);
        } else {
            set_from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
        }
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            set_from_i128(static_cast<__int128>(num_) - o.num_, den_);
        } else {
            set_from_i128(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
        }
        return *this;
    }
    assign_big(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        set_from_i128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        set_from_i128(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
        return *this;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: small and big never denote the same value
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
    if (!big_) {
        std::size_t h = std::hash<std::int64_t>{}(num_);
        return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
    return std::hash<std::string>{}(big_->get_str());
}

void add_mul(Rational& a, const Rational& b, const Rational& c) {
    if (b.is_zero() || c.is_zero()) return;
    a += b * c;
}

}  // namespace lieforge
