#include "lieforge/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "lieforge/error.hpp"

namespace lieforge {

namespace {

int inversions(const std::vector<int>& v, std::size_t len) {
    int n = 0;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j)
            if (v[i] < v[j]) ++n;
    return n;
}

bool has_repeat(const std::vector<int>& sorted_desc, std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i)
        if (sorted_desc[i] == sorted_desc[i + 1]) return true;
    return false;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_same_datum(const Character& a, const Character& b) {
    if (!(*a.datum() == *b.datum())) throw Error(ErrorCode::DimensionMismatch, "characters over different root data");
}

}  // namespace

RootDatum::RootDatum(Family family, std::size_t rank, Extension ext) : family_(family), rank_(rank), ext_(ext) {
    if (rank == 0) throw std::invalid_argument("root datum needs rank >= 1");
    if (family == Family::A) {
        main_ = rank + 1;
        denom_ = static_cast<int>(2 * main_);
    } else {
        main_ = rank;
        denom_ = 2;
    }
    const std::size_t n = coords();
    const int d = denom_;
    auto root = [&](std::size_t i, int si, std::size_t j, int sj) {
        Weight w(n, 0);
        w[i] += si * d;
        if (sj) w[j] += sj * d;
        positive_.push_back(std::move(w));
    };
    for (std::size_t i = 0; i < main_; ++i)
        for (std::size_t j = i + 1; j < main_; ++j) {
            root(i, 1, j, -1);
            if (family != Family::A) root(i, 1, j, 1);
        }
    if (family == Family::B)
        for (std::size_t i = 0; i < main_; ++i) root(i, 1, 0, 0);
    if (family == Family::C)
        for (std::size_t i = 0; i < main_; ++i) root(i, 2, 0, 0);
    if (ext == Extension::Sp1) root(main_, 1, 0, 0);

    rho_.assign(n, 0);
    for (const auto& a : positive_)
        for (std::size_t i = 0; i < n; ++i) rho_[i] += a[i];
    for (int& x : rho_) {
        if (x % 2) throw std::logic_error("rho is not representable");
        x /= 2;
    }
}

DatumPtr make_datum(Family family, std::size_t rank, Extension ext) {
    return std::make_shared<const RootDatum>(family, rank, ext);
}

std::string RootDatum::name() const {
    static const char letters[] = {'A', 'B', 'C', 'D'};
    std::string s = letters[static_cast<int>(family_)] + std::to_string(rank_);
    if (ext_ == Extension::U1) s += "+u1";
    if (ext_ == Extension::Sp1) s += "+sp1";
    return s;
}

std::int64_t RootDatum::inner(const Weight& a, const Weight& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
    return s;
}

Weight RootDatum::weight(const std::vector<Rational>& coords_in) const {
    if (coords_in.size() != coords()) throw Error(ErrorCode::DimensionMismatch, "weight has the wrong number of coordinates");
    std::vector<Rational> c = coords_in;
    if (family_ == Family::A) {
        Rational mean;
        for (std::size_t i = 0; i < main_; ++i) mean += c[i];
        mean /= Rational(static_cast<std::int64_t>(main_));
        for (std::size_t i = 0; i < main_; ++i) c[i] -= mean;
    }
    Weight w(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational x = c[i] * Rational(denom_);
        if (!x.is_integer() || !x.is_small()) throw std::invalid_argument("weight coordinate outside the lattice");
        w[i] = static_cast<int>(x.numerator().get_si());
    }
    return w;
}

std::vector<Rational> RootDatum::rational_coords(const Weight& w) const {
    std::vector<Rational> out;
    for (int x : w) out.emplace_back(x, denom_);
    return out;
}

RootDatum::Reflected RootDatum::to_dominant(const Weight& w) const {
    Reflected r;
    r.dominant = w;
    Weight& v = r.dominant;
    int parity = 0;
    bool regular = true;
    if (family_ == Family::A) {
        parity = inversions(v, main_);
        std::sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(main_), std::greater<>());
        regular = !has_repeat(v, main_);
    } else {
        int negatives = 0;
        bool zero = false;
        for (std::size_t i = 0; i < main_; ++i) {
            if (v[i] < 0) {
                ++negatives;
                v[i] = -v[i];
            }
            if (v[i] == 0) zero = true;
        }
        parity = inversions(v, main_);
        std::sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(main_), std::greater<>());
        regular = !has_repeat(v, main_);
        if (family_ == Family::D) {
            if (negatives % 2 && !zero) v[main_ - 1] = -v[main_ - 1];
        } else {
            parity += negatives;
            if (zero) regular = false;
        }
    }
    if (ext_ == Extension::Sp1) {
        int& e = v[main_];
        if (e < 0) {
            e = -e;
            ++parity;
        }
        if (e == 0) regular = false;
    }
    r.sign = parity % 2 ? -1 : 1;
    r.regular = regular;
    return r;
}

bool RootDatum::is_dominant(const Weight& w) const {
    const std::size_t chain = family_ == Family::D ? main_ - 1 : main_;
    for (std::size_t i = 0; i + 1 < chain; ++i)
        if (w[i] < w[i + 1]) return false;
    if ((family_ == Family::B || family_ == Family::C) && w[main_ - 1] < 0) return false;
    if (family_ == Family::D && main_ >= 2 && w[main_ - 2] < std::abs(w[main_ - 1])) return false;
    if (ext_ == Extension::Sp1 && w[main_] < 0) return false;
    return true;
}

std::vector<Weight> RootDatum::orbit(const Weight& w) const {
    Weight dom = to_dominant(w).dominant;
    std::vector<int> vals(dom.begin(), dom.begin() + static_cast<std::ptrdiff_t>(main_));
    if (family_ != Family::A)
        for (int& x : vals) x = std::abs(x);
    std::sort(vals.begin(), vals.end());
    const int d_parity = family_ == Family::D && dom[main_ - 1] < 0 ? 1 : 0;
    std::vector<Weight> out;
    do {
        Weight base = dom;
        std::copy(vals.begin(), vals.end(), base.begin());
        if (family_ == Family::A) {
            out.push_back(base);
            continue;
        }
        std::vector<std::size_t> nonzero;
        for (std::size_t i = 0; i < main_; ++i)
            if (base[i]) nonzero.push_back(i);
        const bool any_zero = nonzero.size() < main_;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nonzero.size()); ++mask) {
            if (family_ == Family::D && !any_zero && __builtin_popcountll(mask) % 2 != d_parity) continue;
            Weight x = base;
            for (std::size_t b = 0; b < nonzero.size(); ++b)
                if ((mask >> b) & 1) x[nonzero[b]] = -x[nonzero[b]];
            out.push_back(std::move(x));
        }
    } while (std::next_permutation(vals.begin(), vals.end()));
    if (ext_ == Extension::Sp1 && dom[main_] != 0) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            Weight x = out[i];
            x[main_] = -x[main_];
            out.push_back(std::move(x));
        }
    }
    return out;
}

std::uint64_t RootDatum::weyl_order() const {
    std::uint64_t o = 0;
    switch (family_) {
        case Family::A: o = factorial(rank_ + 1); break;
        case Family::B:
        case Family::C: o = (std::uint64_t{1} << rank_) * factorial(rank_); break;
        case Family::D: o = (std::uint64_t{1} << (rank_ - 1)) * factorial(rank_); break;
    }
    return ext_ == Extension::Sp1 ? 2 * o : o;
}

RootDatum RootDatum::without_extension() const { return RootDatum(family_, rank_, Extension::None); }

// ---------------------------------------------------------------------------

std::size_t memory_budget_bytes() {
    const char* env = std::getenv("LIEFORGE_MAX_MEM_MB");
    if (!env || !*env) return 0;
    try {
        return static_cast<std::size_t>(std::stoull(env)) * 1024 * 1024;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, std::string("LIEFORGE_MAX_MEM_MB is not a number: ") + env);
    }
}

void check_table_budget(std::size_t entries, std::size_t key_size) {
    std::size_t budget = memory_budget_bytes();
    if (!budget) return;
    // node, key buffer, value and bucket pointer
    std::size_t per_entry = 48 + key_size * sizeof(int) + sizeof(std::int64_t) + sizeof(void*);
    if (entries * per_entry > budget)
        throw Error(ErrorCode::MemoryBudgetExceeded, "accumulation table of " + std::to_string(entries) +
                                                         " entries exceeds LIEFORGE_MAX_MEM_MB");
}

Character::Character(DatumPtr datum, Map mult) : datum_(std::move(datum)), mult_(std::move(mult)) {
    for (auto it = mult_.begin(); it != mult_.end();) it = it->second == 0 ? mult_.erase(it) : std::next(it);
}

std::int64_t Character::multiplicity(const Weight& w) const {
    auto it = mult_.find(w);
    return it == mult_.end() ? 0 : it->second;
}

std::int64_t Character::dim() const {
    std::int64_t d = 0;
    for (const auto& [w, m] : mult_) d += m;
    return d;
}

void Character::add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = mult_.try_emplace(w, 0);
    it->second += m;
    if (it->second == 0) {
        mult_.erase(it);
    } else if (inserted && (mult_.size() & 0xffff) == 0) {
        check_table_budget(mult_.size(), w.size());
    }
}

Character& Character::operator+=(const Character& o) {
    require_same_datum(*this, o);
    for (const auto& [w, m] : o.mult_) add(w, m);
    return *this;
}

Character& Character::operator-=(const Character& o) {
    require_same_datum(*this, o);
    for (const auto& [w, m] : o.mult_) {
        add(w, -m);
        if (multiplicity(w) < 0) throw Error(ErrorCode::NegativeMultiplicity, "subtraction leaves a negative multiplicity");
    }
    return *this;
}

bool operator==(const Character& a, const Character& b) { return *a.datum() == *b.datum() && a.mult_ == b.mult_; }

Character operator+(Character a, const Character& b) { return a += b; }
Character operator-(Character a, const Character& b) { return a -= b; }

Character scaled(const Character& ch, std::int64_t factor) {
    Character out(ch.datum());
    for (const auto& [w, m] : ch.mult()) out.add(w, m * factor);
    return out;
}

Character trivial_char(const DatumPtr& d) {
    Character ch(d);
    ch.add(Weight(d->coords(), 0), 1);
    return ch;
}

Character standard_char(const DatumPtr& d) {
    Character ch(d);
    const std::size_t n = d->main_coords();
    const int den = d->denominator();
    for (std::size_t i = 0; i < n; ++i) {
        Weight w(d->coords(), 0);
        if (d->family() == Family::A) {
            for (std::size_t j = 0; j < n; ++j) w[j] = -den / static_cast<int>(n);
            w[i] += den;
            ch.add(w, 1);
        } else {
            w[i] = den;
            ch.add(w, 1);
            w[i] = -den;
            ch.add(w, 1);
        }
    }
    if (d->family() == Family::B) ch.add(Weight(d->coords(), 0), 1);
    return ch;
}

Character spin_char(const DatumPtr& d, Chirality chirality) {
    if (d->family() != Family::B && d->family() != Family::D)
        throw std::invalid_argument("spin modules exist for B and D root data");
    const std::size_t n = d->main_coords();
    int parity = -1;
    if (chirality != Chirality::Full) {
        if (d->family() != Family::D) throw Error(ErrorCode::BadChirality, "half-spin modules need type D");
        parity = chirality == Chirality::Plus ? 0 : 1;
    }
    Character ch(d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (parity >= 0 && __builtin_popcountll(mask) % 2 != parity) continue;
        Weight w(d->coords(), 0);
        for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1 ? -1 : 1;
        ch.add(w, 1);
    }
    return ch;
}

Character adjoint_char(const DatumPtr& d) {
    Character ch(d);
    for (const auto& a : d->positive_roots()) {
        ch.add(a, 1);
        Weight neg = a;
        for (int& x : neg) x = -x;
        ch.add(neg, 1);
    }
    ch.add(Weight(d->coords(), 0),
           static_cast<std::int64_t>(d->rank() + (d->extension() == Extension::None ? 0 : 1)));
    return ch;
}

Character::Map freudenthal_dominant(const RootDatum& d, const Weight& highest) {
    if (!d.is_dominant(highest)) throw std::invalid_argument("highest weight is not dominant");
    std::vector<Weight> dom{highest};
    std::unordered_set<Weight, WeightHash> seen{highest};
    for (std::size_t q = 0; q < dom.size(); ++q)
        for (const auto& a : d.positive_roots()) {
            Weight v = dom[q];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
            if (d.is_dominant(v) && seen.insert(v).second) dom.push_back(std::move(v));
        }
    auto shifted_norm = [&](const Weight& w) {
        Weight s = w;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += d.rho()[i];
        return d.inner(s, s);
    };
    std::stable_sort(dom.begin(), dom.end(),
                     [&](const Weight& a, const Weight& b) { return shifted_norm(a) > shifted_norm(b); });
    const std::int64_t top = shifted_norm(highest);
    Character::Map mult;
    mult[highest] = 1;
    for (std::size_t idx = 1; idx < dom.size(); ++idx) {
        const Weight& mu = dom[idx];
        __int128 num = 0;
        for (const auto& a : d.positive_roots()) {
            Weight v = mu;
            while (true) {
                for (std::size_t i = 0; i < v.size(); ++i) v[i] += a[i];
                auto it = mult.find(d.to_dominant(v).dominant);
                if (it == mult.end()) break;
                num += static_cast<__int128>(it->second) * d.inner(v, a);
            }
        }
        num *= 2;
        const std::int64_t den = top - shifted_norm(mu);
        if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion is not integral");
        auto m = static_cast<std::int64_t>(num / den);
        if (m) mult[mu] = m;
    }
    return mult;
}

Character irreducible_char(const DatumPtr& d, const Weight& highest) {
    Character ch(d);
    for (const auto& [mu, m] : freudenthal_dominant(*d, highest))
        for (const auto& w : d->orbit(mu)) ch.add(w, m);
    return ch;
}

Character adams(const Character& ch, int j) {
    Character out(ch.datum());
    for (const auto& [w, m] : ch.mult()) {
        Weight v = w;
        for (int& x : v) x *= j;
        out.add(v, m);
    }
    return out;
}

Character tensor_char(const Character& a, const Character& b) {
    require_same_datum(a, b);
    Character out(a.datum());
    Weight v;
    for (const auto& [wa, ma] : a.mult())
        for (const auto& [wb, mb] : b.mult()) {
            v = wa;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += wb[i];
            out.add(v, ma * mb);
        }
    return out;
}

Character dual_char(const Character& ch) { return adams(ch, -1); }

namespace {

// k P_k = sum_{j=1}^k s^{j-1} psi^j P_{k-j}, s = -1 for exterior and +1 for symmetric powers
Character newton_power(const Character& ch, std::size_t k, int s) {
    std::vector<Character> p{trivial_char(ch.datum())};
    std::vector<Character> psi;
    for (std::size_t j = 1; j <= k; ++j) psi.push_back(adams(ch, static_cast<int>(j)));
    for (std::size_t n = 1; n <= k; ++n) {
        Character acc(ch.datum());
        for (std::size_t j = 1; j <= n; ++j) {
            std::int64_t sign = (s < 0 && (j - 1) % 2) ? -1 : 1;
            acc += scaled(tensor_char(psi[j - 1], p[n - j]), sign);
        }
        Character::Map div;
        for (const auto& [w, m] : acc.mult()) {
            if (m % static_cast<std::int64_t>(n) != 0) throw std::logic_error("Newton recursion is not integral");
            div.emplace(w, m / static_cast<std::int64_t>(n));
        }
        Character next(ch.datum(), std::move(div));
        for (const auto& [w, m] : next.mult())
            if (m < 0) throw Error(ErrorCode::NegativeMultiplicity, "power character has a negative multiplicity");
        p.push_back(std::move(next));
    }
    return p[k];
}

}  // namespace

Character ext_power_char(const Character& ch, std::size_t k) { return newton_power(ch, k, -1); }
Character sym_power_char(const Character& ch, std::size_t k) { return newton_power(ch, k, 1); }

Character ext_power_by_subsets(const Character& ch, std::size_t k) {
    std::vector<Weight> list;
    for (const auto& [w, m] : ch.mult())
        for (std::int64_t i = 0; i < m; ++i) list.push_back(w);
    std::sort(list.begin(), list.end());
    Character out(ch.datum());
    const std::size_t n = list.size(), c = ch.datum()->coords();
    std::vector<Weight> partial(k + 1, Weight(c, 0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            out.add(partial[k], 1);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            for (std::size_t t = 0; t < c; ++t) partial[depth + 1][t] = partial[depth][t] + list[i][t];
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

Character restrict_to_main(const Character& ch) {
    const RootDatum& d = *ch.datum();
    if (d.extension() == Extension::None) return ch;
    Character out(std::make_shared<const RootDatum>(d.without_extension()));
    for (const auto& [w, m] : ch.mult()) out.add(Weight(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d.main_coords())), m);
    return out;
}

Character shifted(const Character& ch, const Weight& by) {
    Character out(ch.datum());
    for (const auto& [w, m] : ch.mult()) {
        Weight v = w;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += by[i];
        out.add(v, m);
    }
    return out;
}

void require_weyl_symmetric(const Character& ch) {
    // invariance under the simple reflections generates invariance under W
    const RootDatum& d = *ch.datum();
    const std::size_t n = d.main_coords();
    Weight v;
    auto check = [&](const Weight& w, std::int64_t m) {
        if (ch.multiplicity(v) != m)
            throw Error(ErrorCode::NotWeylSymmetric, "multiplicity differs on the Weyl orbit of " + format_weight(d, w));
    };
    for (const auto& [w, m] : ch.mult()) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            v = w;
            std::swap(v[i], v[i + 1]);
            check(w, m);
        }
        if (d.family() == Family::B || d.family() == Family::C) {
            v = w;
            v[n - 1] = -v[n - 1];
            check(w, m);
        }
        if (d.family() == Family::D && n >= 2) {
            v = w;
            v[n - 2] = -w[n - 1];
            v[n - 1] = -w[n - 2];
            check(w, m);
        }
        if (d.extension() == Extension::Sp1) {
            v = w;
            v[n] = -v[n];
            check(w, m);
        }
    }
}

std::int64_t trivial_multiplicity(const Character& ch, unsigned jobs) {
    require_weyl_symmetric(ch);
    const RootDatum& d = *ch.datum();
    const std::size_t n = d.main_coords(), c = d.coords();
    const Weight& rho = d.rho();
    const bool signed_perm = d.family() != Family::A;
    const std::uint64_t masks = signed_perm ? (std::uint64_t{1} << n) : 1;
    const int ext_choices = d.extension() == Extension::Sp1 ? 2 : 1;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));

    // w = (permutation pi with pi[0] = first, signs): (w rho)_i = s_i rho_{pi(i)}
    auto sweep = [&](std::size_t first) {
        std::int64_t total = 0;
        std::vector<int> perm;
        perm.push_back(static_cast<int>(first));
        for (std::size_t i = 0; i < n; ++i)
            if (i != first) perm.push_back(static_cast<int>(i));
        Weight key(c);
        do {
            int inv = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inv;
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                const int flips = __builtin_popcountll(mask);
                if (d.family() == Family::D && flips % 2) continue;
                int parity = inv + (d.family() == Family::D ? 0 : flips);
                for (std::size_t i = 0; i < n; ++i) {
                    int wr = rho[static_cast<std::size_t>(perm[i])];
                    if ((mask >> i) & 1) wr = -wr;
                    key[i] = rho[i] - wr;
                }
                for (int e = 0; e < ext_choices; ++e) {
                    if (c > n) key[n] = e ? 2 * rho[n] : 0;
                    auto it = ch.mult().find(key);
                    if (it != ch.mult().end()) total += ((parity + e) % 2 ? -1 : 1) * it->second;
                }
            }
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        return total;
    };

    std::vector<std::int64_t> partial(n, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t f = t; f < n; f += jobs) partial[f] = sweep(f);
        });
    for (auto& th : pool) th.join();
    std::int64_t total = std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
    if (total < 0) throw Error(ErrorCode::NegativeMultiplicity, "negative trivial multiplicity");
    return total;
}

std::vector<Summand> decompose(const Character& ch) {
    require_weyl_symmetric(ch);
    const RootDatum& d = *ch.datum();
    const Weight& rho = d.rho();
    Character::Map acc;
    Weight v;
    for (const auto& [mu, m] : ch.mult()) {
        v = mu;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += rho[i];
        auto r = d.to_dominant(v);
        if (!r.regular) continue;
        for (std::size_t i = 0; i < v.size(); ++i) r.dominant[i] -= rho[i];
        acc[r.dominant] += r.sign * m;
    }
    std::vector<Summand> out;
    for (const auto& [lambda, m] : acc) {
        if (m < 0) throw Error(ErrorCode::NegativeMultiplicity, "irreducible " + format_weight(d, lambda) + " has multiplicity " + std::to_string(m));
        if (m > 0) out.push_back({lambda, m});
    }
    std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) { return a.highest > b.highest; });

    Character::Map resum;
    for (const auto& s : out)
        for (const auto& [mu, m] : freudenthal_dominant(d, s.highest)) resum[mu] += s.multiplicity * m;
    std::size_t dominant_keys = 0;
    for (const auto& [w, m] : ch.mult()) {
        if (!d.is_dominant(w)) continue;
        ++dominant_keys;
        auto it = resum.find(w);
        if (it == resum.end() || it->second != m) throw std::logic_error("decomposition does not reproduce the character");
    }
    if (dominant_keys != resum.size()) throw std::logic_error("decomposition does not reproduce the character");
    return out;
}

std::int64_t irreducibility_norm(const Character& ch) {
    std::int64_t s = 0;
    for (const auto& summand : decompose(ch)) s += summand.multiplicity * summand.multiplicity;
    return s;
}

std::string format_weight(const RootDatum& d, const Weight& w) {
    std::ostringstream os;
    os << '(';
    auto coords = d.rational_coords(w);
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].str();
    os << ')';
    return os.str();
}

}  // namespace lieforge
