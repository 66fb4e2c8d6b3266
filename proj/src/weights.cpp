#include "lieforge/weights.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "lieforge/error.hpp"

namespace lieforge {

namespace {

std::string format_weight(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << Rational(w[i], 2).str();
    os << ')';
    return os.str();
}

// signs of 1/2 sum eps_i e_i over m coordinates, doubled
std::vector<Weight> sign_vectors(std::size_t m, int parity) {
    std::vector<Weight> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        int minus = __builtin_popcountll(mask);
        if (parity >= 0 && minus % 2 != parity) continue;
        Weight w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(w));
    }
    return out;
}

Weight extend(const Weight& w, std::size_t size) {
    Weight out = w;
    out.resize(size, 0);
    return out;
}

// <a, b> = c0 + c1 x where x is the squared norm of the last coordinate
std::pair<Rational, Rational> affine_inner(const Weight& a, const Weight& b) {
    std::int64_t main = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) main += static_cast<std::int64_t>(a[i]) * b[i];
    return {Rational(main, 4), Rational(static_cast<std::int64_t>(a.back()) * b.back(), 4)};
}

// x values for which q(a, b) is an integer of absolute value at most 3; nullopt means every x
std::optional<std::set<Rational>> admissible_x(const Weight& a, const Weight& b) {
    auto [p0, p1] = affine_inner(a, b);
    auto [n0, n1] = affine_inner(b, b);
    std::set<Rational> out;
    for (int t = -3; t <= 3; ++t) {
        // 2 (p0 + p1 x) = t (n0 + n1 x)
        Rational lin = Rational(2) * p1 - Rational(t) * n1;
        Rational rhs = Rational(t) * n0 - Rational(2) * p0;
        if (lin.is_zero()) {
            if (rhs.is_zero()) return std::nullopt;
            continue;
        }
        Rational x = rhs / lin;
        if (x.sign() > 0) out.insert(x);
    }
    return out;
}

}  // namespace

const char* kind_name(SpinKind kind) {
    switch (kind) {
        case SpinKind::Real: return "real";
        case SpinKind::Complex: return "complex";
        case SpinKind::Quaternionic: return "quaternionic";
    }
    return "?";
}

Metric standard_metric(std::size_t n, std::optional<Rational> extension) {
    Metric m(n, Rational(1));
    if (extension) m.push_back(*extension);
    return m;
}

Rational doubled_inner(const Weight& a, const Weight& b, const Metric& metric) {
    if (a.size() != b.size() || a.size() != metric.size())
        throw Error(ErrorCode::DimensionMismatch, "weight and metric sizes differ");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) s += Rational(static_cast<std::int64_t>(a[i]) * b[i]) * metric[i];
    return s / Rational(4);
}

Rational q_ratio(const Weight& alpha, const Weight& beta, const Metric& metric) {
    Rational bb = doubled_inner(beta, beta, metric);
    if (bb.is_zero()) throw Error(ErrorCode::ZeroBeta, "q(alpha, beta) needs beta != 0");
    return Rational(2) * doubled_inner(alpha, beta, metric) / bb;
}

std::vector<Weight> halfspin_weights(std::size_t n, Chirality chirality, bool complex_extension) {
    if (n < 2) throw std::invalid_argument("spin weights need n >= 2");
    if (complex_extension) {
        if (n % 4 != 2) throw std::invalid_argument("the u(1) extension needs n = 2 mod 4");
        return sign_vectors(n / 2 + 1, 0);
    }
    const std::size_t m = n / 2;
    switch (chirality) {
        case Chirality::Full: return sign_vectors(m, -1);
        case Chirality::Plus:
        case Chirality::Minus:
            if (n % 2) throw Error(ErrorCode::BadChirality, "half-spin modules need n even");
            return sign_vectors(m, chirality == Chirality::Plus ? 0 : 1);
    }
    return {};
}

std::vector<Weight> so_roots(std::size_t n) {
    const std::size_t m = n / 2;
    std::vector<Weight> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    Weight w(m);
                    w[i] = si;
                    w[j] = sj;
                    out.push_back(std::move(w));
                }
    if (n % 2)
        for (std::size_t i = 0; i < m; ++i)
            for (int s : {2, -2}) {
                Weight w(m);
                w[i] = s;
                out.push_back(std::move(w));
            }
    return out;
}

Rational solve_extension_norm(std::size_t n) {
    if (n % 4 != 2 || n < 6) throw std::invalid_argument("the extension norm is defined for n = 4k+2, k >= 1");
    const std::size_t k = (n - 2) / 4;
    // alpha = 1/2 (e_1 + ... + e_{2k+2}), beta = 1/2 (e_1 + ... + e_{2k} - e_{2k+1} - e_{2k+2})
    Weight alpha(2 * k + 2, 1), beta(2 * k + 2, 1);
    beta[2 * k] = -1;
    beta[2 * k + 1] = -1;
    auto [c0, c1] = affine_inner(alpha, beta);
    return -c0 / c1;
}

std::optional<AxiomViolation> root_axiom_violation(const std::vector<Weight>& set, const Metric& metric) {
    std::unordered_set<Weight, WeightHash> lookup(set.begin(), set.end());
    std::vector<Rational> norms;
    norms.reserve(set.size());
    for (const auto& b : set) norms.push_back(doubled_inner(b, b, metric));
    for (std::size_t ia = 0; ia < set.size(); ++ia) {
        const Weight& a = set[ia];
        for (std::size_t ib = 0; ib < set.size(); ++ib) {
            if (ia == ib) continue;
            const Weight& b = set[ib];
            Rational ab = doubled_inner(a, b, metric);
            Rational q = Rational(2) * ab / norms[ib];
            if (!q.is_integer() || q > Rational(3) || q < Rational(-3))
                return AxiomViolation{a, b, q, "q(" + format_weight(a) + ", " + format_weight(b) + ") = " + q.str()};
            if (ab.is_zero()) continue;
            // proportional pairs: q(a, b) q(b, a) = 4
            Rational qba = Rational(2) * ab / norms[ia];
            if (q * qba == Rational(4)) continue;
            Weight s(a.size()), d(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                s[i] = a[i] + b[i];
                d[i] = a[i] - b[i];
            }
            if (!lookup.count(s) && !lookup.count(d))
                return AxiomViolation{a, b, q,
                                      "neither sum nor difference of " + format_weight(a) + " and " + format_weight(b) +
                                          " is a root"};
        }
    }
    return std::nullopt;
}

LieTypeCase lie_type_case(std::size_t n) {
    if (n < 5) throw std::invalid_argument("the Lie type scan starts at n = 5");
    LieTypeCase out;
    out.n = n;
    const std::size_t r = n % 8;
    const std::size_t m = n / 2;
    std::vector<Weight> roots = so_roots(n);

    if (r == 0 || r == 1 || r == 7) {
        out.kind = SpinKind::Real;
        std::vector<Weight> set = roots;
        for (auto& w : halfspin_weights(n, r == 0 ? Chirality::Plus : Chirality::Full)) set.push_back(std::move(w));
        Metric metric = standard_metric(m);
        out.witness_alpha = Weight(m, 0);
        out.witness_alpha[0] = 2;
        if (r == 0) out.witness_alpha[1] = 2;
        out.witness_beta = Weight(m, 1);
        out.witness_q = q_ratio(out.witness_alpha, out.witness_beta, metric);
        auto v = root_axiom_violation(set, metric);
        out.feasible = !v;
        out.reason = v ? v->what : "all root-system axioms hold";
        return out;
    }

    if (r == 2 || r == 6) {
        out.kind = SpinKind::Complex;
        Rational x = solve_extension_norm(n);
        out.x = x;
        std::vector<Weight> set;
        for (const auto& w : roots) set.push_back(extend(w, m + 1));
        for (auto& w : halfspin_weights(n, Chirality::Full, true)) set.push_back(std::move(w));
        Metric metric = standard_metric(m, x);
        out.witness_alpha = Weight(m + 1, 0);
        out.witness_alpha[0] = out.witness_alpha[1] = 2;
        out.witness_beta = Weight(m + 1, 1);
        out.witness_q = q_ratio(out.witness_alpha, out.witness_beta, metric);
        auto v = root_axiom_violation(set, metric);
        out.feasible = !v;
        out.reason = v ? v->what : "all root-system axioms hold";
        return out;
    }

    // quaternionic: spin(n) + sp(1), weights (spin weights) x (+-1/2 u), roots of sp(1) are +-u
    out.kind = SpinKind::Quaternionic;
    std::vector<Weight> set;
    for (const auto& w : roots) set.push_back(extend(w, m + 1));
    for (int s : {2, -2}) {
        Weight u(m + 1, 0);
        u[m] = s;
        set.push_back(std::move(u));
    }
    for (const auto& w : halfspin_weights(n, n % 2 ? Chirality::Full : Chirality::Plus))
        for (int s : {1, -1}) {
            Weight e = extend(w, m + 1);
            e[m] = s;
            set.push_back(std::move(e));
        }
    Weight beta0(m + 1, 1);
    std::optional<std::set<Rational>> candidates;
    for (const auto& a : set) {
        for (int dir = 0; dir < 2; ++dir) {
            auto allowed = dir == 0 ? admissible_x(a, beta0) : admissible_x(beta0, a);
            if (!allowed) continue;
            if (!candidates) {
                candidates = std::move(allowed);
            } else {
                std::set<Rational> keep;
                for (const auto& x : *candidates)
                    if (allowed->count(x)) keep.insert(x);
                candidates = std::move(keep);
            }
        }
    }
    out.witness_alpha = Weight(m + 1, 0);
    out.witness_alpha[m] = 2;
    out.witness_beta = beta0;
    if (!candidates || candidates->empty()) {
        out.reason = "no positive squared norm of the sp(1) direction makes every q(a, beta) integral";
        return out;
    }
    std::string failures;
    for (const auto& x : *candidates) {
        Metric metric = standard_metric(m, x);
        auto v = root_axiom_violation(set, metric);
        if (!v) {
            out.feasible = true;
            out.x = x;
            out.witness_q = q_ratio(out.witness_alpha, out.witness_beta, metric);
            out.reason = "all root-system axioms hold";
            return out;
        }
        if (!out.x) {
            out.x = x;
            out.witness_alpha = v->alpha;
            out.witness_beta = v->beta;
            out.witness_q = v->q;
        }
        failures += (failures.empty() ? "" : "; ") + std::string("x = ") + x.str() + ": " + v->what;
    }
    out.reason = failures;
    return out;
}

std::vector<LieTypeCase> lie_type_scan(std::size_t n_min, std::size_t n_max) {
    if (n_min < 5) throw std::invalid_argument("the Lie type scan starts at n = 5");
    std::vector<LieTypeCase> out;
    for (std::size_t n = n_min; n <= n_max; ++n) out.push_back(lie_type_case(n));
    return out;
}

}  // namespace lieforge
