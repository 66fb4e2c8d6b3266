#include "lieforge/lie_algebra.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "lieforge/error.hpp"

namespace lieforge {

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::vector<std::string> labels, SparseMatrix form)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size(), SparseVector(labels_.size())) {
    set_form(std::move(form));
}

void LieAlgebra::set_form(SparseMatrix form) {
    if (form.rows() != dim() || form.cols() != dim())
        throw Error(ErrorCode::DimensionMismatch, "form size does not match the algebra");
    if (!form.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "invariant form must be symmetric");
    form_ = std::move(form);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVector& value) {
    if (i == j || i >= dim() || j >= dim() || value.dim() != dim())
        throw Error(ErrorCode::DimensionMismatch, "set_bracket");
    table_[i * dim() + j] = value;
    table_[j * dim() + i] = -value;
}

SparseVector LieAlgebra::bracket_basis(const SparseVector& x, std::size_t j) const {
    Accumulator acc(dim());
    for (const auto& [i, a] : x.entries())
        for (const auto& [k, c] : bracket(i, j).entries()) acc.add_mul(k, a, c);
    return acc.take();
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
    Accumulator acc(dim());
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) {
            if (i == j) continue;
            Rational ab = a * b;
            for (const auto& [k, c] : bracket(i, j).entries()) acc.add_mul(k, ab, c);
        }
    return acc.take();
}

SparseMatrix LieAlgebra::ad(const SparseVector& x) const {
    std::vector<SparseVector> cols;
    cols.reserve(dim());
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket_basis(x, j));
    return SparseMatrix::from_rows(dim(), std::move(cols)).transpose();
}

SparseMatrix LieAlgebra::ad_basis(std::size_t i) const { return ad(SparseVector::unit(dim(), i)); }

// ---------------------------------------------------------------- verification

SparseVector jacobiator(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k) {
    SparseVector out = l.bracket_basis(l.bracket(i, j), k);
    out.axpy(1, l.bracket_basis(l.bracket(j, k), i));
    out.axpy(1, l.bracket_basis(l.bracket(k, i), j));
    return out;
}

bool form_is_invariant(const LieAlgebra& l, std::size_t a_begin, std::size_t a_end) {
    const SparseMatrix& b = l.form();
    for (std::size_t a = a_begin; a < a_end; ++a) {
        // B([a,x],y) + B(x,[a,y]) = (ad_a^T B + B ad_a)_{xy}
        SparseMatrix bad = b * l.ad_basis(a);
        if (!(bad + bad.transpose()).is_zero()) return false;
    }
    return true;
}

namespace {

// Runs fn(i) for i in [0, count) over `jobs` threads; fn returns false to signal a failure.
template <class Fn>
bool parallel_all(std::size_t count, unsigned jobs, Fn fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (!fn(i)) return false;
        return true;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> ok{true};
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) {
        threads.emplace_back([&] {
            while (ok) {
                std::size_t i = next++;
                if (i >= count) break;
                if (!fn(i)) ok = false;
            }
        });
    }
    for (auto& th : threads) th.join();
    return ok;
}

}  // namespace

VerificationReport verify_structure(const LieAlgebra& l, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.jacobi_checked = opts.mode;
    const std::size_t n = l.dim();
    std::mutex failure_mutex;
    auto record = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!rep.first_failure[0]) {
            rep.first_failure[0] = i;
            rep.first_failure[1] = j;
            rep.first_failure[2] = k;
        }
    };

    if (opts.mode == JacobiMode::Full) {
        rep.jacobi_ok = parallel_all(n, opts.jobs, [&](std::size_t i) {
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (!jacobiator(l, i, j, k).is_zero()) {
                        record(i, j, k);
                        return false;
                    }
            return true;
        });
    } else if (opts.mode == JacobiMode::Sampled) {
        rep.samples = opts.samples;
        std::mt19937_64 rng(opts.seed);
        std::vector<std::array<std::size_t, 3>> triples;
        if (n >= 3) {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            while (triples.size() < opts.samples) {
                std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
                if (i == j || j == k || i == k) continue;
                triples.push_back({i, j, k});
            }
        }
        rep.jacobi_ok = parallel_all(triples.size(), opts.jobs, [&](std::size_t t) {
            auto [i, j, k] = triples[t];
            if (jacobiator(l, i, j, k).is_zero()) return true;
            record(i, j, k);
            return false;
        });
    } else {
        // the caller certifies Jacobi through the Casimir criterion
        rep.jacobi_ok = false;
    }
    rep.invariance_ok = form_is_invariant(l, 0, n);
    return rep;
}

SparseMatrix killing_form(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<SparseMatrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad_basis(i));
    std::vector<SparseMatrix> ads_t;
    ads_t.reserve(n);
    for (const auto& a : ads) ads_t.push_back(a.transpose());
    SparseMatrix k(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            // trace(ad_a ad_b) = sum over rows r of ad_a . column r of ad_b
            Rational t;
            for (std::size_t r = 0; r < n; ++r) {
                const SparseVector& x = ads[a].row(r);
                if (x.is_zero()) continue;
                t += x.dot(ads_t[b].row(r));
            }
            if (!t.is_zero()) {
                k.set(a, b, t);
                k.set(b, a, t);
            }
        }
    }
    return k;
}

LieAlgebra matrix_lie_algebra(const std::vector<SparseMatrix>& basis, std::vector<std::string> labels) {
    const std::size_t n = basis.size();
    if (labels.size() != n) throw Error(ErrorCode::DimensionMismatch, "one label per basis matrix");
    std::vector<SparseVector> flat;
    flat.reserve(n);
    for (const auto& b : basis) flat.push_back(b.flatten());
    SpanSolver solver(flat);
    SparseMatrix form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational t = -trace_product(basis[i], basis[j]);
            if (t.is_zero()) continue;
            form.set(i, j, t);
            form.set(j, i, t);
        }
    LieAlgebra l(std::move(labels), std::move(form));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto c = solver.solve(commutator(basis[i], basis[j]).flatten());
            if (!c) throw Error(ErrorCode::NotRepresentation, "matrix span is not closed under commutators");
            if (!c->is_zero()) l.set_bracket(i, j, *c);
        }
    return l;
}

// ---------------------------------------------------------------- file format

std::string write_structure_constants(const LieAlgebra& l) {
    std::ostringstream out;
    const std::size_t n = l.dim();
    out << "lie-sc v1 dim=" << n << "\n";
    out << "labels ";
    for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << l.labels()[i];
    out << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& [k, c] : l.bracket(i, j).entries())
                out << i << " " << j << " " << k << " " << c.str() << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, c] : l.form().row(i).entries())
            if (j >= i) out << "B " << i << " " << j << " " << c.str() << "\n";
    return out.str();
}

LieAlgebra parse_structure_constants(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& why) -> LieAlgebra {
        throw Error(ErrorCode::ParseError, "structure-constant file line " + std::to_string(line_no) + ": " + why);
    };
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        return true;
    };
    if (!next_line() || line.rfind("lie-sc v1 dim=", 0) != 0) return fail("bad header");
    std::size_t n = 0;
    try {
        n = std::stoul(line.substr(14));
    } catch (const std::exception&) {
        return fail("bad dimension");
    }
    if (!next_line() || line.rfind("labels ", 0) != 0) return fail("missing labels line");
    std::vector<std::string> labels;
    {
        std::string rest = line.substr(7), item;
        std::istringstream ls(rest);
        while (std::getline(ls, item, ',')) labels.push_back(item);
    }
    if (n == 0) labels.clear();
    if (labels.size() != n) return fail("label count does not match dimension");

    std::vector<std::vector<SparseVector::Entry>> brackets(n * n);
    SparseMatrix form(n, n);
    while (next_line()) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        try {
            if (first == "B") {
                std::size_t i, j;
                std::string v;
                if (!(ls >> i >> j >> v) || i > j || j >= n) return fail("bad form line: " + line);
                Rational x = Rational::parse(v);
                form.set(i, j, x);
                form.set(j, i, x);
            } else {
                std::size_t i = std::stoul(first), j, k;
                std::string v;
                if (!(ls >> j >> k >> v) || i >= j || j >= n || k >= n) return fail("bad bracket line: " + line);
                brackets[i * n + j].emplace_back(k, Rational::parse(v));
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ParseError || std::string(e.what()).find("structure-constant file line") != std::string::npos) throw;
            return fail(e.what());
        } catch (const std::exception&) {
            return fail("bad line: " + line);
        }
    }
    LieAlgebra l(std::move(labels), std::move(form));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!brackets[i * n + j].empty())
                l.set_bracket(i, j, SparseVector::from_entries(n, std::move(brackets[i * n + j])));
    return l;
}

}  // namespace lieforge
