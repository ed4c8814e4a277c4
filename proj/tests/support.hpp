#pragma once

// Shared helpers for the test binaries: random values, perturbed fixtures and
// independent oracles (cofactor determinants, brute-force quotient dimensions).

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nak/nak.hpp"

namespace nak::testing {

inline Scalar S(const char* text) { return parse_scalar(text); }

inline Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const char* cell : row) m(r, c++) = parse_scalar(cell);
        ++r;
    }
    return m;
}

inline Matrix ones(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = 1;
    return m;
}

inline Params trivial_params(std::size_t n, std::size_t s) { return Params(n, s, ones(n), Matrix(n, n)); }

// ---------------------------------------------------------------------------
// Random values

class Random {
public:
    explicit Random(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long range = 5, long max_den = 4) {
        return Rational(integer(-range, range), integer(1, max_den));
    }

    Scalar scalar() {
        Scalar x(rational(), integer(0, 2) == 0 ? rational() : Rational(0));
        return x;
    }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar x = scalar();
            if (!x.is_zero()) return x;
        }
    }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer(0, 3) == 0 ? Scalar(0) : scalar();
        return m;
    }

    // Entries drawn from the half-integers in [-2, 2].
    Rational small_rational() { return Rational(integer(-4, 4), 2); }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

// ---------------------------------------------------------------------------
// Oracles

/// Determinant by cofactor expansion along the first row.
inline Scalar cofactor_determinant(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Scalar total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        Scalar term = m(0, c) * cofactor_determinant(minor);
        total += c % 2 ? -term : term;
    }
    return total;
}

/// Quotient dimension in degree d: n^d minus the rank of { u r v : r relation, deg(u r v) = d },
/// computed on the free algebra without any rewriting.
inline std::size_t brute_force_dimension(const Presentation& pres, std::size_t d) {
    const std::size_t n = pres.generator_count();
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= n;
    std::vector<Word> words;
    auto all_words = [&](std::size_t len) {
        std::vector<Word> out{Word{}};
        for (std::size_t k = 0; k < len; ++k) {
            std::vector<Word> next;
            for (const auto& w : out)
                for (std::size_t g = 1; g <= n; ++g) next.push_back(w * Word::generator(g));
            out = std::move(next);
        }
        return out;
    };
    PolySpan span(n);
    for (const auto& r : pres.relations()) {
        const std::size_t rd = r.degree();
        if (rd > d) continue;
        for (std::size_t left = 0; left <= d - rd; ++left)
            for (const auto& u : all_words(left))
                for (const auto& v : all_words(d - rd - left))
                    span.insert(NcPoly(n, u) * r * NcPoly(n, v));
    }
    return total - span.dimension();
}

// ---------------------------------------------------------------------------
// Perturbed fixtures: one changed entry each, targeting one condition.

struct Perturbation {
    std::string label;
    Condition target;
    Params params;
};

inline Params with_entry(Params p, bool in_c, std::size_t i, std::size_t j, const char* value) {
    (in_c ? p.C : p.Q)(i - 1, j - 1) = parse_scalar(value);
    return p;
}

inline std::vector<Perturbation> single_entry_perturbations() {
    using namespace nak::fixtures;
    return {
        {"ex2.2 c42=-2", Condition::CSkewQSymmetric, with_entry(ex2_2().params, true, 4, 2, "-2")},
        {"ex2.2 q12=2", Condition::QSquaresMatchFirst, with_entry(ex2_2().params, false, 1, 2, "2")},
        {"ex2.2 q43=1/4", Condition::QCScaling, with_entry(ex2_2().params, false, 4, 3, "1/4")},
        {"ex2.2 q42=-1", Condition::CFixedOnLeading, with_entry(ex2_2().params, false, 4, 2, "-1")},
        {"ex2.2 c13=1", Condition::CQuadraticRight, with_entry(ex2_2().params, true, 1, 3, "1")},
        {"ex2.4a c43=1", Condition::CQuadraticLeft, with_entry(ex2_4a().params, true, 4, 3, "1")},
        {"ex2.3 c13=-1", Condition::DetIMinusCsNonzero, with_entry(ex2_3().params, true, 1, 3, "-1")},
    };
}

/// Skew-consistent change of one pair (c34, c43) in the rank-two example: C becomes
/// invertible, which breaks only the two quadratic conditions.
inline Params rank_four_perturbation() {
    Params p = fixtures::ex2_4a().params;
    p.C(2, 3) = 1;
    p.C(3, 2) = -1;
    return p;
}

inline std::size_t index_of(const Witness& w, const std::string& key) {
    for (const auto& [k, v] : w.indices)
        if (k == key) return v;
    throw std::out_of_range("witness has no index " + key);
}

/// Re-evaluates a condition at the witness indices, written out from the definitions
/// independently of the checker. True when the witness exhibits a genuine violation.
inline bool witness_is_violation(const Params& p, Condition c, const Witness& w) {
    auto q = [&](std::size_t i, std::size_t j) { return p.q(i, j); };
    auto cc = [&](std::size_t i, std::size_t j) { return p.c(i, j); };
    switch (c) {
    case Condition::QUnitReciprocal: {
        std::size_t i = index_of(w, "i"), j = index_of(w, "j");
        return i == j ? !q(i, i).is_one() : q(j, i) * q(i, j) != Scalar(1);
    }
    case Condition::CSkewQSymmetric: {
        std::size_t i = index_of(w, "i"), j = index_of(w, "j");
        if (i == j) return !cc(i, i).is_zero();
        return cc(j, i) * q(i, j) != -cc(i, j) || cc(j, i) != -q(j, i) * cc(i, j);
    }
    case Condition::QSquaresMatchFirst: {
        std::size_t j = index_of(w, "j"), a = index_of(w, "alpha");
        return a >= 2 && a <= p.s && q(j, a) * q(j, a) != q(j, 1) * q(j, 1);
    }
    case Condition::QCScaling: {
        std::size_t a = index_of(w, "alpha"), i = index_of(w, "i"), j = index_of(w, "j");
        return i != a && j != a && q(i, a) * q(j, a) * cc(i, j) != q(1, a) * q(1, a) * cc(i, j);
    }
    case Condition::CFixedOnLeading: {
        std::size_t a = index_of(w, "alpha"), i = index_of(w, "i");
        return a <= p.s && q(i, a) * cc(i, a) != cc(i, a);
    }
    case Condition::CQuadraticRight:
    case Condition::CQuadraticLeft: {
        std::size_t a = index_of(w, "alpha"), j = index_of(w, "j"), l = index_of(w, "l"), k = index_of(w, "k");
        if (!(a <= p.s && j < l && l < k)) return false;
        Scalar v = c == Condition::CQuadraticRight
                       ? cc(a, j) * cc(k, l) - q(j, l) * cc(a, l) * cc(k, j) + q(l, k) * q(j, k) * cc(a, k) * cc(l, j)
                       : cc(a, k) * cc(l, j) - q(l, k) * cc(a, l) * cc(k, j) + q(j, l) * q(j, k) * cc(a, j) * cc(k, l);
        return !v.is_zero();
    }
    case Condition::DetIMinusCsNonzero: {
        Matrix m(p.s, p.s);
        for (std::size_t i = 0; i < p.s; ++i)
            for (std::size_t j = 0; j < p.s; ++j) m(i, j) = (i == j ? Scalar(1) : Scalar(0)) - p.C(i, j);
        return cofactor_determinant(m).is_zero();
    }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Random skew-symmetric matrices for the rank-two equivalence.

inline Matrix random_skew(Random& rng, std::size_t n) {
    Matrix c(n, n);
    const long mode = rng.integer(0, 2);
    if (mode == 0) {
        // u v^T - v u^T with u, v in {-1,0,1}^n: rank <= 2, entries in [-2, 2]
        std::vector<long> u(n), v(n);
        for (auto& x : u) x = rng.integer(-1, 1);
        for (auto& x : v) x = rng.integer(-1, 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, j) = u[i] * v[j] - v[i] * u[j];
        return c;
    }
    const long density = mode == 1 ? 4 : 1;  // sparse or dense
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational x = rng.integer(0, density) == 0 ? rng.small_rational() : Rational(0);
            if (mode == 2) x = rng.small_rational();
            c(i, j) = Scalar(x);
            c(j, i) = Scalar(Rational(-x));
        }
    return c;
}

/// c_ij c_kl + c_jk c_il - c_ik c_jl = 0 for all i<j<k<l (the Pfaffian-type identities).
inline bool four_term_identities_hold(const Matrix& c) {
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (!(c(i, j) * c(k, l) + c(j, k) * c(i, l) - c(i, k) * c(j, l)).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Random quadratic presentations for the dimension oracle.

inline Presentation random_presentation(Random& rng, std::size_t n) {
    for (;;) {
        const std::size_t count = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n * n) - 1));
        std::vector<NcPoly> rels;
        PolySpan span(n);
        for (std::size_t k = 0; k < count; ++k) {
            NcPoly r(n);
            const long terms = rng.integer(1, 3);
            for (long t = 0; t < terms; ++t) {
                Word w{static_cast<int>(rng.integer(1, static_cast<long>(n))), static_cast<int>(rng.integer(1, static_cast<long>(n)))};
                r.add_term(w, Scalar(rng.integer(-2, 2)));
            }
            if (r.is_zero() || !span.insert(r)) continue;
            rels.push_back(std::move(r));
        }
        if (!rels.empty()) return Presentation(n, std::move(rels), AlgebraTag::Custom, 'g');
    }
}

} // namespace nak::testing
