#pragma once

// Parameter triples (Q, C, s), the admissibility conditions on them, and the
// four quadratic presentations attached to a parameter set: the algebra A
// itself, its Koszul dual, the (-1)-twisted skew polynomial ring T1 and its
// quotient T2 by the square relations.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nak/error.hpp"
#include "nak/freealg.hpp"
#include "nak/linalg.hpp"

namespace nak {

struct Params {
    std::size_t n = 0;
    std::size_t s = 0;
    Matrix Q;
    Matrix C;

    Params() = default;
    Params(std::size_t n_, std::size_t s_, Matrix q_, Matrix c_) : n(n_), s(s_), Q(std::move(q_)), C(std::move(c_)) {
        validate();
    }

    /// 1-based accessors matching the usual q_ij / c_ij indexing.
    const Scalar& q(std::size_t i, std::size_t j) const { return Q(i - 1, j - 1); }
    const Scalar& c(std::size_t i, std::size_t j) const { return C(i - 1, j - 1); }

    /// Structural invariants: 1 <= s <= n, square n x n matrices, every q_ij nonzero.
    void validate() const {
        if (n == 0) throw SizeMismatch("n must be positive");
        if (s < 1 || s > n) throw SizeMismatch("s must satisfy 1 <= s <= n");
        if (Q.rows() != n || Q.cols() != n || C.rows() != n || C.cols() != n)
            throw SizeMismatch("Q and C must be n x n");
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (q(i, j).is_zero())
                    throw SizeMismatch("q_" + std::to_string(i) + std::to_string(j) + " must be nonzero");
    }

    friend bool operator==(const Params&, const Params&) = default;
};

/// Truncation to the leading s x s blocks (n' = s' = s).
inline Params restrict_params(const Params& p) {
    return Params(p.s, p.s, p.Q.leading_block(p.s), p.C.leading_block(p.s));
}

// ---------------------------------------------------------------------------
// Conditions

enum class Condition {
    QUnitReciprocal,        // q_ii = 1, q_ji = 1/q_ij
    CSkewQSymmetric,        // c_ii = 0, c_ji = -c_ij/q_ij = -q_ji c_ij
    QSquaresMatchFirst,     // q_ja^2 = q_j1^2, a = 2..s
    QCScaling,              // q_ia q_ja c_ij = q_1a^2 c_ij, i,j != a
    CFixedOnLeading,        // q_ia c_ia = c_ia, a <= s
    CQuadraticRight,        // c_aj c_kl - q_jl c_al c_kj + q_lk q_jk c_ak c_lj = 0
    CQuadraticLeft,         // c_ak c_lj - q_lk c_al c_kj + q_jl q_jk c_aj c_kl = 0
    DetIMinusCsNonzero,     // det(I - C_s) != 0
};

inline constexpr Condition kAllConditions[] = {
    Condition::QUnitReciprocal, Condition::CSkewQSymmetric, Condition::QSquaresMatchFirst,
    Condition::QCScaling,       Condition::CFixedOnLeading, Condition::CQuadraticRight,
    Condition::CQuadraticLeft,  Condition::DetIMinusCsNonzero,
};

inline const char* condition_id(Condition c) {
    switch (c) {
    case Condition::QUnitReciprocal: return "q_unit_reciprocal";
    case Condition::CSkewQSymmetric: return "c_skew_q_symmetric";
    case Condition::QSquaresMatchFirst: return "q_squares_match_first_column";
    case Condition::QCScaling: return "q_c_scaling";
    case Condition::CFixedOnLeading: return "c_fixed_by_q_on_leading_block";
    case Condition::CQuadraticRight: return "c_quadratic_right";
    case Condition::CQuadraticLeft: return "c_quadratic_left";
    case Condition::DetIMinusCsNonzero: return "det_i_minus_cs_nonzero";
    }
    return "?";
}

/// A concrete violation: the index tuple and the values that fail to match.
struct Witness {
    std::vector<std::pair<std::string, std::size_t>> indices;  // e.g. {"i",2},{"j",4}
    std::vector<std::pair<std::string, Scalar>> values;        // e.g. {"lhs",..},{"rhs",..}
};

struct ConditionEntry {
    std::string id;
    bool holds = true;
    std::optional<Witness> witness;
};

struct ConditionReport {
    std::vector<ConditionEntry> conditions;  // the eight admissibility conditions, in order
    ConditionEntry det_i_plus_cs;            // derived: det(I + C_s) != 0

    bool all_hold() const {
        for (const auto& e : conditions)
            if (!e.holds) return false;
        return true;
    }

    const ConditionEntry& entry(Condition c) const { return conditions.at(static_cast<std::size_t>(c)); }

    /// Ids of failing conditions, in order.
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& e : conditions)
            if (!e.holds) out.push_back(e.id);
        return out;
    }
};

class ConditionsFailed : public Error {
public:
    explicit ConditionsFailed(ConditionReport report)
        : Error("parameters violate the admissibility conditions"), report_(std::move(report)) {}
    const ConditionReport& report() const noexcept { return report_; }

private:
    ConditionReport report_;
};

namespace detail {

inline Matrix leading_c_block(const Params& p) { return p.C.leading_block(p.s); }

inline Matrix i_minus_cs(const Params& p) { return Matrix::identity(p.s) - leading_c_block(p); }
inline Matrix i_plus_cs(const Params& p) { return Matrix::identity(p.s) + leading_c_block(p); }

class ConditionChecker {
public:
    explicit ConditionChecker(const Params& p) : p_(p) {}

    ConditionReport run() const {
        ConditionReport r;
        for (Condition c : kAllConditions) {
            ConditionEntry e{condition_id(c), true, evaluate(c)};
            e.holds = !e.witness.has_value();
            r.conditions.push_back(std::move(e));
        }
        Scalar d = determinant(i_plus_cs(p_));
        r.det_i_plus_cs.id = "det_i_plus_cs_nonzero";
        r.det_i_plus_cs.holds = !d.is_zero();
        if (d.is_zero()) r.det_i_plus_cs.witness = Witness{{}, {{"det", d}}};
        return r;
    }

    std::optional<Witness> evaluate(Condition c) const {
        switch (c) {
        case Condition::QUnitReciprocal: return q_unit_reciprocal();
        case Condition::CSkewQSymmetric: return c_skew_q_symmetric();
        case Condition::QSquaresMatchFirst: return q_squares_match_first();
        case Condition::QCScaling: return q_c_scaling();
        case Condition::CFixedOnLeading: return c_fixed_on_leading();
        case Condition::CQuadraticRight: return c_quadratic(true);
        case Condition::CQuadraticLeft: return c_quadratic(false);
        case Condition::DetIMinusCsNonzero: {
            Scalar d = determinant(i_minus_cs(p_));
            if (d.is_zero()) return Witness{{}, {{"det", d}}};
            return std::nullopt;
        }
        }
        return std::nullopt;
    }

private:
    const Scalar& q(std::size_t i, std::size_t j) const { return p_.q(i, j); }
    const Scalar& c(std::size_t i, std::size_t j) const { return p_.c(i, j); }

    static Witness mismatch(std::vector<std::pair<std::string, std::size_t>> idx, Scalar lhs, Scalar rhs) {
        return Witness{std::move(idx), {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}}};
    }

    std::optional<Witness> q_unit_reciprocal() const {
        for (std::size_t i = 1; i <= p_.n; ++i)
            if (!q(i, i).is_one()) return mismatch({{"i", i}, {"j", i}}, q(i, i), Scalar(1));
        for (std::size_t i = 1; i <= p_.n; ++i)
            for (std::size_t j = 1; j <= p_.n; ++j)
                if (q(j, i) != q(i, j).inverse()) return mismatch({{"i", i}, {"j", j}}, q(j, i), q(i, j).inverse());
        return std::nullopt;
    }

    std::optional<Witness> c_skew_q_symmetric() const {
        for (std::size_t i = 1; i <= p_.n; ++i)
            if (!c(i, i).is_zero()) return mismatch({{"i", i}, {"j", i}}, c(i, i), Scalar(0));
        for (std::size_t i = 1; i <= p_.n; ++i)
            for (std::size_t j = 1; j <= p_.n; ++j) {
                Scalar via_inverse = -(q(i, j).inverse() * c(i, j));
                Scalar via_transpose = -(q(j, i) * c(i, j));
                if (c(j, i) != via_inverse) return mismatch({{"i", i}, {"j", j}}, c(j, i), via_inverse);
                if (c(j, i) != via_transpose) return mismatch({{"i", i}, {"j", j}}, c(j, i), via_transpose);
            }
        return std::nullopt;
    }

    std::optional<Witness> q_squares_match_first() const {
        for (std::size_t j = 1; j <= p_.n; ++j)
            for (std::size_t a = 2; a <= p_.s; ++a) {
                Scalar lhs = q(j, a) * q(j, a), rhs = q(j, 1) * q(j, 1);
                if (lhs != rhs) return mismatch({{"j", j}, {"alpha", a}}, lhs, rhs);
            }
        return std::nullopt;
    }

    // Ordered pairs i != j, both different from alpha.
    std::optional<Witness> q_c_scaling() const {
        for (std::size_t a = 1; a <= p_.n; ++a)
            for (std::size_t i = 1; i <= p_.n; ++i)
                for (std::size_t j = 1; j <= p_.n; ++j) {
                    if (i == a || j == a || i == j) continue;
                    Scalar lhs = q(i, a) * q(j, a) * c(i, j);
                    Scalar rhs = q(1, a) * q(1, a) * c(i, j);
                    if (lhs != rhs) return mismatch({{"alpha", a}, {"i", i}, {"j", j}}, lhs, rhs);
                }
        return std::nullopt;
    }

    std::optional<Witness> c_fixed_on_leading() const {
        for (std::size_t a = 1; a <= p_.s; ++a)
            for (std::size_t i = 1; i <= p_.n; ++i) {
                Scalar lhs = q(i, a) * c(i, a);
                if (lhs != c(i, a)) return mismatch({{"alpha", a}, {"i", i}}, lhs, c(i, a));
            }
        return std::nullopt;
    }

    std::optional<Witness> c_quadratic(bool right) const {
        for (std::size_t a = 1; a <= p_.s; ++a)
            for (std::size_t j = 1; j <= p_.n; ++j)
                for (std::size_t l = j + 1; l <= p_.n; ++l)
                    for (std::size_t k = l + 1; k <= p_.n; ++k) {
                        Scalar v = right ? c(a, j) * c(k, l) - q(j, l) * c(a, l) * c(k, j) +
                                               q(l, k) * q(j, k) * c(a, k) * c(l, j)
                                         : c(a, k) * c(l, j) - q(l, k) * c(a, l) * c(k, j) +
                                               q(j, l) * q(j, k) * c(a, j) * c(k, l);
                        if (!v.is_zero()) return mismatch({{"alpha", a}, {"j", j}, {"l", l}, {"k", k}}, v, Scalar(0));
                    }
        return std::nullopt;
    }

    const Params& p_;
};

} // namespace detail

/// Evaluates every admissibility condition literally; failures are reported with a witness, never thrown.
inline ConditionReport check_conditions(const Params& p) { return detail::ConditionChecker(p).run(); }

inline void require_conditions(const Params& p) {
    ConditionReport r = check_conditions(p);
    if (!r.all_hold()) throw ConditionsFailed(std::move(r));
}

// ---------------------------------------------------------------------------
// Presentations

enum class AlgebraTag { A, Dual, T1, T2, Custom };

inline const char* algebra_name(AlgebraTag t) {
    switch (t) {
    case AlgebraTag::A: return "A";
    case AlgebraTag::Dual: return "dual";
    case AlgebraTag::T1: return "T1";
    case AlgebraTag::T2: return "T2";
    case AlgebraTag::Custom: return "custom";
    }
    return "?";
}

class Presentation {
public:
    /// Validates that every relation is nonzero and homogeneous quadratic (or of any fixed
    /// degree >= 1 for custom presentations) and that the relations are linearly independent.
    Presentation(std::size_t generators, std::vector<NcPoly> relations, AlgebraTag tag, char letter = 'g')
        : n_(generators), relations_(std::move(relations)), tag_(tag) {
        for (std::size_t k = 1; k <= n_; ++k) names_.push_back(std::string(1, letter) + std::to_string(k));
        PolySpan span(n_);
        for (const auto& r : relations_) {
            if (r.generators() != n_) throw GeneratorMismatch();
            if (r.is_zero()) throw SizeMismatch("zero relation");
            if (!r.is_homogeneous()) throw SizeMismatch("relation is not homogeneous: " + r.text());
            if (tag_ != AlgebraTag::Custom && r.degree() != 2) throw SizeMismatch("relation is not quadratic");
            if (!span.insert(r)) throw SizeMismatch("relations are linearly dependent");
        }
    }

    std::size_t generator_count() const noexcept { return n_; }
    const std::vector<std::string>& generator_names() const noexcept { return names_; }
    const std::vector<NcPoly>& relations() const noexcept { return relations_; }
    AlgebraTag tag() const noexcept { return tag_; }

    std::size_t max_relation_degree() const {
        std::size_t d = 0;
        for (const auto& r : relations_) d = std::max(d, r.degree());
        return d;
    }

private:
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<NcPoly> relations_;
    AlgebraTag tag_;
};

namespace detail {

inline NcPoly gen(std::size_t n, std::size_t i) { return NcPoly::generator(n, i); }
inline NcPoly mono(std::size_t n, std::size_t i, std::size_t j, Scalar c = 1) { return NcPoly(n, Word{static_cast<int>(i), static_cast<int>(j)}, std::move(c)); }

inline NcPoly omega(const Params& p) {
    NcPoly w(p.n);
    for (std::size_t i = 1; i <= p.s; ++i) w += mono(p.n, i, i);
    return w;
}

// x_j x_i - p_ij x_i x_j for i < j, with p_ij = -1/q_ij.
inline std::vector<NcPoly> t1_relations(const Params& p) {
    std::vector<NcPoly> rels;
    for (std::size_t i = 1; i <= p.n; ++i)
        for (std::size_t j = i + 1; j <= p.n; ++j) {
            Scalar pij = -p.q(i, j).inverse();
            rels.push_back(mono(p.n, j, i) - mono(p.n, i, j, pij));
        }
    return rels;
}

} // namespace detail

/// t_j t_i - q_ij t_i t_j - c_ij Omega for 1 <= i < j <= n.
inline Presentation build_A(const Params& p) {
    std::vector<NcPoly> rels;
    const NcPoly omega = detail::omega(p);
    for (std::size_t i = 1; i <= p.n; ++i)
        for (std::size_t j = i + 1; j <= p.n; ++j)
            rels.push_back(detail::mono(p.n, j, i) - detail::mono(p.n, i, j, p.q(i, j)) - p.c(i, j) * omega);
    return Presentation(p.n, std::move(rels), AlgebraTag::A, 't');
}

/// Koszul dual: x_j x_i + x_i x_j / q_ij (i<j); x_i^2 (i>s); x_i^2 - x_1^2 (1<i<=s);
/// x_1^2 - sum_{i<j} c_ij / q_ij x_i x_j.
inline Presentation build_dual(const Params& p) {
    const std::size_t n = p.n;
    std::vector<NcPoly> rels;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            rels.push_back(detail::mono(n, j, i) + detail::mono(n, i, j, p.q(i, j).inverse()));
    for (std::size_t i = p.s + 1; i <= n; ++i) rels.push_back(detail::mono(n, i, i));
    for (std::size_t i = 2; i <= p.s; ++i) rels.push_back(detail::mono(n, i, i) - detail::mono(n, 1, 1));
    NcPoly last = detail::mono(n, 1, 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) last -= detail::mono(n, i, j, p.q(i, j).inverse() * p.c(i, j));
    rels.push_back(std::move(last));
    return Presentation(n, std::move(rels), AlgebraTag::Dual, 'x');
}

inline Presentation build_T1(const Params& p) {
    return Presentation(p.n, detail::t1_relations(p), AlgebraTag::T1, 'x');
}

/// T1 modulo x_1^2 - x_i^2 (i = 2..s) and x_p^2 (p > s).
inline Presentation build_T2(const Params& p) {
    auto rels = detail::t1_relations(p);
    for (std::size_t i = 2; i <= p.s; ++i) rels.push_back(detail::mono(p.n, 1, 1) - detail::mono(p.n, i, i));
    for (std::size_t k = p.s + 1; k <= p.n; ++k) rels.push_back(detail::mono(p.n, k, k));
    return Presentation(p.n, std::move(rels), AlgebraTag::T2, 'x');
}

inline Presentation build_presentation(const Params& p, AlgebraTag tag) {
    switch (tag) {
    case AlgebraTag::A: return build_A(p);
    case AlgebraTag::Dual: return build_dual(p);
    case AlgebraTag::T1: return build_T1(p);
    case AlgebraTag::T2: return build_T2(p);
    case AlgebraTag::Custom: break;
    }
    throw Error("no builder for custom presentations");
}

// ---------------------------------------------------------------------------
// Distinguished elements of the free algebra on x_1..x_n

enum class Distinguished { Y, W, M, BigW, Phi, Omega };

namespace elements {

/// y_a = sum_i c_ai x_i
inline NcPoly y(const Params& p, std::size_t a) {
    if (a < 1 || a > p.n) throw IndexOutOfRange("alpha out of range");
    NcPoly out(p.n);
    for (std::size_t i = 1; i <= p.n; ++i) out.add_term(Word::generator(i), p.c(a, i));
    return out;
}

/// W_a = sum_{i<a} c_ai x_i x_a + sum_{j>a} c_ja x_a x_j
inline NcPoly W(const Params& p, std::size_t a) {
    if (a < 1 || a > p.n) throw IndexOutOfRange("alpha out of range");
    NcPoly out(p.n);
    for (std::size_t i = 1; i < a; ++i) out += detail::mono(p.n, i, a, p.c(a, i));
    for (std::size_t j = a + 1; j <= p.n; ++j) out += detail::mono(p.n, a, j, p.c(j, a));
    return out;
}

/// M_a = sum_{i<j, i,j != a} c_ji x_i x_j
inline NcPoly M(const Params& p, std::size_t a) {
    if (a < 1 || a > p.n) throw IndexOutOfRange("alpha out of range");
    NcPoly out(p.n);
    for (std::size_t i = 1; i <= p.n; ++i)
        for (std::size_t j = i + 1; j <= p.n; ++j)
            if (i != a && j != a) out += detail::mono(p.n, i, j, p.c(j, i));
    return out;
}

/// sum_{i<j} c_ji x_i x_j
inline NcPoly lower_sum(const Params& p) {
    NcPoly out(p.n);
    for (std::size_t i = 1; i <= p.n; ++i)
        for (std::size_t j = i + 1; j <= p.n; ++j) out += detail::mono(p.n, i, j, p.c(j, i));
    return out;
}

/// sum_{a>s} W_a
inline NcPoly big_w(const Params& p) {
    NcPoly out(p.n);
    for (std::size_t a = p.s + 1; a <= p.n; ++a) out += W(p, a);
    return out;
}

/// x_1^2 + sum_{i<j} c_ji x_i x_j
inline NcPoly phi(const Params& p) { return detail::mono(p.n, 1, 1) + lower_sum(p); }

inline NcPoly omega(const Params& p) { return detail::omega(p); }

} // namespace elements

inline NcPoly build_distinguished(const Params& p, Distinguished which, std::size_t alpha = 0) {
    switch (which) {
    case Distinguished::Y: return elements::y(p, alpha);
    case Distinguished::W: return elements::W(p, alpha);
    case Distinguished::M: return elements::M(p, alpha);
    case Distinguished::BigW: return elements::big_w(p);
    case Distinguished::Phi: return elements::phi(p);
    case Distinguished::Omega: return elements::omega(p);
    }
    throw IndexOutOfRange("unknown element");
}

} // namespace nak
