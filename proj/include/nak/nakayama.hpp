#pragma once

// Closed-form Nakayama automorphisms of A(Q,C,s), its Koszul dual and the
// auxiliary algebras T1, T2, together with the machinery that checks them
// independently: graded-automorphism tests, conjugation by normal elements,
// the identity suite for y_a, W_a, M_a, phi, and a Frobenius-pairing oracle on
// the Koszul dual.
//
// Every map is a LinearGeneratorMap: column j holds the image of generator j.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nak/error.hpp"
#include "nak/freealg.hpp"
#include "nak/groebner.hpp"
#include "nak/linalg.hpp"
#include "nak/presentations.hpp"

namespace nak {

struct LinearGeneratorMap {
    Matrix matrix;

    std::size_t size() const noexcept { return matrix.rows(); }
    NcPoly image(std::size_t j) const {
        NcPoly out(size());
        for (std::size_t i = 1; i <= size(); ++i) out.add_term(Word::generator(i), matrix(i - 1, j - 1));
        return out;
    }
    NcPoly apply(const NcPoly& p) const { return substitute(p, matrix); }

    /// (this o other): first other, then this.
    LinearGeneratorMap compose(const LinearGeneratorMap& other) const { return {matrix * other.matrix}; }

    friend bool operator==(const LinearGeneratorMap&, const LinearGeneratorMap&) = default;
};

struct NakayamaData {
    Matrix a;                 // (I - C_s)^{-1}
    Matrix b;                 // (I - C_s)^{-1} (I + C_s)
    std::vector<Scalar> prodQ;  // prodQ[j-1] = prod_w q_wj
    std::vector<Scalar> sq;     // sq[j-1] = q_j1^2
};

namespace detail {
// prodQ and sq only; no inversion of I - C_s.
inline NakayamaData q_products(const Params& p) {
    NakayamaData d;
    for (std::size_t j = 1; j <= p.n; ++j) {
        Scalar prod(1);
        for (std::size_t w = 1; w <= p.n; ++w) prod *= p.q(w, j);
        d.prodQ.push_back(prod);
        d.sq.push_back(p.q(j, 1) * p.q(j, 1));
    }
    return d;
}
} // namespace detail

inline NakayamaData nakayama_data(const Params& p) {
    NakayamaData d = detail::q_products(p);
    d.a = inverse(detail::i_minus_cs(p));
    d.b = d.a * detail::i_plus_cs(p);
    return d;
}

namespace detail {
inline Scalar sign_pow(std::size_t n) { return n % 2 ? Scalar(-1) : Scalar(1); }
}

/// Nakayama automorphism of A(Q,C,s) on the generators t_j.
inline LinearGeneratorMap nakayama_A(const Params& p) {
    require_conditions(p);
    const NakayamaData d = nakayama_data(p);
    Matrix m(p.n, p.n);
    for (std::size_t j = 1; j <= p.n; ++j) {
        const Scalar& P = d.prodQ[j - 1];
        if (j > p.s) {
            const Scalar factor = (Scalar(1) + d.sq[j - 1]) * P;
            for (std::size_t i = 1; i <= p.s; ++i) {
                Scalar acc(0);
                for (std::size_t l = 1; l <= p.s; ++l) acc += d.a(i - 1, l - 1) * p.c(l, j);
                m(i - 1, j - 1) = acc * factor;
            }
            m(j - 1, j - 1) += P;
        } else {
            for (std::size_t i = 1; i <= p.s; ++i) m(i - 1, j - 1) = d.b(i - 1, j - 1) * d.sq[j - 1] * P;
        }
    }
    return {std::move(m)};
}

/// Nakayama automorphism of the Koszul dual E = A^! on the generators x_j.
inline LinearGeneratorMap nakayama_dual(const Params& p) {
    require_conditions(p);
    const NakayamaData d = nakayama_data(p);
    const Scalar sign = detail::sign_pow(p.n);
    Matrix m(p.n, p.n);
    for (std::size_t j = 1; j <= p.n; ++j) {
        if (j > p.s) {
            m(j - 1, j - 1) = sign * d.prodQ[j - 1];
            continue;
        }
        for (std::size_t l = 1; l <= p.s; ++l) {
            m(l - 1, j - 1) += sign * d.b(j - 1, l - 1) * d.sq[l - 1] * d.prodQ[l - 1];
            for (std::size_t i = p.s + 1; i <= p.n; ++i)
                m(i - 1, j - 1) += sign * d.a(j - 1, l - 1) * p.c(l, i) * (Scalar(1) + d.sq[i - 1]) * d.prodQ[i - 1];
        }
    }
    return {std::move(m)};
}

/// mu_T1: x_j -> (prod_w p_wj) x_j with p_wj = -1/q_wj.
inline LinearGeneratorMap nakayama_T1(const Params& p) {
    Vector diag;
    for (std::size_t j = 1; j <= p.n; ++j) {
        Scalar prod(1);
        for (std::size_t w = 1; w <= p.n; ++w) prod *= -p.q(w, j).inverse();
        diag.push_back(prod);
    }
    return {Matrix::diagonal(diag)};
}

namespace detail {
inline void require(const Params& p, std::initializer_list<Condition> needed) {
    ConditionReport r = check_conditions(p);
    for (Condition c : needed)
        if (!r.entry(c).holds) throw ConditionsFailed(std::move(r));
}
} // namespace detail

/// mu_T2: x_j -> (-1)^n q_j1^2 (prod_w q_wj) x_j.
inline LinearGeneratorMap nakayama_T2(const Params& p) {
    detail::require(p, {Condition::QUnitReciprocal, Condition::QSquaresMatchFirst});
    const NakayamaData d = detail::q_products(p);
    Vector diag;
    for (std::size_t j = 1; j <= p.n; ++j) diag.push_back(detail::sign_pow(p.n) * d.sq[j - 1] * d.prodQ[j - 1]);
    return {Matrix::diagonal(diag)};
}

/// Conjugation by x_i^2 - x_1^2 in T1 (2 <= i <= s): x_j -> q_ij^2 x_j.
inline LinearGeneratorMap square_difference_conjugation(const Params& p, std::size_t i) {
    if (i < 2 || i > p.s) throw IndexOutOfRange("square difference index must satisfy 2 <= i <= s");
    Vector diag;
    for (std::size_t j = 1; j <= p.n; ++j) diag.push_back(p.q(i, j) * p.q(i, j));
    return {Matrix::diagonal(diag)};
}

/// Conjugation by x_k^2 in T1: x_j -> q_kj^2 x_j.
inline LinearGeneratorMap square_conjugation(const Params& p, std::size_t k) {
    if (k < 1 || k > p.n) throw IndexOutOfRange("square index out of range");
    Vector diag;
    for (std::size_t j = 1; j <= p.n; ++j) diag.push_back(p.q(k, j) * p.q(k, j));
    return {Matrix::diagonal(diag)};
}

/// mu_T2 assembled as mu_T1 o prod_{i=2..s} tau_{x_i^2 - x_1^2} o prod_{k>s} tau_{x_k^2}.
inline LinearGeneratorMap nakayama_T2_composed(const Params& p) {
    detail::require(p, {Condition::QUnitReciprocal, Condition::QSquaresMatchFirst});
    LinearGeneratorMap m = nakayama_T1(p);
    for (std::size_t i = 2; i <= p.s; ++i) m = m.compose(square_difference_conjugation(p, i));
    for (std::size_t k = p.s + 1; k <= p.n; ++k) m = m.compose(square_conjugation(p, k));
    return m;
}

/// tau_phi as obtained from (x_j - y_j) -> (x_j + y_j) for j <= s and x_j -> q_1j^2 x_j for j > s.
inline LinearGeneratorMap phi_conjugation(const Params& p) {
    require_conditions(p);
    const NakayamaData d = nakayama_data(p);
    Matrix m(p.n, p.n);
    for (std::size_t j = 1; j <= p.n; ++j) {
        if (j > p.s) {
            m(j - 1, j - 1) = p.q(1, j) * p.q(1, j);
            continue;
        }
        for (std::size_t l = 1; l <= p.s; ++l) {
            m(l - 1, j - 1) += d.b(j - 1, l - 1);
            for (std::size_t i = p.s + 1; i <= p.n; ++i)
                m(i - 1, j - 1) += d.a(j - 1, l - 1) * p.c(l, i) * (Scalar(1) + p.q(1, i) * p.q(1, i));
        }
    }
    return {std::move(m)};
}

inline bool calabi_yau_test(const Params& p) { return nakayama_A(p).matrix.is_identity(); }

// ---------------------------------------------------------------------------
// Verification reports

struct VerificationItem {
    std::string id;
    bool pass = true;
    std::optional<NcPoly> residue;  // first nonzero residue on failure
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    const VerificationItem* find(const std::string& id) const {
        for (const auto& it : items)
            if (it.id == id) return &it;
        return nullptr;
    }

    void append(const VerificationReport& other, const std::string& prefix = "") {
        for (auto it : other.items) {
            it.id = prefix + it.id;
            items.push_back(std::move(it));
        }
    }
};

/// Passes iff det(m) != 0 and every relation maps into the span of the relations.
inline VerificationReport verify_graded_automorphism(const Presentation& pres, const LinearGeneratorMap& m) {
    const std::size_t n = pres.generator_count();
    if (m.matrix.rows() != n || m.matrix.cols() != n) throw SizeMismatch("map size does not match generator count");
    VerificationReport report;
    Scalar det = determinant(m.matrix);
    VerificationItem inv{"invertible", !det.is_zero(), std::nullopt, det.is_zero() ? "determinant is 0" : ""};
    report.items.push_back(std::move(inv));

    PolySpan span(n);
    for (const auto& r : pres.relations()) span.insert(r);
    for (std::size_t k = 0; k < pres.relations().size(); ++k) {
        NcPoly residue = span.reduce(m.apply(pres.relations()[k])).residue;
        VerificationItem item{"relation." + std::to_string(k + 1), residue.is_zero(), std::nullopt, ""};
        if (!residue.is_zero()) item.residue = std::move(residue);
        report.items.push_back(std::move(item));
    }
    return report;
}

class NotNormal : public Error {
public:
    NotNormal(std::size_t generator, NcPoly residue)
        : Error("element is not normal: z*g" + std::to_string(generator) + " is not in A1*z (residue " + residue.text() + ")"),
          generator_(generator), residue_(std::move(residue)) {}
    std::size_t generator() const noexcept { return generator_; }
    const NcPoly& residue() const noexcept { return residue_; }

private:
    std::size_t generator_;
    NcPoly residue_;
};

/// Solves z g_j = tau(g_j) z in degree deg(z)+1 for every generator; returns tau on generators.
inline LinearGeneratorMap conjugation_of_normal(const RewriteSystem& rs, const NcPoly& z) {
    const std::size_t n = rs.generator_count();
    if (z.is_zero() || !z.is_homogeneous()) throw Error("conjugation requires a nonzero homogeneous element");
    if (z.degree() + 1 > rs.complete_to()) throw DegreeExceedsTruncation(z.degree() + 1, rs.complete_to());
    PolySpan span(n);
    for (std::size_t i = 1; i <= n; ++i) span.insert(normal_form(rs, NcPoly::generator(n, i) * z));
    Matrix sigma(n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        auto red = span.reduce(normal_form(rs, z * NcPoly::generator(n, j)));
        if (!red.residue.is_zero()) throw NotNormal(j, red.residue);
        for (std::size_t i = 0; i < n; ++i) sigma(i, j - 1) = red.coefficients[i];
    }
    return {std::move(sigma)};
}

// ---------------------------------------------------------------------------
// Rewrite systems for one parameter set, built on demand.

class Workbench {
public:
    Workbench(Params p, std::size_t truncation) : params_(std::move(p)), truncation_(truncation) {}

    const Params& params() const noexcept { return params_; }
    std::size_t truncation() const noexcept { return truncation_; }

    const RewriteSystem& system(AlgebraTag tag) {
        auto& slot = systems_[static_cast<std::size_t>(tag)];
        if (!slot) slot.emplace(complete(build_presentation(params_, tag), truncation_));
        return *slot;
    }

private:
    Params params_;
    std::size_t truncation_;
    std::optional<RewriteSystem> systems_[4];
};

inline std::size_t default_truncation(std::size_t n) { return std::max<std::size_t>(6, n + 2); }

/// Normal form, extended past complete_to() when some trusted degree k already has no
/// normal words: then every word of degree >= k contains a reducible prefix of degree k.
inline NcPoly reduce_or_vanish(const RewriteSystem& rs, const NcPoly& p) {
    if (p.degree() <= rs.complete_to()) return normal_form(rs, p);
    for (std::size_t k = 1; k <= rs.complete_to(); ++k) {
        if (!basis_at_degree(rs, k).empty()) continue;
        bool all_high = true;
        for (const auto& [w, c] : p.terms()) all_high = all_high && w.degree() >= k;
        if (all_high) return NcPoly(p.generators());
        break;
    }
    throw DegreeExceedsTruncation(p.degree(), rs.complete_to());
}

namespace detail {

// Collects one report item from a family of expressions that must all reduce to zero.
class IdentityCheck {
public:
    IdentityCheck(std::string id, const RewriteSystem* rs) : item_{std::move(id), true, std::nullopt, ""}, rs_(rs) {}

    void expect_zero(const NcPoly& expr, const std::string& label) {
        if (!item_.pass) return;
        NcPoly r = rs_ ? reduce_or_vanish(*rs_, expr) : expr;
        if (!r.is_zero()) {
            item_.pass = false;
            item_.residue = std::move(r);
            item_.detail = label;
        }
    }

    void fail(const std::string& why) {
        if (!item_.pass) return;
        item_.pass = false;
        item_.detail = why;
    }

    VerificationItem take() { return std::move(item_); }

private:
    VerificationItem item_;
    const RewriteSystem* rs_;
};

inline std::string at(const char* name, std::size_t v) { return std::string(name) + "=" + std::to_string(v); }

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// The identity suite: each identity is formed in the free algebra and reduced in T1, T2 or A^!.
/// With `gate` false the conditions are not required (used to study non-admissible parameters).
inline VerificationReport verify_lemmas(Workbench& wb, bool gate = true) {
    const Params& p = wb.params();
    if (gate) require_conditions(p);
    if (wb.truncation() < 5) throw TruncationTooSmall("the identity suite needs truncation degree >= 5");
    using namespace elements;
    using detail::at;
    const std::size_t n = p.n, s = p.s;
    auto x = [n](std::size_t i) { return NcPoly::generator(n, i); };
    const RewriteSystem& t1 = wb.system(AlgebraTag::T1);
    const RewriteSystem& t2 = wb.system(AlgebraTag::T2);
    const RewriteSystem& dual = wb.system(AlgebraTag::Dual);
    VerificationReport report;
    auto push = [&](detail::IdentityCheck& c) { report.items.push_back(c.take()); };

    {
        detail::IdentityCheck c("t1.x_y_anticommute", &t1);
        for (std::size_t a = 1; a <= s; ++a) c.expect_zero(x(a) * y(p, a) + y(p, a) * x(a), at("alpha", a));
        push(c);
    }
    {
        detail::IdentityCheck c("t1.x_w_anticommute", &t1);
        for (std::size_t a = 1; a <= s; ++a) c.expect_zero(x(a) * W(p, a) + W(p, a) * x(a), at("alpha", a));
        push(c);
    }
    {
        detail::IdentityCheck c("t1.x_m_q_commute", &t1);
        for (std::size_t a = 1; a <= n; ++a) {
            Scalar f = (p.q(1, a) * p.q(1, a)).inverse();
            c.expect_zero(x(a) * M(p, a) - f * (M(p, a) * x(a)), at("alpha", a));
        }
        push(c);
    }
    {
        detail::IdentityCheck c("t1.x_m_commute_leading", &t1);
        for (std::size_t a = 1; a <= s; ++a) c.expect_zero(x(a) * M(p, a) - M(p, a) * x(a), at("alpha", a));
        push(c);
    }
    {
        detail::IdentityCheck c("t2.w_x_vanish_trailing", &t2);
        for (std::size_t i = s + 1; i <= n; ++i) {
            c.expect_zero(W(p, i) * x(i), at("i", i) + " (W x)");
            c.expect_zero(x(i) * W(p, i), at("i", i) + " (x W)");
        }
        push(c);
    }
    {
        detail::IdentityCheck left("t2.c_weighted_x_m_vanish", &t2);
        detail::IdentityCheck right("t2.c_weighted_m_x_vanish", &t2);
        for (std::size_t a = 1; a <= s; ++a) {
            NcPoly xm(n), mx(n);
            for (std::size_t j = 1; j <= n; ++j) {
                xm += p.c(a, j) * (x(j) * M(p, j));
                mx += p.c(a, j) * (M(p, j) * x(j));
            }
            left.expect_zero(xm, at("alpha", a));
            right.expect_zero(mx, at("alpha", a));
        }
        push(left);
        push(right);
    }
    const NcPoly ph = phi(p);
    {
        detail::IdentityCheck c("t2.x_phi_q_commute", &t2);
        for (std::size_t i = s + 1; i <= n; ++i) {
            Scalar f = (p.q(1, i) * p.q(1, i)).inverse();
            c.expect_zero(x(i) * ph - f * (ph * x(i)), at("i", i));
        }
        push(c);
    }
    {
        detail::IdentityCheck c("t2.phi_exchange", &t2);
        for (std::size_t i = 1; i <= s; ++i) c.expect_zero((x(i) + y(p, i)) * ph - ph * (x(i) - y(p, i)), at("i", i));
        push(c);
    }
    {
        detail::IdentityCheck c("t2.phi_normal", &t2);
        try {
            conjugation_of_normal(t2, ph);
        } catch (const NotNormal& e) {
            c.expect_zero(e.residue(), at("generator", e.generator()));
        }
        push(c);
    }
    {
        detail::IdentityCheck c("dual.w_x_vanish", &dual);
        for (std::size_t a = 1; a <= n; ++a) {
            c.expect_zero(W(p, a) * x(a), at("alpha", a) + " (W x)");
            c.expect_zero(x(a) * W(p, a), at("alpha", a) + " (x W)");
        }
        push(c);
    }
    {
        // exact free-algebra identity, no quotient
        detail::IdentityCheck c("free.w_sum", nullptr);
        NcPoly total(n), leading(n);
        for (std::size_t a = 1; a <= n; ++a) total += W(p, a);
        for (std::size_t a = 1; a <= s; ++a) leading += W(p, a);
        c.expect_zero(total - Scalar(2) * lower_sum(p), "sum W = 2 sum c_ji x_i x_j");
        c.expect_zero(total - leading - big_w(p), "sum W = sum_{a<=s} W_a + bbW");
        for (std::size_t a = 1; a <= n; ++a) c.expect_zero(W(p, a) + M(p, a) - lower_sum(p), at("alpha", a) + " (W + M)");
        push(c);
    }
    {
        detail::IdentityCheck c("dual.w_square_vanish", &dual);
        for (std::size_t a = s + 1; a <= n; ++a) c.expect_zero(W(p, a) * W(p, a), at("alpha", a));
        push(c);
    }
    const NcPoly bw = big_w(p);
    {
        detail::IdentityCheck c("dual.big_w_power_vanish", &dual);
        const unsigned m = static_cast<unsigned>(n - s + 1);
        c.expect_zero(power(bw, m), at("m", m));
        push(c);
    }
    const NcPoly x1sq = x(1) * x(1);
    {
        detail::IdentityCheck c("dual.x1_fourth_power", &dual);
        const Scalar half = Scalar(Rational(1, 2));
        c.expect_zero(x1sq * x1sq + half * (bw * x1sq), "x1^4 = -1/2 bbW x1^2");
        c.expect_zero(x1sq * x1sq + half * (x1sq * bw), "x1^4 = -1/2 x1^2 bbW");
        push(c);
    }
    {
        detail::IdentityCheck c("dual.x1_power_vanish", &dual);
        const unsigned m = static_cast<unsigned>(n - s + 1);
        c.expect_zero(power(x(1), 4 * m), at("m", m));
        push(c);
    }
    {
        const HilbertFunction h = hilbert(dual);
        detail::IdentityCheck vanish("dual.top_degree_vanish", nullptr);
        detail::IdentityCheck binom("dual.hilbert_binomial", nullptr);
        for (std::size_t d = 0; d < h.dims.size(); ++d) {
            if (d > n && h.dims[d] != 0) vanish.fail("dim of degree " + std::to_string(d) + " is " + std::to_string(h.dims[d]));
            if (h.dims[d] != detail::binomial(n, d))
                binom.fail("dim of degree " + std::to_string(d) + " is " + std::to_string(h.dims[d]) + ", expected " +
                           std::to_string(detail::binomial(n, d)));
        }
        if (h.dims.size() <= n + 1) vanish.fail("truncation too small to observe degree n+1");
        push(vanish);
        push(binom);
    }
    {
        detail::IdentityCheck c("t1.nakayama_square_difference_scalar", &t1);
        const LinearGeneratorMap mu = nakayama_T1(p);
        Scalar prod(1);
        for (std::size_t w = 1; w <= n; ++w) prod *= p.q(1, w);
        for (std::size_t i = 2; i <= s; ++i) {
            NcPoly z = x(i) * x(i) - x1sq;
            c.expect_zero(mu.apply(z) - (prod * prod) * z, at("i", i));
        }
        push(c);
    }
    {
        detail::IdentityCheck c("t2.nakayama_phi_scalar", &t2);
        try {
            const LinearGeneratorMap mu = nakayama_T2(p);
            Scalar prod(1);
            for (std::size_t w = 1; w <= n; ++w) prod *= p.q(w, 1);
            c.expect_zero(mu.apply(ph) - (prod * prod) * ph, "mu_T2(phi)");
        } catch (const ConditionsFailed&) {
            c.fail("mu_T2 undefined for these parameters");
        }
        push(c);
    }
    return report;
}

inline VerificationReport verify_lemmas(const Params& p, std::size_t truncation, bool gate = true) {
    if (gate) require_conditions(p);
    Workbench wb(p, truncation);
    return verify_lemmas(wb, gate);
}

// ---------------------------------------------------------------------------
// Frobenius oracle on the Koszul dual

struct FrobeniusResult {
    LinearGeneratorMap nu;        // lambda(a b) = lambda(nu(b) a), the convention matching mu_E up to sign
    LinearGeneratorMap nu_right;  // lambda(a b) = lambda(b nu_right(a)); the inverse of nu
    std::vector<std::size_t> pairing_ranks;  // rank of the degree k x (n-k) pairing, k = 0..n
};

inline FrobeniusResult frobenius_oracle(const RewriteSystem& rs, std::size_t n) {
    if (rs.truncation_degree() < n + 2)
        throw TruncationTooSmall("Frobenius oracle needs truncation degree >= n + 2");
    const HilbertFunction h = hilbert(rs);
    for (std::size_t d = 0; d < h.dims.size(); ++d)
        if (h.dims[d] != detail::binomial(n, d))
            throw HilbertMismatch("degree " + std::to_string(d) + " has dimension " + std::to_string(h.dims[d]) +
                                  ", expected " + std::to_string(detail::binomial(n, d)));

    const Word top = basis_at_degree(rs, n).front();
    auto lambda = [&](const NcPoly& p) { return normal_form(rs, p).coefficient(top); };

    FrobeniusResult out;
    std::vector<std::vector<Word>> basis;
    for (std::size_t k = 0; k <= n; ++k) basis.push_back(basis_at_degree(rs, k));
    for (std::size_t k = 0; k <= n; ++k) {
        const auto& left = basis[k];
        const auto& right = basis[n - k];
        Matrix pairing(left.size(), right.size());
        for (std::size_t r = 0; r < left.size(); ++r)
            for (std::size_t c = 0; c < right.size(); ++c) pairing(r, c) = lambda(NcPoly(n, left[r] * right[c]));
        const std::size_t rk = rank(pairing);
        out.pairing_ranks.push_back(rk);
        if (rk != left.size() || rk != right.size())
            throw NotFrobenius("pairing between degrees " + std::to_string(k) + " and " + std::to_string(n - k) +
                               " is degenerate (rank " + std::to_string(rk) + ")");
    }

    // Solves lambda(u x_j) = lambda(nu(x_j) u) and lambda(x_j u) = lambda(u nu_right(x_j))
    // over every basis word u of degree n-1.
    const auto& vs = basis[n - 1];
    auto solve_twist = [&](bool twist_left) {
        Matrix system(vs.size(), n);
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t i = 1; i <= n; ++i) {
                const Word g = Word::generator(i);
                system(r, i - 1) = lambda(NcPoly(n, twist_left ? g * vs[r] : vs[r] * g));
            }
        Matrix m(n, n);
        for (std::size_t j = 1; j <= n; ++j) {
            const Word g = Word::generator(j);
            Vector rhs;
            for (const auto& v : vs) rhs.push_back(lambda(NcPoly(n, twist_left ? v * g : g * v)));
            auto sol = solve(system, rhs);
            if (!sol) throw NotFrobenius("no Nakayama image for generator " + std::to_string(j));
            for (std::size_t i = 0; i < n; ++i) m(i, j - 1) = (*sol)[i];
        }
        return LinearGeneratorMap{std::move(m)};
    };
    out.nu = solve_twist(true);
    out.nu_right = solve_twist(false);
    return out;
}

inline LinearGeneratorMap frobenius_nakayama(const RewriteSystem& rs_dual, std::size_t n) {
    return frobenius_oracle(rs_dual, n).nu;
}

enum class SignBranch { Exact, Twisted, Mismatch };

inline const char* branch_name(SignBranch b) {
    switch (b) {
    case SignBranch::Exact: return "exact";
    case SignBranch::Twisted: return "sign-twisted";
    case SignBranch::Mismatch: return "mismatch";
    }
    return "?";
}

/// Compares the oracle's nu with mu_E, allowing the degree-parity twist x -> -x.
inline SignBranch compare_up_to_sign(const LinearGeneratorMap& nu, const LinearGeneratorMap& mu) {
    if (nu.matrix == mu.matrix) return SignBranch::Exact;
    if (nu.matrix == Scalar(-1) * mu.matrix) return SignBranch::Twisted;
    return SignBranch::Mismatch;
}

} // namespace nak
