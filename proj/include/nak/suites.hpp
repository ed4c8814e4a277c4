#pragma once

// Verification suites run by the command-line tool.

#include <string>

#include "nak/groebner.hpp"
#include "nak/linalg.hpp"
#include "nak/nakayama.hpp"
#include "nak/presentations.hpp"

namespace nak {

enum class Suite { Automorphism, Normal, Lemmas, Frobenius, Hilbert, All };

namespace detail {

inline VerificationItem equality_item(std::string id, const Matrix& got, const Matrix& want) {
    VerificationItem it{std::move(id), got == want, std::nullopt, ""};
    if (!it.pass) it.detail = "got " + format_matrix(got) + ", expected " + format_matrix(want);
    return it;
}

inline std::vector<std::size_t> expected_dims(AlgebraTag tag, std::size_t n, std::size_t count) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < count; ++d) {
        switch (tag) {
        case AlgebraTag::A: out.push_back(binomial(n + d - 1, n - 1)); break;
        case AlgebraTag::Dual: out.push_back(binomial(n, d)); break;
        case AlgebraTag::T2: {
            // (1+t)^{n-1} / (1-t): partial sums of binomial(n-1, k)
            std::size_t acc = 0;
            for (std::size_t k = 0; k <= d; ++k) acc += binomial(n - 1, k);
            out.push_back(acc);
            break;
        }
        default: out.push_back(binomial(n + d - 1, n - 1)); break;
        }
    }
    return out;
}

} // namespace detail

/// Expected Hilbert function of A, A^!, T1 and T2 for admissible parameters.
inline std::vector<std::size_t> expected_hilbert(AlgebraTag tag, std::size_t n, std::size_t count) {
    return detail::expected_dims(tag, n, count);
}

inline VerificationReport automorphism_suite(const Params& p) {
    require_conditions(p);
    VerificationReport r;
    const LinearGeneratorMap muA = nakayama_A(p);
    const LinearGeneratorMap muE = nakayama_dual(p);
    r.append(verify_graded_automorphism(build_A(p), muA), "automorphism.A.");
    r.append(verify_graded_automorphism(build_dual(p), muE), "automorphism.dual.");
    r.append(verify_graded_automorphism(build_T1(p), nakayama_T1(p)), "automorphism.T1.");
    r.append(verify_graded_automorphism(build_T2(p), nakayama_T2(p)), "automorphism.T2.");
    r.items.push_back(detail::equality_item("duality.dual_is_signed_transpose", muE.matrix,
                                            detail::sign_pow(p.n) * muA.matrix.transpose()));
    r.items.push_back(detail::equality_item("t2.composition_agrees", nakayama_T2_composed(p).matrix, nakayama_T2(p).matrix));
    return r;
}

inline VerificationReport normal_suite(Workbench& wb) {
    const Params& p = wb.params();
    require_conditions(p);
    const std::size_t n = p.n;
    VerificationReport r;
    auto solved = [&](const std::string& id, AlgebraTag tag, const NcPoly& z,
                      const std::optional<Matrix>& expected) -> std::optional<LinearGeneratorMap> {
        try {
            LinearGeneratorMap tau = conjugation_of_normal(wb.system(tag), z);
            VerificationItem it{id, true, std::nullopt, "tau = " + format_matrix(tau.matrix)};
            if (expected && tau.matrix != *expected) {
                it.pass = false;
                it.detail = "got " + format_matrix(tau.matrix) + ", expected " + format_matrix(*expected);
            }
            r.items.push_back(std::move(it));
            return tau;
        } catch (const NotNormal& e) {
            r.items.push_back({id, false, e.residue(), "generator " + std::to_string(e.generator())});
            return std::nullopt;
        }
    };
    solved("normal.omega_in_A", AlgebraTag::A, elements::omega(p), std::nullopt);
    auto tau_phi = solved("normal.phi_in_T2", AlgebraTag::T2, elements::phi(p), phi_conjugation(p).matrix);
    for (std::size_t i = 2; i <= p.s; ++i) {
        NcPoly z = NcPoly(n, Word{static_cast<int>(i), static_cast<int>(i)}) - NcPoly(n, Word{1, 1});
        solved("normal.square_difference_in_T1." + std::to_string(i), AlgebraTag::T1, z,
               square_difference_conjugation(p, i).matrix);
    }
    for (std::size_t k = p.s + 1; k <= n; ++k)
        solved("normal.square_in_T1." + std::to_string(k), AlgebraTag::T1,
               NcPoly(n, Word{static_cast<int>(k), static_cast<int>(k)}), square_conjugation(p, k).matrix);
    if (tau_phi)
        r.items.push_back(detail::equality_item("normal.dual_nakayama_via_phi", nakayama_T2(p).compose(*tau_phi).matrix,
                                                nakayama_dual(p).matrix));
    return r;
}

inline VerificationReport frobenius_suite(Workbench& wb) {
    const Params& p = wb.params();
    require_conditions(p);
    VerificationReport r;
    try {
        FrobeniusResult fr = frobenius_oracle(wb.system(AlgebraTag::Dual), p.n);
        std::string ranks;
        for (auto k : fr.pairing_ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(k);
        r.items.push_back({"frobenius.pairing_nondegenerate", true, std::nullopt, "ranks " + ranks});
        SignBranch b = compare_up_to_sign(fr.nu, nakayama_dual(p));
        VerificationItem it{"frobenius.matches_dual_nakayama", b != SignBranch::Mismatch, std::nullopt,
                            std::string("branch ") + branch_name(b)};
        if (b == SignBranch::Mismatch) it.detail += "; nu = " + format_matrix(fr.nu.matrix);
        r.items.push_back(std::move(it));
        r.items.push_back(detail::equality_item("frobenius.conventions_inverse", fr.nu.compose(fr.nu_right).matrix,
                                                Matrix::identity(p.n)));
    } catch (const Error& e) {
        r.items.push_back({"frobenius.pairing_nondegenerate", false, std::nullopt, e.what()});
        r.items.push_back({"frobenius.matches_dual_nakayama", false, std::nullopt, "oracle unavailable"});
    }
    return r;
}

inline VerificationReport hilbert_suite(Workbench& wb) {
    const Params& p = wb.params();
    require_conditions(p);
    VerificationReport r;
    for (AlgebraTag tag : {AlgebraTag::A, AlgebraTag::Dual, AlgebraTag::T2}) {
        HilbertFunction h = hilbert(wb.system(tag));
        auto want = expected_hilbert(tag, p.n, h.dims.size());
        VerificationItem it{std::string("hilbert.") + algebra_name(tag), h.dims == want, std::nullopt, ""};
        if (!it.pass) {
            it.detail = "got";
            for (auto d : h.dims) it.detail += " " + std::to_string(d);
        }
        r.items.push_back(std::move(it));
    }
    return r;
}

inline VerificationReport run_suite(Workbench& wb, Suite suite) {
    VerificationReport r;
    if (suite == Suite::Automorphism || suite == Suite::All) r.append(automorphism_suite(wb.params()));
    if (suite == Suite::Normal || suite == Suite::All) r.append(normal_suite(wb));
    if (suite == Suite::Lemmas || suite == Suite::All) r.append(verify_lemmas(wb), "lemmas.");
    if (suite == Suite::Frobenius || suite == Suite::All) r.append(frobenius_suite(wb));
    if (suite == Suite::Hilbert || suite == Suite::All) r.append(hilbert_suite(wb));
    return r;
}

} // namespace nak
