#pragma once

// Degree-truncated noncommutative Buchberger completion for homogeneous ideals.
//
// Completion proceeds one degree at a time. At degree d every overlap
// ambiguity of total degree d between existing rules is resolved: both
// rewritings of the ambiguity word are reduced and, if they differ, the
// difference becomes a new rule of degree d. Since all rules are homogeneous,
// rules of degree d can only be created from ambiguities of degree d and the
// rule set at degree d is brought into reduced echelon form, which makes the
// final system the (unique) reduced Groebner basis truncated at D.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nak/error.hpp"
#include "nak/freealg.hpp"
#include "nak/presentations.hpp"

namespace nak {

struct Rule {
    Word lead;
    NcPoly tail;  // lead -> tail; every word of tail is smaller than lead

    NcPoly as_relation() const {
        NcPoly r = tail;
        r *= Scalar(-1);
        r.add_term(lead, 1);
        return r;
    }
};

struct HilbertFunction {
    std::vector<std::size_t> dims;  // dims[d] = dim of the degree-d component
};

class RewriteSystem {
public:
    const Presentation& source() const noexcept { return source_; }
    std::size_t generator_count() const noexcept { return source_.generator_count(); }
    std::size_t truncation_degree() const noexcept { return truncation_; }
    std::size_t complete_to() const noexcept { return complete_to_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    /// Number of rules whose leading word has degree d.
    std::size_t rules_at_degree(std::size_t d) const {
        return static_cast<std::size_t>(std::count_if(rules_.begin(), rules_.end(),
                                                      [d](const Rule& r) { return r.lead.degree() == d; }));
    }

    /// Leftmost occurrence of a rule's leading word inside w: (rule index, position).
    std::optional<std::pair<std::size_t, std::size_t>> match(const Word& w) const {
        const std::string& key = w.key();
        for (std::size_t pos = 0; pos < key.size(); ++pos)
            for (std::size_t len : lead_lengths_) {
                if (pos + len > key.size()) break;
                auto it = index_.find(key.substr(pos, len));
                if (it != index_.end()) return std::make_pair(it->second, pos);
            }
        return std::nullopt;
    }

    bool is_normal(const Word& w) const { return !match(w).has_value(); }

    /// Reduces p with the current rules, no degree check.
    NcPoly reduce(const NcPoly& p) const {
        if (p.generators() != generator_count()) throw GeneratorMismatch();
        NcPoly::Terms work = p.terms();
        NcPoly::Terms done;
        while (!work.empty()) {
            auto top = std::prev(work.end());
            auto hit = match(top->first);
            if (!hit) {
                done.emplace_hint(done.begin(), top->first, std::move(top->second));
                work.erase(top);
                continue;
            }
            const Word w = top->first;
            const Scalar f = std::move(top->second);
            work.erase(top);
            const Rule& r = rules_[hit->first];
            const std::string& key = w.key();
            const std::string prefix = key.substr(0, hit->second);
            const std::string suffix = key.substr(hit->second + r.lead.degree());
            for (const auto& [tw, tc] : r.tail.terms()) {
                Word nw(prefix + tw.key() + suffix);
                Scalar add = f * tc;
                auto [it, inserted] = work.try_emplace(std::move(nw), add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
        }
        NcPoly out(generator_count());
        for (auto& [w, c] : done) out.add_term(w, c);
        return out;
    }

private:
    friend RewriteSystem complete(const Presentation& pres, std::size_t truncation);

    explicit RewriteSystem(Presentation src, std::size_t truncation)
        : source_(std::move(src)), truncation_(truncation) {}

    void add_rule(Rule r) {
        const std::size_t len = r.lead.degree();
        index_.emplace(r.lead.key(), rules_.size());
        rules_.push_back(std::move(r));
        if (std::find(lead_lengths_.begin(), lead_lengths_.end(), len) == lead_lengths_.end()) {
            lead_lengths_.push_back(len);
            std::sort(lead_lengths_.begin(), lead_lengths_.end());
        }
    }

    // Makes tails of the rules in [first, end) free of each other's leading words.
    void interreduce_from(std::size_t first) {
        std::vector<std::size_t> order;
        for (std::size_t k = first; k < rules_.size(); ++k) order.push_back(k);
        std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return rules_[a].lead < rules_[b].lead; });
        for (std::size_t k : order) rules_[k].tail = reduce(rules_[k].tail);
    }

    Presentation source_;
    std::size_t truncation_;
    std::size_t complete_to_ = 0;
    std::vector<Rule> rules_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> lead_lengths_;
};

/// An overlap ambiguity: the suffix of rules[left].lead of length `overlap` equals the prefix of rules[right].lead.
struct Ambiguity {
    std::size_t left;
    std::size_t right;
    std::size_t overlap;
    Word word;
};

namespace detail {

inline std::vector<Ambiguity> overlaps_of_degree(const std::vector<Rule>& rules, std::size_t degree) {
    std::vector<Ambiguity> out;
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const std::string& la = rules[a].lead.key();
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const std::string& lb = rules[b].lead.key();
            if (la.size() + lb.size() <= degree) continue;
            const std::size_t k = la.size() + lb.size() - degree;
            if (k >= la.size() || k >= lb.size()) continue;
            if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
            out.push_back({a, b, k, Word(la + lb.substr(k))});
        }
    }
    std::sort(out.begin(), out.end(), [](const Ambiguity& x, const Ambiguity& y) {
        if (x.word != y.word) return x.word < y.word;
        return std::tie(x.left, x.right) < std::tie(y.left, y.right);
    });
    return out;
}

// Difference of the two one-step rewritings of the ambiguity word.
inline NcPoly s_polynomial(const std::vector<Rule>& rules, const Ambiguity& amb, std::size_t n) {
    const Rule& l = rules[amb.left];
    const Rule& r = rules[amb.right];
    const Word right_rest = r.lead.subword(amb.overlap, r.lead.degree() - amb.overlap);
    const Word left_rest = l.lead.subword(0, l.lead.degree() - amb.overlap);
    return l.tail * NcPoly(n, right_rest) - NcPoly(n, left_rest) * r.tail;
}

} // namespace detail

inline std::size_t divergence_cap(std::size_t n) { return 10 * n * n; }

/// Completes the presentation through ambiguity degree `truncation`.
inline RewriteSystem complete(const Presentation& pres, std::size_t truncation) {
    const std::size_t n = pres.generator_count();
    if (truncation < 2 || truncation < pres.max_relation_degree())
        throw TruncationTooSmall("truncation degree " + std::to_string(truncation) + " is below the relation degree");

    RewriteSystem rs(pres, truncation);
    std::map<std::size_t, std::vector<NcPoly>> inputs;
    for (const auto& r : pres.relations()) inputs[r.degree()].push_back(r);

    for (std::size_t d = 1; d <= truncation; ++d) {
        const std::size_t first_new = rs.rules_.size();
        std::vector<NcPoly> candidates;
        if (auto it = inputs.find(d); it != inputs.end()) candidates = it->second;
        for (const auto& amb : detail::overlaps_of_degree(rs.rules_, d))
            candidates.push_back(detail::s_polynomial(rs.rules_, amb, n));

        for (const auto& cand : candidates) {
            NcPoly red = rs.reduce(cand);
            if (red.is_zero()) continue;
            red *= red.leading_coefficient().inverse();
            Word lead = red.leading_word();
            red.add_term(lead, -1);
            red *= Scalar(-1);
            rs.add_rule(Rule{std::move(lead), std::move(red)});
            if (rs.rules_.size() - first_new > divergence_cap(n))
                throw Diverged("more than " + std::to_string(divergence_cap(n)) + " rules at degree " + std::to_string(d));
        }
        rs.interreduce_from(first_new);
        rs.complete_to_ = d;
    }
    return rs;
}

/// Fully reduced representative; zero iff p lies in the ideal.
inline NcPoly normal_form(const RewriteSystem& rs, const NcPoly& p) {
    if (p.degree() > rs.complete_to()) throw DegreeExceedsTruncation(p.degree(), rs.complete_to());
    return rs.reduce(p);
}

namespace detail {

// Depth-first enumeration of normal words, which are closed under taking prefixes.
template <class Visit>
void for_each_normal_word(const RewriteSystem& rs, std::size_t max_degree, Visit&& visit) {
    const std::size_t n = rs.generator_count();
    std::vector<std::size_t> lens;
    for (const auto& r : rs.rules()) lens.push_back(r.lead.degree());
    std::sort(lens.begin(), lens.end());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    std::set<std::string> leads;
    for (const auto& r : rs.rules()) leads.insert(r.lead.key());

    std::string cur;
    auto ends_in_lead = [&]() {
        for (std::size_t len : lens) {
            if (len > cur.size()) break;
            if (leads.count(cur.substr(cur.size() - len))) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self) -> void {
        visit(cur);
        if (cur.size() == max_degree) return;
        for (std::size_t g = 1; g <= n; ++g) {
            cur.push_back(static_cast<char>(g));
            if (!ends_in_lead()) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
}

} // namespace detail

/// dims[d] = number of normal words of degree d, for 0 <= d <= truncation_degree - 1.
inline HilbertFunction hilbert(const RewriteSystem& rs) {
    const std::size_t top = rs.truncation_degree() - 1;
    HilbertFunction h;
    h.dims.assign(top + 1, 0);
    detail::for_each_normal_word(rs, top, [&](const std::string& w) { ++h.dims[w.size()]; });
    return h;
}

/// Normal words of degree d in descending word order. Degrees up to complete_to() are exact.
inline std::vector<Word> basis_at_degree(const RewriteSystem& rs, std::size_t d) {
    if (d > rs.complete_to()) throw DegreeExceedsTruncation(d, rs.complete_to());
    std::vector<Word> out;
    detail::for_each_normal_word(rs, d, [&](const std::string& w) {
        if (w.size() == d) out.emplace_back(w);
    });
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return b < a; });
    return out;
}

/// Post-pass: every overlap ambiguity of degree <= complete_to() resolves to zero.
/// Returns the first unresolved ambiguity, if any.
inline std::optional<Ambiguity> find_unresolved_ambiguity(const RewriteSystem& rs) {
    for (std::size_t d = 2; d <= rs.complete_to(); ++d)
        for (const auto& amb : detail::overlaps_of_degree(rs.rules(), d))
            if (!rs.reduce(detail::s_polynomial(rs.rules(), amb, rs.generator_count())).is_zero()) return amb;
    return std::nullopt;
}

/// Rules printed one per line as "lead -> tail".
inline std::string format_rules(const RewriteSystem& rs) {
    std::string out;
    for (const auto& r : rs.rules()) out += r.lead.text() + " -> " + r.tail.text() + "\n";
    return out;
}

} // namespace nak
