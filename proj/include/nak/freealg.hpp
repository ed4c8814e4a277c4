#pragma once

// Words and polynomials in the free algebra k<g1,...,gn>.
//
// Words are ordered degree-lexicographically with gn > ... > g1: shorter words
// are smaller, and words of equal length compare letter by letter from the left.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nak/error.hpp"
#include "nak/linalg.hpp"
#include "nak/scalar.hpp"

namespace nak {

/// A word in the generators; letters are 1-based generator indices. Empty word = unit.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters) {
        for (int l : letters) push_back(static_cast<std::size_t>(l));
    }
    explicit Word(std::string letters) : letters_(std::move(letters)) {}

    static Word generator(std::size_t index) {
        Word w;
        w.push_back(index);
        return w;
    }

    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t operator[](std::size_t k) const { return static_cast<unsigned char>(letters_[k]); }

    void push_back(std::size_t letter) {
        if (letter == 0 || letter > 255) throw IndexOutOfRange("generator index out of range");
        letters_.push_back(static_cast<char>(letter));
    }

    /// Raw letter storage, one byte per letter; used as a hash key.
    const std::string& key() const noexcept { return letters_; }

    Word subword(std::size_t pos, std::size_t len) const { return Word(letters_.substr(pos, len)); }

    friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        int c = a.letters_.compare(b.letters_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

    /// "g1.g2.g2"; the unit word prints as "1".
    std::string text(char prefix = 'g') const {
        if (empty()) return "1";
        std::string out;
        for (std::size_t k = 0; k < degree(); ++k) {
            if (k) out += '.';
            out += prefix;
            out += std::to_string((*this)[k]);
        }
        return out;
    }

private:
    std::string letters_;
};

inline std::strong_ordering compare_words(const Word& u, const Word& v) { return u <=> v; }

/// Noncommutative polynomial over Q(i); no zero coefficients are stored.
class NcPoly {
public:
    using Terms = std::map<Word, Scalar>;

    NcPoly() = default;
    explicit NcPoly(std::size_t generators) : n_(generators) {}
    NcPoly(std::size_t generators, const Word& w, Scalar c = 1) : n_(generators) { add_term(w, std::move(c)); }

    static NcPoly one(std::size_t generators) { return NcPoly(generators, Word{}); }
    static NcPoly generator(std::size_t generators, std::size_t index) {
        if (index == 0 || index > generators) throw IndexOutOfRange("generator index out of range");
        return NcPoly(generators, Word::generator(index));
    }

    std::size_t generators() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Largest word present. Precondition: nonzero.
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }

    std::size_t degree() const { return terms_.empty() ? 0 : leading_word().degree(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const std::size_t d = terms_.begin()->first.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
    }

    Scalar coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NcPoly& operator+=(const NcPoly& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPoly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= s;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(NcPoly a) { return a *= Scalar(-1); }
    friend NcPoly operator*(NcPoly a, const Scalar& s) { return a *= s; }
    friend NcPoly operator*(const Scalar& s, NcPoly a) { return a *= s; }

    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        a.check(b);
        NcPoly p(a.n_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) p.add_term(u * v, cu * cv);
        return p;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    /// Terms in descending word order as "coef*word" joined by " + ".
    std::string text() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (it != terms_.rbegin()) out += " + ";
            std::string c = format_scalar(it->second);
            const bool compound = sgn(it->second.re()) != 0 && sgn(it->second.im()) != 0;
            out += compound ? "(" + c + ")" : c;
            out += '*';
            out += it->first.text();
        }
        return out;
    }

private:
    void check(const NcPoly& o) const {
        if (n_ != o.n_) throw GeneratorMismatch();
    }

    std::size_t n_ = 0;
    Terms terms_;
};

inline NcPoly multiply(const NcPoly& p, const NcPoly& q) { return p * q; }

inline NcPoly power(const NcPoly& p, unsigned m) {
    NcPoly r = NcPoly::one(p.generators());
    for (unsigned k = 0; k < m; ++k) r = r * p;
    return r;
}

/// Image of p under the algebra map sending g_j to sum_i m(i,j) g_i.
inline NcPoly substitute(const NcPoly& p, const Matrix& m) {
    const std::size_t n = p.generators();
    if (m.rows() != n || m.cols() != n) throw SizeMismatch("substitution matrix does not match generator count");
    std::vector<NcPoly> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        NcPoly img(n);
        for (std::size_t i = 0; i < n; ++i) img.add_term(Word::generator(i + 1), m(i, j));
        images.push_back(std::move(img));
    }
    NcPoly out(n);
    for (const auto& [w, c] : p.terms()) {
        NcPoly term = NcPoly(n, Word{}, c);
        for (std::size_t k = 0; k < w.degree(); ++k) term = term * images[w[k] - 1];
        out += term;
    }
    return out;
}

/// Incrementally maintained linear span of polynomials, kept in echelon form keyed by leading word.
/// reduce() returns the residue of a polynomial modulo the span together with the coefficients
/// expressing the removed part in terms of the inserted polynomials.
class PolySpan {
public:
    explicit PolySpan(std::size_t generators) : n_(generators) {}

    /// Inserts p; returns false when p already lies in the span.
    bool insert(const NcPoly& p) {
        Vector combo(inputs_ + 1);
        combo[inputs_] = 1;
        ++inputs_;
        for (auto& row : rows_) row.combo.resize(inputs_);
        auto [residue, used] = reduce_internal(p);
        for (std::size_t k = 0; k < used.size(); ++k) combo[k] -= used[k];
        if (residue.is_zero()) return false;
        Scalar inv = residue.leading_coefficient().inverse();
        residue *= inv;
        for (auto& c : combo) c *= inv;
        index_.emplace(residue.leading_word(), rows_.size());
        rows_.push_back({std::move(residue), std::move(combo)});
        return true;
    }

    struct Reduction {
        NcPoly residue;
        Vector coefficients;  // p = sum_k coefficients[k] * input_k + residue
    };

    Reduction reduce(const NcPoly& p) const {
        auto [residue, used] = reduce_internal(p);
        return {std::move(residue), std::move(used)};
    }

    bool contains(const NcPoly& p) const { return reduce_internal(p).first.is_zero(); }
    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t inputs() const noexcept { return inputs_; }

private:
    struct Row {
        NcPoly poly;   // monic
        Vector combo;  // poly = sum combo[k] * input_k
    };

    std::pair<NcPoly, Vector> reduce_internal(const NcPoly& p) const {
        if (p.generators() != n_) throw GeneratorMismatch();
        NcPoly::Terms work = p.terms();
        NcPoly residue(n_);
        Vector used(inputs_);
        while (!work.empty()) {
            auto top = std::prev(work.end());
            auto hit = index_.find(top->first);
            if (hit == index_.end()) {
                residue.add_term(top->first, top->second);
                work.erase(top);
                continue;
            }
            Scalar f = top->second;
            const Row& row = rows_[hit->second];
            for (const auto& [w, c] : row.poly.terms()) {
                auto [it, inserted] = work.try_emplace(w, -f * c);
                if (!inserted) {
                    it->second -= f * c;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
            for (std::size_t k = 0; k < row.combo.size(); ++k)
                if (!row.combo[k].is_zero()) used[k] += f * row.combo[k];
        }
        return {std::move(residue), std::move(used)};
    }

    std::size_t n_;
    std::size_t inputs_ = 0;
    std::vector<Row> rows_;
    std::map<Word, std::size_t> index_;
};

} // namespace nak
