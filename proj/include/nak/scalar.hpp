#pragma once

// Exact arithmetic in the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "nak/error.hpp"

namespace nak {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT: implicit on purpose, 2*x etc.
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rational d = norm();
        return {Rational(re_ / d), Rational(-im_ / d)};
    }

    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussianRational invert(const GaussianRational& x) { return x.inverse(); }

inline GaussianRational pow(GaussianRational base, unsigned exponent) {
    GaussianRational result(1);
    while (exponent) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

namespace detail {

inline std::string format_rational(const Rational& r) { return r.get_str(); }

// Cursor over a scalar literal; all offsets are relative to the literal start.
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    GaussianRational parse() {
        if (text_.empty()) throw ParseError(0, "empty scalar");
        GaussianRational value = part(true);
        if (pos_ < text_.size()) {
            if (!is_sign(text_[pos_])) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
            value += part(false);
        }
        if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
        return value;
    }

private:
    static bool is_sign(char c) { return c == '+' || c == '-'; }
    bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    // part := sign? upart  (sign mandatory for the second part)
    GaussianRational part(bool sign_optional) {
        bool negative = false;
        if (pos_ < text_.size() && is_sign(text_[pos_])) {
            negative = text_[pos_] == '-';
            ++pos_;
        } else if (!sign_optional) {
            throw ParseError(pos_, "expected sign");
        }
        GaussianRational v = upart();
        return negative ? -v : v;
    }

    // upart := rat "i"? | "i"
    GaussianRational upart() {
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return GaussianRational::i();
        }
        if (!at_digit()) throw ParseError(pos_, pos_ < text_.size() ? "expected digit or 'i'" : "unexpected end of scalar");
        Rational r = rat();
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return {Rational(0), r};
        }
        return {r, Rational(0)};
    }

    Rational rat() {
        mpz_class num(digits());
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t at = pos_;
            if (!at_digit()) throw ParseError(pos_, "expected denominator digits");
            mpz_class den(digits());
            if (den == 0) throw ZeroDenominator(at);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `scalar := part | part sign upart` (no whitespace). Throws ParseError with the byte offset.
inline GaussianRational parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

/// Canonical form: zero parts omitted, unit denominators omitted, imaginary coefficient +-1 as "i"/"-i".
inline std::string format_scalar(const GaussianRational& x) {
    const bool has_re = sgn(x.re()) != 0;
    const bool has_im = sgn(x.im()) != 0;
    if (!has_re && !has_im) return "0";
    std::string imag;
    if (has_im) {
        if (x.im() == 1)
            imag = "i";
        else if (x.im() == -1)
            imag = "-i";
        else
            imag = detail::format_rational(x.im()) + "i";
    }
    if (!has_re) return imag;
    std::string out = detail::format_rational(x.re());
    if (has_im) {
        if (imag.front() != '-') out += '+';
        out += imag;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << format_scalar(x); }

} // namespace nak
