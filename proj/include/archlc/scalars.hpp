#pragma once

// Exact arithmetic substrate: arbitrary-precision rationals, Gaussian
// rationals and linear forms in the complex variable s.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace archlc {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den != 0.
Rational frac(long num, long den);

/// Canonical text form of a rational: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
/// Always "p/q", denominators of 1 included. Used by the JSON layer.
std::string to_fraction_string(const Rational& q);
/// Parses "p" or "p/q" (sign on the numerator only). Throws ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// x mod m in [0, m) for m > 0.
Rational mod(const Rational& x, const Rational& m);
/// Lowest common multiple of two positive rationals.
Rational lcm(const Rational& a, const Rational& b);
long to_long(const Integer& z);

/// An exact complex number a + bi with a, b rational.
class GaussQ {
public:
    GaussQ() = default;
    GaussQ(Rational re, Rational im = 0);
    GaussQ(long re) : GaussQ(Rational(re)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_real() const { return im_ == 0; }
    /// True for a rational integer (zero imaginary part).
    bool is_integer() const;

    GaussQ operator-() const { return {-re_, -im_}; }
    GaussQ& operator+=(const GaussQ& o);
    GaussQ& operator-=(const GaussQ& o);
    GaussQ& operator*=(const GaussQ& o);

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }

    friend bool operator==(const GaussQ& a, const GaussQ& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); a total order used for sorting only.
    friend std::strong_ordering operator<=>(const GaussQ& a, const GaussQ& b);

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
    Rational re_;
    Rational im_;
};

/// "a", "a+bi" or "a-bi" with rational components; matches the CLI grammar.
std::string to_string(const GaussQ& z);
GaussQ parse_gaussq(std::string_view text);

enum class Order { Less, Equal, Greater, Incomparable };

/// The partial order w ⪯ z iff z - w is a non-negative integer.
Order preceq_cmp(const GaussQ& w, const GaussQ& z);

/// z - w when it is a rational integer.
std::optional<Integer> int_diff(const GaussQ& w, const GaussQ& z);

/// slope * s + offset.
class LinForm {
public:
    LinForm() = default;
    LinForm(Rational slope, GaussQ offset) : slope_(std::move(slope)), offset_(std::move(offset)) {}
    static LinForm constant(GaussQ c) { return {0, std::move(c)}; }
    static LinForm s() { return {1, GaussQ{}}; }

    const Rational& slope() const { return slope_; }
    const GaussQ& offset() const { return offset_; }
    bool is_constant() const { return slope_ == 0; }
    bool is_zero() const { return slope_ == 0 && offset_ == GaussQ{}; }

    GaussQ eval(const GaussQ& s0) const { return GaussQ(slope_) * s0 + offset_; }
    std::complex<double> eval(std::complex<double> s0) const
    {
        return slope_.get_d() * s0 + offset_.to_complex();
    }
    /// f(a*s + b).
    LinForm compose(const Rational& a, const GaussQ& b) const
    {
        return {slope_ * a, GaussQ(slope_) * b + offset_};
    }

    LinForm operator-() const { return {-slope_, -offset_}; }
    LinForm& operator+=(const LinForm& o);
    LinForm& operator-=(const LinForm& o);
    LinForm& operator*=(const Rational& c);
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(LinForm a, const Rational& c) { return a *= c; }
    friend LinForm operator*(const Rational& c, LinForm a) { return a *= c; }

    friend bool operator==(const LinForm& a, const LinForm& b)
    {
        return a.slope_ == b.slope_ && a.offset_ == b.offset_;
    }
    friend std::strong_ordering operator<=>(const LinForm& a, const LinForm& b);

private:
    Rational slope_;
    GaussQ offset_;
};

/// Display form such as "1/2*s + 3/2" or "-s + 1+2i".
std::string to_string(const LinForm& f);
inline GaussQ linform_eval(const LinForm& f, const GaussQ& s0) { return f.eval(s0); }

}  // namespace archlc
