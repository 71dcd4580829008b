#pragma once

// Pole/zero divisors of Gamma-products.
//
// A divisor is a finite sum of half-infinite arithmetic progressions with
// integer multiplicities (poles positive, zeros negative). Internally each
// horizontal line Im(s) = const is stored as a set of cosets x0 + h*Z of a
// common step h; a coset records its multiplicity far to the left and the
// finitely many positions where the multiplicity jumps. The canonical step of
// a line is the least period of its limiting multiplicities (1 when those all
// vanish), which makes structural equality coincide with equality of the
// multiplicity functions.

#include "archlc/scalars.hpp"

#include <map>
#include <span>
#include <vector>

namespace archlc {

/// {start - k*step : k >= 0} with multiplicity mult. A positive step runs
/// towards -infinity (poles of Gamma(s + b)); a negative step runs towards
/// +infinity (poles of Gamma(b - s)).
struct Progression {
    GaussQ start;
    Rational step;
    long mult = 0;

    bool contains(const GaussQ& s0) const;
    friend bool operator==(const Progression&, const Progression&) = default;
};

class Divisor {
public:
    Divisor() = default;
    static Divisor from_progressions(std::span<const Progression> items);

    /// Canonical progression listing (deterministic order).
    std::vector<Progression> progressions() const;

    /// Pole order at s0; negative values are zero orders.
    long order_at(const GaussQ& s0) const;

    /// Every point where the multiplicity differs from its left neighbour in the
    /// same coset; these bound the region where anything happens on each line.
    std::vector<GaussQ> breakpoints() const;

    bool empty() const { return lines_.empty(); }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    Divisor operator-() const;

    friend bool operator==(const Divisor& a, const Divisor& b);

private:
    struct Coset {
        long low = 0;                     // multiplicity towards -infinity
        std::map<Rational, long> jumps;   // f(x) - f(x - step), nonzero only
        long high() const;
        bool operator==(const Coset& o) const = default;
    };
    struct Line {
        Rational step = 1;
        std::map<Rational, Coset> cosets;  // keyed by residue in [0, step)
        long value_at(const Rational& x) const;
        bool operator==(const Line& o) const = default;
    };

    static Line canonical(const Line& raw);

    std::map<Rational, Line> lines_;  // keyed by imaginary part
};

}  // namespace archlc
