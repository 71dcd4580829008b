#pragma once

// Semisimple representations of the Weil groups of C and R, stored as
// multisets of irreducible constituents.
//
// Index conventions follow the usual subscript notation:
//   CharC{n, t}  is chi_{-n,t}(z)   = z^{-n} ||z||^t        (n any integer)
//   CharR{e, t}  is lambda_{e,t}(r) = r^{-e} |r|^t          (e in {0,1})
//   Disc2R{n, t} is phi_{-n,t}      = Ind chi_{-n,t}          (n >= 0 once normalized)

#include "archlc/scalars.hpp"

#include <string>
#include <variant>
#include <vector>

namespace archlc {

enum class Field { Real, Complex };

std::string to_string(Field f);

struct CharC {
    long n = 0;
    GaussQ t;
    friend bool operator==(const CharC&, const CharC&) = default;
};

struct CharR {
    int eps = 0;
    GaussQ t;
    friend bool operator==(const CharR&, const CharR&) = default;
};

struct Disc2R {
    long n = 0;
    GaussQ t;
    friend bool operator==(const Disc2R&, const Disc2R&) = default;
};

using Constituent = std::variant<CharC, CharR, Disc2R>;

/// Builds phi from the subscript pair as written, phi_{a,t}; a may be positive.
inline Disc2R phi_subscript(long a, GaussQ t) { return Disc2R{-a, std::move(t)}; }
/// chi_{a,t} from the written subscript pair.
inline CharC chi_subscript(long a, GaussQ t) { return CharC{-a, std::move(t)}; }

int dimension(const Constituent& c);
Field field_of(const Constituent& c);
/// The parameter t (or u for phi) that governs the ~-relation.
const GaussQ& exponent(const Constituent& c);
/// Sort key (type, n, Re t, Im t, eps).
bool constituent_less(const Constituent& a, const Constituent& b);
/// Grammar form: "chi(-2, 1/2)", "lambda(1, 3)", "phi(-2, 1)".
std::string to_string(const Constituent& c);

/// A normalized parameter. Equality is multiset equality; constituents are
/// kept sorted by the constituent sort key.
class Parameter {
public:
    /// Empty complex parameter.
    Parameter() = default;

    /// Normalizes a raw constituent list. Over R this rewrites
    /// phi_{-n,t} with n < 0 as phi_{n,t-n} and merges every coexisting pair
    /// lambda_{0,t}, lambda_{1,t+1} into phi_{0,t}. Throws FieldMismatch when a
    /// constituent does not belong to the field.
    static Parameter normalize(Field field, std::vector<Constituent> raw);

    Field field() const { return field_; }
    const std::vector<Constituent>& constituents() const { return parts_; }
    int dimension() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Parameter&, const Parameter&) = default;
    friend bool operator<(const Parameter& a, const Parameter& b);

private:
    Parameter(Field field, std::vector<Constituent> parts) : field_(field), parts_(std::move(parts)) {}

    Field field_ = Field::Complex;
    std::vector<Constituent> parts_;
};

/// "C: chi(-2, 1/2) + chi(0, 3/2)"; the empty parameter prints as "C:".
std::string to_string(const Parameter& p);

/// Contragredient, componentwise.
Parameter dual(const Parameter& p);

/// Twist by a one-dimensional character of the same field (CharC over C, CharR over R).
Parameter twist_gl1(const Parameter& p, const Constituent& chi);

/// phi_{-n,t} (x) phi_{-m,s} = phi_{-(n+m),t+s} + phi_{-(n-m),t+s-m}.
Parameter tensor_2x2(const Disc2R& a, const Disc2R& b);

/// Parameter of p (x) p^vee.
Parameter rankin_selberg(const Parameter& p);

bool sim_related(const Constituent& a, const Constituent& b);
/// Maximal ~-blocks; sorted by the class representative of their exponents.
std::vector<Parameter> partition_sim(const Parameter& p);

/// Readable description of the Langlands-quotient data, constituents in
/// decreasing order of Re(t).
std::string describe_llc(const Parameter& p);

}  // namespace archlc
