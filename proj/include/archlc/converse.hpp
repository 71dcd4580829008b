#pragma once

// Constructive local converse theorem: rebuild a generic parameter from the
// gamma factors of its twists, and find a twist separating two parameters.

#include "archlc/gamma_expr.hpp"
#include "archlc/genericity.hpp"
#include "archlc/parameters.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace archlc {

struct SearchBounds {
    long maxN = 3;
    std::vector<GaussQ> tGrid = {GaussQ(0), GaussQ(frac(1, 2)), GaussQ(1), GaussQ(frac(3, 2)), GaussQ(2)};
    long maxTwistOffset = 8;
};

/// Twisted gamma data: character -> gamma(s, pi x chi). Queries must be pure.
struct GammaOracle {
    Field field = Field::Complex;
    std::function<GammaExpr(const Constituent&)> query;
    /// When nonempty, the only characters query() can answer (transcripts).
    std::vector<Constituent> available;
};

/// The oracle of a known parameter.
GammaOracle oracle_for(const Parameter& p);

/// Twists that reconstruct() asks for under the given bounds.
std::vector<Constituent> reconstruction_queries(Field field, const SearchBounds& bounds);

/// Rebuilds the generic parameter behind the oracle. Every queried twist is
/// re-verified; throws ReconstructionFailure naming the first contradiction.
Parameter reconstruct(const GammaOracle& oracle, const SearchBounds& bounds);

/// Candidate twists in search order.
std::vector<Constituent> twist_candidates(Field field, const SearchBounds& bounds);

/// A character whose twisted gamma factors differ, absent when p == q.
/// Throws SearchExhausted if p != q and no candidate separates them.
std::optional<Constituent> find_distinguishing_twist(const Parameter& p, const Parameter& q,
                                                     const SearchBounds& bounds);

/// All normalized parameters of dimension 1..nMax built from the bounds,
/// sorted and without repetition.
std::vector<Parameter> enumerate_parameters(Field field, int nMax, const SearchBounds& bounds);

/// The generic members of enumerate_parameters(), each certified by both
/// genericity routes (CrossCheckFailure on disagreement).
std::vector<Parameter> enumerate_generic(Field field, int nMax, const SearchBounds& bounds);

struct FamilyFailure {
    std::string check;  // "cross-check", "functional-equation", "round-trip", "separation"
    std::string parameter;
    std::string other;  // second parameter (separation) or empty
    std::string detail;
};

struct FamilyReport {
    Field field = Field::Complex;
    int nMax = 0;
    std::size_t members = 0;
    std::size_t generic = 0;
    std::size_t cross_check_pass = 0;
    std::size_t functional_equation_pass = 0;
    std::size_t round_trip_pass = 0;
    std::size_t pairs = 0;
    std::size_t separation_pass = 0;
    std::vector<FamilyFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Runs every check over the family; threads = 0 picks the hardware count.
FamilyReport verify_family(Field field, int nMax, const SearchBounds& bounds, unsigned threads = 0);

std::string to_string(const FamilyReport& r);

}  // namespace archlc
