#pragma once

// Genericity of a parameter, decided two ways: the pairwise combinatorial
// inequalities, and holomorphy of L(s, p (x) p^vee) at s = 1.

#include "archlc/parameters.hpp"

#include <optional>
#include <string>
#include <vector>

namespace archlc {

struct GenericityWitness {
    /// One of "C3", "Ra", "Rb", "Rc", "L-pole".
    std::string condition;
    /// Positions in Parameter::constituents() (empty for L-pole).
    std::vector<std::size_t> indices;
    /// The failing instance, e.g. "0 <= 1 <= 0".
    std::string inequality;
    /// Pole order of the Rankin-Selberg L-factor at s = 1 (L-pole only).
    long pole_order = 0;
};

struct GenericityVerdict {
    bool generic = true;
    std::optional<GenericityWitness> witness;  // present iff !generic
};

GenericityVerdict is_generic_comb(const Parameter& p);
GenericityVerdict is_generic_L(const Parameter& p);

/// True iff both routes give the same answer.
bool genericity_cross_check(const Parameter& p);

/// Verdict of the combinatorial route after confirming the L route agrees;
/// throws CrossCheckFailure with both witnesses otherwise.
GenericityVerdict certified_genericity(const Parameter& p);

std::string to_string(const GenericityVerdict& v);

}  // namespace archlc
