#pragma once

// Archimedean L-, epsilon- and gamma-factors as functions of s, for the
// standard additive character. Twisted factors are obtained by twisting the
// parameter first and then applying the untwisted formulas.

#include "archlc/gamma_expr.hpp"
#include "archlc/parameters.hpp"

namespace archlc {

GammaExpr l_factor(const Constituent& c);
GammaExpr epsilon_factor(const Constituent& c);
GammaExpr gamma_factor(const Constituent& c);

/// L(s, p): product over constituents with t replaced by t + s.
GammaExpr l_factor(const Parameter& p);
/// Constant: no Gamma factors, no s in the exponents.
GammaExpr epsilon_factor(const Parameter& p);
/// gamma(s, p) from the closed per-constituent formulas.
GammaExpr gamma_factor(const Parameter& p);
/// eps(p) * L(1 - s, p^vee) / L(s, p).
GammaExpr gamma_factor_via_fe(const Parameter& p);

/// gamma(s, p (x) chi). Throws FieldMismatch when chi belongs to the other field.
GammaExpr gamma_twisted(const Parameter& p, const Constituent& chi);

}  // namespace archlc
