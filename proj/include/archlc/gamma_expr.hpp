#pragma once

// Symbolic values  i^k * 2^{a(s)} * pi^{b(s)} * prod Gamma(l_j(s))^{+-1}
// with a, b, l_j linear forms in s. Every local factor lives here.

#include "archlc/divisor.hpp"
#include "archlc/scalars.hpp"

#include <complex>
#include <vector>

namespace archlc {

/// Numeric tolerances used throughout the engine.
namespace tolerance {
inline constexpr double eval_relative = 1e-10;   // accuracy target of evaluate()
inline constexpr double equality_ratio = 1e-8;   // equivalent(): |a/b - 1|
inline constexpr double singular_distance = 1e-8;  // evaluate() refuses closer points
inline constexpr double sample_clearance = 1e-3;   // equivalent() sample points keep this far from poles
}  // namespace tolerance

class GammaExpr {
public:
    /// The constant 1.
    GammaExpr() = default;

    static GammaExpr gamma(LinForm arg);
    static GammaExpr power_of_i(int k);
    static GammaExpr power_of_2(LinForm e);
    static GammaExpr power_of_pi(LinForm e);
    /// (2 pi)^e.
    static GammaExpr power_of_2pi(const LinForm& e);
    static GammaExpr minus_one() { return power_of_i(2); }

    /// Assembles from raw parts; identical numerator/denominator arguments cancel.
    static GammaExpr from_parts(int root4, LinForm exp2, LinForm exp_pi, std::vector<LinForm> num,
                                std::vector<LinForm> den);

    int root4() const { return root4_; }
    const LinForm& exp2() const { return exp2_; }
    const LinForm& exp_pi() const { return exp_pi_; }
    /// Sorted Gamma arguments.
    const std::vector<LinForm>& num() const { return num_; }
    const std::vector<LinForm>& den() const { return den_; }

    bool is_unit() const;
    /// No s-dependence at all (constant prefactor, no Gamma functions).
    bool is_constant() const;

    GammaExpr& operator*=(const GammaExpr& o);
    GammaExpr& operator/=(const GammaExpr& o);
    friend GammaExpr operator*(GammaExpr a, const GammaExpr& b) { return a *= b; }
    friend GammaExpr operator/(GammaExpr a, const GammaExpr& b) { return a /= b; }
    GammaExpr inverse() const;

    /// Structural identity (not equality of functions; see equivalent()).
    friend bool operator==(const GammaExpr&, const GammaExpr&) = default;

private:
    void cancel();

    int root4_ = 0;
    LinForm exp2_;
    LinForm exp_pi_;
    std::vector<LinForm> num_;
    std::vector<LinForm> den_;
};

/// Human-readable form, e.g. "i^3 * 2^(2*s - 4) * pi^(2*s - 4) * Gamma(-s + 4) / Gamma(s)".
std::string to_string(const GammaExpr& x);

/// Replaces s by a*s + b everywhere. Throws std::invalid_argument for a = 0.
GammaExpr substitute(const GammaExpr& x, const Rational& a, const GaussQ& b);

/// Exact pole/zero divisor: numerator Gammas contribute poles, denominator
/// Gammas zeros; prefactors contribute nothing.
Divisor divisor(const GammaExpr& x);
long order_at(const GammaExpr& x, const GaussQ& s0);
bool holomorphic_at(const GammaExpr& x, const GaussQ& s0);

/// Rewrites Gamma(u) Gamma(u + 1/2) -> 2^{1-2u} pi^{1/2} Gamma(2u) in the
/// numerator and the denominator until no pair remains.
GammaExpr apply_duplication(const GammaExpr& x);

/// Complex log-gamma (principal branch only up to multiples of 2 pi i).
std::complex<double> log_gamma(std::complex<double> z);

/// log of the value at s, summed termwise; defined modulo 2 pi i.
std::complex<double> log_evaluate(const GammaExpr& x, std::complex<double> s);
/// Throws SingularEvaluation within tolerance::singular_distance of a
/// pole or zero of any Gamma argument.
std::complex<double> evaluate(const GammaExpr& x, std::complex<double> s);

/// Distance in the s-plane from s to the nearest singular point of any Gamma
/// argument of x (infinity when there are none).
double singular_clearance(const GammaExpr& x, std::complex<double> s);

/// Equality as meromorphic functions: identical divisors and value ratio
/// within tolerance::equality_ratio of 1 at three fixed sample points.
bool equivalent(const GammaExpr& a, const GammaExpr& b);

/// The fixed sample points of equivalent(), after collision shifts for (a, b).
std::vector<std::complex<double>> sample_points(const GammaExpr& a, const GammaExpr& b);

}  // namespace archlc
