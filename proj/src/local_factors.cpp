#include "archlc/local_factors.hpp"

namespace archlc {

namespace {

const Rational half(1, 2);

// t + s
LinForm shifted(const GaussQ& t)
{
    return LinForm(1, t);
}

LinForm constant(const Rational& c)
{
    return LinForm::constant(GaussQ(c));
}

long abs_long(long n)
{
    return n < 0 ? -n : n;
}

}  // namespace

GammaExpr l_factor(const Constituent& c)
{
    if (auto* x = std::get_if<CharC>(&c)) {
        // 2 (2pi)^{-a} Gamma(a),  a = t - n/2 + |n|/2
        LinForm a = shifted(x->t) + constant(frac(abs_long(x->n) - x->n, 2));
        return GammaExpr::power_of_2(constant(1)) * GammaExpr::power_of_2pi(-a) * GammaExpr::gamma(a);
    }
    if (auto* x = std::get_if<CharR>(&c)) {
        LinForm u = shifted(x->t) * half;
        return GammaExpr::power_of_pi(-u) * GammaExpr::gamma(u);
    }
    const auto& x = std::get<Disc2R>(c);
    LinForm a = shifted(x.t);
    return GammaExpr::power_of_2(constant(1)) * GammaExpr::power_of_2pi(-a) * GammaExpr::gamma(a);
}

GammaExpr epsilon_factor(const Constituent& c)
{
    if (auto* x = std::get_if<CharC>(&c))
        return GammaExpr::power_of_i(static_cast<int>(abs_long(x->n) % 4));
    if (auto* x = std::get_if<CharR>(&c))
        return GammaExpr::power_of_i(3 * x->eps);  // (-i)^eps
    const auto& x = std::get<Disc2R>(c);
    return GammaExpr::power_of_i(static_cast<int>((x.n + 3) % 4));  // -i^{N+1}
}

GammaExpr gamma_factor(const Constituent& c)
{
    if (auto* x = std::get_if<CharC>(&c)) {
        long n = x->n;
        LinForm t = shifted(x->t);
        LinForm a = t + constant(frac(abs_long(n) - n, 2));
        LinForm b = -t + constant(frac(2 + n + abs_long(n), 2));
        LinForm e = t * Rational(2) + constant(Rational(-1 - n));
        return epsilon_factor(c) * GammaExpr::power_of_2pi(e) * GammaExpr::gamma(b) / GammaExpr::gamma(a);
    }
    if (auto* x = std::get_if<CharR>(&c)) {
        LinForm t = shifted(x->t);
        LinForm e = t + constant(Rational(-x->eps) - half);
        LinForm b = (-t + constant(1 + 2 * x->eps)) * half;
        return epsilon_factor(c) * GammaExpr::power_of_pi(e) * GammaExpr::gamma(b) / GammaExpr::gamma(t * half);
    }
    const auto& x = std::get<Disc2R>(c);
    LinForm t = shifted(x.t);
    LinForm e = t * Rational(2) - constant(Rational(x.n + 1));
    LinForm b = -t + constant(Rational(1 + x.n));
    return epsilon_factor(c) * GammaExpr::power_of_2pi(e) * GammaExpr::gamma(b) / GammaExpr::gamma(t);
}

GammaExpr l_factor(const Parameter& p)
{
    GammaExpr out;
    for (const auto& c : p.constituents())
        out *= l_factor(c);
    return out;
}

GammaExpr epsilon_factor(const Parameter& p)
{
    GammaExpr out;
    for (const auto& c : p.constituents())
        out *= epsilon_factor(c);
    return out;
}

GammaExpr gamma_factor(const Parameter& p)
{
    GammaExpr out;
    for (const auto& c : p.constituents())
        out *= gamma_factor(c);
    return out;
}

GammaExpr gamma_factor_via_fe(const Parameter& p)
{
    GammaExpr reflected = substitute(l_factor(dual(p)), -1, GaussQ(1));
    return epsilon_factor(p) * reflected / l_factor(p);
}

GammaExpr gamma_twisted(const Parameter& p, const Constituent& chi)
{
    return gamma_factor(twist_gl1(p, chi));
}

}  // namespace archlc
