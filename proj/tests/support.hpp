#pragma once

#include "archlc/parameters.hpp"
#include "archlc/scalars.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace archlc;

inline GaussQ q(long num, long den = 1)
{
    return GaussQ(frac(num, den));
}

inline GaussQ gq(long re_num, long re_den, long im_num, long im_den)
{
    return GaussQ(frac(re_num, re_den), frac(im_num, im_den));
}

inline Parameter complex_param(std::vector<Constituent> parts)
{
    return Parameter::normalize(Field::Complex, std::move(parts));
}

inline Parameter real_param(std::vector<Constituent> parts)
{
    return Parameter::normalize(Field::Real, std::move(parts));
}

// chi_{a,t}, lambda_{e,t}, phi_{a,t} with subscripts as written
inline Constituent chi(long a, GaussQ t)
{
    return chi_subscript(a, std::move(t));
}
inline Constituent lam(int e, GaussQ t)
{
    return CharR{e, std::move(t)};
}
inline Constituent phi(long a, GaussQ t)
{
    return phi_subscript(a, std::move(t));
}

class Random {
public:
    explicit Random(unsigned seed = 20261014) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long range = 12, long max_den = 6)
    {
        return frac(integer(-range * max_den, range * max_den), integer(1, max_den));
    }

    GaussQ gaussq(long range = 6, long max_den = 4)
    {
        return GaussQ(rational(range, max_den), integer(0, 2) == 0 ? Rational(0) : rational(2, max_den));
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

}  // namespace testing
