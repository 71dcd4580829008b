#include "support.hpp"

#include "archlc/divisor.hpp"

#include <doctest.h>

#include <algorithm>

using namespace testing;

namespace {

// Multiplicity at x counted straight from the progressions.
long naive_order(const std::vector<Progression>& items, const GaussQ& x)
{
    long total = 0;
    for (const auto& p : items)
        if (p.contains(x))
            total += p.mult;
    return total;
}

std::vector<Progression> random_items(Random& rnd, int count)
{
    const std::vector<Rational> steps = {frac(1, 2), Rational(1), Rational(2), frac(3, 2), frac(1, 3), frac(2, 3)};
    std::vector<Progression> out;
    for (int k = 0; k < count; ++k) {
        Rational h = steps[rnd.integer(0, static_cast<long>(steps.size()) - 1)];
        if (rnd.integer(0, 1))
            h = -h;
        long m = rnd.integer(1, 2) * (rnd.integer(0, 1) ? 1 : -1);
        GaussQ start(frac(rnd.integer(-36, 24), 6), rnd.integer(0, 3) == 0 ? Rational(1) : Rational(0));
        out.push_back({start, h, m});
        // cut the progression off again after a few points
        if (rnd.integer(0, 2) == 0)
            out.push_back({start - GaussQ(Rational(h * rnd.integer(1, 4))), h, -m});
    }
    return out;
}

// Rewrites that keep the multiplicity function: step splitting and swapping
// one complete coset for another representative of it.
std::vector<Progression> rewrite(Random& rnd, std::vector<Progression> items)
{
    std::vector<Progression> out;
    for (const auto& p : items) {
        switch (rnd.integer(0, 2)) {
        case 0:
            out.push_back({p.start, p.step * 2, p.mult});
            out.push_back({p.start - GaussQ(p.step), p.step * 2, p.mult});
            break;
        case 1: {
            Rational h = abs(p.step);
            GaussQ y = p.start + GaussQ(Rational(h * rnd.integer(-3, 3)));
            out.push_back(p);
            out.push_back({p.start, h, p.mult});
            out.push_back({p.start + GaussQ(h), -h, p.mult});
            out.push_back({y, h, -p.mult});
            out.push_back({y + GaussQ(h), -h, -p.mult});
            break;
        }
        default:
            out.push_back(p);
        }
    }
    std::shuffle(out.begin(), out.end(), rnd.engine());
    return out;
}

void check_against_naive(const Divisor& d, const std::vector<Progression>& items)
{
    // every point k/6 of the window on both lines used by random_items
    for (long k = -20 * 6; k <= 5 * 6; ++k)
        for (long im : {0L, 1L}) {
            GaussQ x(frac(k, 6), im);
            REQUIRE(d.order_at(x) == naive_order(items, x));
        }
}

}  // namespace

TEST_CASE("single progressions")
{
    std::vector<Progression> down = {{GaussQ(0), 1, 1}};
    auto d = Divisor::from_progressions(down);
    CHECK(d.order_at(GaussQ(0)) == 1);
    CHECK(d.order_at(GaussQ(-7)) == 1);
    CHECK(d.order_at(GaussQ(1)) == 0);
    CHECK(d.order_at(GaussQ(frac(-1, 2))) == 0);
    CHECK(d.progressions() == down);

    std::vector<Progression> up = {{GaussQ(1), -1, -2}};
    auto u = Divisor::from_progressions(up);
    CHECK(u.order_at(GaussQ(5)) == -2);
    CHECK(u.order_at(GaussQ(0)) == 0);
    CHECK(u.progressions() == up);
    CHECK(Divisor().empty());
}

TEST_CASE("refinement gives identical divisors")
{
    std::vector<Progression> coarse = {{GaussQ(0), 1, 1}};
    std::vector<Progression> fine = {{GaussQ(0), 2, 1}, {GaussQ(-1), 2, 1}};
    CHECK(Divisor::from_progressions(coarse) == Divisor::from_progressions(fine));
}

TEST_CASE("cancellation leaves nothing")
{
    std::vector<Progression> items = {{GaussQ(3), 1, 2}, {GaussQ(3), 2, -2}, {GaussQ(2), 2, -2}};
    CHECK(Divisor::from_progressions(items).empty());
    std::vector<Progression> zero = {{GaussQ(3), 1, 0}};
    CHECK(Divisor::from_progressions(zero).empty());
}

TEST_CASE("order_at agrees with pointwise counting")
{
    Random rnd(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto items = random_items(rnd, static_cast<int>(rnd.integer(1, 6)));
        auto d = Divisor::from_progressions(items);
        check_against_naive(d, items);
        CHECK(Divisor::from_progressions(d.progressions()) == d);
    }
}

TEST_CASE("canonical form is a congruence")
{
    Random rnd(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto items = random_items(rnd, static_cast<int>(rnd.integer(1, 5)));
        auto other = rewrite(rnd, items);
        auto a = Divisor::from_progressions(items);
        auto b = Divisor::from_progressions(other);
        check_against_naive(b, items);
        CHECK(a == b);
        CHECK(a.progressions() == b.progressions());
    }
}

TEST_CASE("addition and negation")
{
    Random rnd(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_items(rnd, 3);
        auto y = random_items(rnd, 3);
        auto both = x;
        both.insert(both.end(), y.begin(), y.end());
        auto dx = Divisor::from_progressions(x);
        auto dy = Divisor::from_progressions(y);
        CHECK(dx + dy == Divisor::from_progressions(both));
        CHECK((dx - dx).empty());
        CHECK(-(-dx) == dx);
        CHECK((dx + dy) - dy == dx);
    }
}

TEST_CASE("zero step is rejected")
{
    std::vector<Progression> bad = {{GaussQ(0), 0, 1}};
    CHECK_THROWS_AS(Divisor::from_progressions(bad), std::invalid_argument);
}
