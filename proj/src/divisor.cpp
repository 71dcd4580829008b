#include "archlc/divisor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace archlc {

bool Progression::contains(const GaussQ& s0) const
{
    if (s0.im() != start.im())
        return false;
    Rational k = (start.re() - s0.re()) / step;
    return is_integer(k) && k >= 0;
}

long Divisor::Coset::high() const
{
    long h = low;
    for (const auto& [pos, c] : jumps)
        h += c;
    return h;
}

long Divisor::Line::value_at(const Rational& x) const
{
    auto it = cosets.find(mod(x, step));
    if (it == cosets.end())
        return 0;
    long v = it->second.low;
    for (auto j = it->second.jumps.begin(); j != it->second.jumps.end() && j->first <= x; ++j)
        v += j->second;
    return v;
}

Divisor::Line Divisor::canonical(const Line& raw)
{
    Line in;
    in.step = raw.step;
    Rational lo, hi;
    bool any_jump = false;
    for (const auto& [r, c] : raw.cosets) {
        Coset cleaned;
        cleaned.low = c.low;
        for (const auto& [pos, v] : c.jumps) {
            if (v == 0)
                continue;
            cleaned.jumps.emplace(pos, v);
            if (!any_jump || pos < lo)
                lo = pos;
            if (!any_jump || pos > hi)
                hi = pos;
            any_jump = true;
        }
        if (cleaned.low != 0 || !cleaned.jumps.empty())
            in.cosets.emplace(r, std::move(cleaned));
    }
    if (in.cosets.empty())
        return in;

    const Rational& step = in.step;
    std::vector<Rational> limit_residues;
    for (const auto& [r, c] : in.cosets)
        if (c.low != 0 || c.high() != 0)
            limit_residues.push_back(r);

    auto limits = [&](const Rational& r) -> std::pair<long, long> {
        auto it = in.cosets.find(r);
        if (it == in.cosets.end())
            return {0, 0};
        return {it->second.low, it->second.high()};
    };

    Rational period = 1;
    if (!limit_residues.empty()) {
        long best = 1;
        for (long m = 2; m <= static_cast<long>(limit_residues.size()); ++m) {
            Rational shift = step / m;
            bool invariant = true;
            for (const auto& r : limit_residues) {
                if (limits(mod(r + shift, step)) != limits(r)) {
                    invariant = false;
                    break;
                }
            }
            if (invariant)
                best = m;
        }
        period = step / best;
    }

    // Every coset of the new step that meets a stored coset; when the new
    // step is coarser, one stored coset feeds several new ones.
    std::set<Rational> residues;
    Rational both = lcm(step, period);
    for (const auto& [r, c] : in.cosets)
        for (Rational x = r; x < r + both; x += step)
            residues.insert(mod(x, period));

    Line out;
    out.step = period;
    for (const auto& rho : residues) {
        Coset c;
        if (!limit_residues.empty())
            c.low = limits(mod(rho, step)).first;
        if (any_jump) {
            Integer k0 = ceil(Rational((lo - period - rho) / period));
            Integer k1 = floor(Rational((hi + period - rho) / period));
            for (Integer k = k0; k <= k1; ++k) {
                Rational x = rho + period * Rational(k);
                long d = in.value_at(x) - in.value_at(Rational(x - period));
                if (d != 0)
                    c.jumps.emplace(x, d);
            }
        }
        if (c.low != 0 || !c.jumps.empty())
            out.cosets.emplace(rho, std::move(c));
    }
    return out;
}

Divisor Divisor::from_progressions(std::span<const Progression> items)
{
    std::map<Rational, std::vector<const Progression*>> by_line;
    for (const auto& p : items) {
        if (p.step == 0)
            throw std::invalid_argument("progression step must be nonzero");
        if (p.mult != 0)
            by_line[p.start.im()].push_back(&p);
    }
    Divisor d;
    for (const auto& [im, list] : by_line) {
        Rational step = abs(list.front()->step);
        for (const auto* p : list)
            step = lcm(step, Rational(abs(p->step)));
        Line raw;
        raw.step = step;
        for (const auto* p : list) {
            Rational ratio = step / abs(p->step);
            long k = to_long(ratio.get_num());
            bool downward = p->step > 0;
            for (long j = 0; j < k; ++j) {
                Rational start = p->start.re() - p->step * j;
                Coset& c = raw.cosets[mod(start, step)];
                if (downward) {
                    c.low += p->mult;
                    c.jumps[Rational(start + step)] -= p->mult;
                } else {
                    c.jumps[start] += p->mult;
                }
            }
        }
        Line line = canonical(raw);
        if (!line.cosets.empty())
            d.lines_.emplace(im, std::move(line));
    }
    return d;
}

std::vector<Progression> Divisor::progressions() const
{
    std::vector<Progression> out;
    for (const auto& [im, line] : lines_) {
        const Rational& h = line.step;
        for (const auto& [rho, c] : line.cosets) {
            if (c.jumps.empty()) {
                out.push_back({GaussQ(rho, im), h, c.low});
                out.push_back({GaussQ(Rational(rho + h), im), -h, c.low});
                continue;
            }
            auto it = c.jumps.begin();
            long first = it->second;
            if (c.low != 0) {
                out.push_back({GaussQ(Rational(it->first - h), im), h, c.low});
                first += c.low;
            }
            if (first != 0)
                out.push_back({GaussQ(it->first, im), -h, first});
            for (++it; it != c.jumps.end(); ++it)
                out.push_back({GaussQ(it->first, im), -h, it->second});
        }
    }
    return out;
}

long Divisor::order_at(const GaussQ& s0) const
{
    auto it = lines_.find(s0.im());
    if (it == lines_.end())
        return 0;
    return it->second.value_at(s0.re());
}

std::vector<GaussQ> Divisor::breakpoints() const
{
    std::vector<GaussQ> out;
    for (const auto& [im, line] : lines_)
        for (const auto& [rho, c] : line.cosets)
            for (const auto& [pos, v] : c.jumps)
                out.emplace_back(pos, im);
    return out;
}

Divisor& Divisor::operator+=(const Divisor& o)
{
    auto items = progressions();
    auto more = o.progressions();
    items.insert(items.end(), more.begin(), more.end());
    *this = from_progressions(items);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o)
{
    return *this += -o;
}

Divisor Divisor::operator-() const
{
    Divisor d = *this;
    for (auto& [im, line] : d.lines_)
        for (auto& [rho, c] : line.cosets) {
            c.low = -c.low;
            for (auto& [pos, v] : c.jumps)
                v = -v;
        }
    return d;
}

bool operator==(const Divisor& a, const Divisor& b)
{
    return a.lines_ == b.lines_;
}

}  // namespace archlc
