#include "archlc/genericity.hpp"

#include "archlc/errors.hpp"
#include "archlc/local_factors.hpp"

namespace archlc {

namespace {

std::string range_text(const Integer& lo, const Integer& mid, const Integer& hi)
{
    return lo.get_str() + " <= " + mid.get_str() + " <= " + hi.get_str();
}

GenericityVerdict fail(std::string condition, std::vector<std::size_t> idx, std::string inequality)
{
    return {false, GenericityWitness{std::move(condition), std::move(idx), std::move(inequality), 0}};
}

// 0 <= u_j - u_i <= N_j - N_i whenever the difference is an integer, for
// every ordered pair with N_i <= N_j.
std::optional<GenericityVerdict> check_nested(const std::vector<std::pair<long, GaussQ>>& items,
                                              const std::vector<std::size_t>& where, const char* id)
{
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (i == j || items[i].first > items[j].first)
                continue;
            auto d = int_diff(items[i].second, items[j].second);
            if (!d)
                continue;
            Integer span = items[j].first - items[i].first;
            if (*d < 0 || *d > span)
                return fail(id, {where[i], where[j]}, range_text(0, *d, span));
        }
    }
    return std::nullopt;
}

}  // namespace

GenericityVerdict is_generic_comb(const Parameter& p)
{
    const auto& parts = p.constituents();
    if (p.field() == Field::Complex) {
        std::vector<std::pair<long, GaussQ>> items;
        std::vector<std::size_t> where;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const auto& x = std::get<CharC>(parts[k]);
            items.emplace_back(x.n, x.t);
            where.push_back(k);
        }
        if (auto v = check_nested(items, where, "C3"))
            return *v;
        return {};
    }

    std::vector<std::size_t> lam, phi;
    for (std::size_t k = 0; k < parts.size(); ++k)
        (std::holds_alternative<CharR>(parts[k]) ? lam : phi).push_back(k);

    // (a) integer differences of lambda exponents are even
    for (std::size_t a = 0; a < lam.size(); ++a)
        for (std::size_t b = a + 1; b < lam.size(); ++b) {
            const auto& x = std::get<CharR>(parts[lam[a]]);
            const auto& y = std::get<CharR>(parts[lam[b]]);
            auto d = int_diff(y.t, x.t);
            if (d && !mpz_even_p(d->get_mpz_t()))
                return fail("Ra", {lam[a], lam[b]}, "t_i - t_j = " + d->get_str() + " is odd");
        }

    // (b) -eps_j <= u_i - t_j <= N_i - eps_j
    for (auto i : phi)
        for (auto j : lam) {
            const auto& f = std::get<Disc2R>(parts[i]);
            const auto& l = std::get<CharR>(parts[j]);
            auto d = int_diff(l.t, f.t);
            if (!d)
                continue;
            Integer lo = -l.eps;
            Integer hi = f.n - l.eps;
            if (*d < lo || *d > hi)
                return fail("Rb", {i, j}, range_text(lo, *d, hi));
        }

    // (c) nested condition on the two-dimensional pieces
    std::vector<std::pair<long, GaussQ>> items;
    for (auto i : phi) {
        const auto& f = std::get<Disc2R>(parts[i]);
        items.emplace_back(f.n, f.t);
    }
    if (auto v = check_nested(items, phi, "Rc"))
        return *v;
    return {};
}

GenericityVerdict is_generic_L(const Parameter& p)
{
    long order = order_at(l_factor(rankin_selberg(p)), GaussQ(1));
    if (order <= 0)
        return {};
    GenericityWitness w{"L-pole", {}, "pole of order " + std::to_string(order) + " at s = 1", order};
    return {false, std::move(w)};
}

bool genericity_cross_check(const Parameter& p)
{
    return is_generic_comb(p).generic == is_generic_L(p).generic;
}

GenericityVerdict certified_genericity(const Parameter& p)
{
    auto comb = is_generic_comb(p);
    auto lpole = is_generic_L(p);
    if (comb.generic != lpole.generic)
        throw CrossCheckFailure("genericity routes disagree for " + to_string(p) + ": combinatorial says " +
                                to_string(comb) + ", L-factor says " + to_string(lpole));
    return comb;
}

std::string to_string(const GenericityVerdict& v)
{
    if (v.generic)
        return "generic";
    std::string out = "not generic";
    if (v.witness) {
        out += " (" + v.witness->condition;
        if (!v.witness->indices.empty()) {
            out += " at";
            for (auto k : v.witness->indices)
                out += " #" + std::to_string(k);
        }
        out += ": " + v.witness->inequality + ")";
    }
    return out;
}

}  // namespace archlc
