#include "archlc/parameters.hpp"

#include "archlc/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace archlc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

long index_n(const Constituent& c)
{
    return std::visit(overloaded{[](const CharC& x) { return x.n; }, [](const CharR&) { return 0L; },
                                 [](const Disc2R& x) { return x.n; }},
                      c);
}

int index_eps(const Constituent& c)
{
    if (auto* l = std::get_if<CharR>(&c))
        return l->eps;
    return 0;
}

// lambda_{e,t} (x) lambda_{d,s} = lambda_{e+d-eta, s+t-eta}, eta = 2 iff e = d = 1.
CharR lambda_product(const CharR& a, const CharR& b)
{
    int eta = (a.eps == 1 && b.eps == 1) ? 2 : 0;
    return CharR{a.eps + b.eps - eta, a.t + b.t - GaussQ(eta)};
}

// phi_{-n,t} (x) lambda_{d,s} = phi_{-n, t+s-d}.
Disc2R phi_times_lambda(const Disc2R& a, const CharR& b)
{
    return Disc2R{a.n, a.t + b.t - GaussQ(b.eps)};
}

void require_field(Field field, const Constituent& c)
{
    if (field_of(c) != field)
        throw FieldMismatch(to_string(c) + " is not a constituent over " + to_string(field));
}

// Class key of the ~-relation: (Im t, Re t mod 1).
std::pair<Rational, Rational> sim_class(const GaussQ& t)
{
    return {t.im(), mod(t.re(), Rational(1))};
}

std::string exponent_text(const GaussQ& z)
{
    return "^{" + to_string(z) + "}";
}

}  // namespace

std::string to_string(Field f)
{
    return f == Field::Real ? "R" : "C";
}

int dimension(const Constituent& c)
{
    return std::holds_alternative<Disc2R>(c) ? 2 : 1;
}

Field field_of(const Constituent& c)
{
    return std::holds_alternative<CharC>(c) ? Field::Complex : Field::Real;
}

const GaussQ& exponent(const Constituent& c)
{
    return std::visit([](const auto& x) -> const GaussQ& { return x.t; }, c);
}

bool constituent_less(const Constituent& a, const Constituent& b)
{
    if (a.index() != b.index())
        return a.index() < b.index();
    if (index_n(a) != index_n(b))
        return index_n(a) < index_n(b);
    if (auto c = exponent(a) <=> exponent(b); c != 0)
        return c < 0;
    return index_eps(a) < index_eps(b);
}

std::string to_string(const Constituent& c)
{
    return std::visit(
        overloaded{
            [](const CharC& x) { return "chi(" + std::to_string(-x.n) + ", " + to_string(x.t) + ")"; },
            [](const CharR& x) { return "lambda(" + std::to_string(x.eps) + ", " + to_string(x.t) + ")"; },
            [](const Disc2R& x) { return "phi(" + std::to_string(-x.n) + ", " + to_string(x.t) + ")"; }},
        c);
}

Parameter Parameter::normalize(Field field, std::vector<Constituent> raw)
{
    for (const auto& c : raw) {
        require_field(field, c);
        if (auto* l = std::get_if<CharR>(&c); l && l->eps != 0 && l->eps != 1)
            throw std::invalid_argument("lambda sign index must be 0 or 1");
    }
    if (field == Field::Real) {
        std::vector<Constituent> parts;
        std::vector<GaussQ> even;  // t of lambda_{0,t}
        std::vector<GaussQ> odd;   // t of lambda_{1,t}
        for (auto& c : raw) {
            if (auto* d = std::get_if<Disc2R>(&c)) {
                if (d->n < 0)
                    parts.emplace_back(Disc2R{-d->n, d->t - GaussQ(d->n)});
                else
                    parts.push_back(c);
            } else {
                const auto& l = std::get<CharR>(c);
                (l.eps == 0 ? even : odd).push_back(l.t);
            }
        }
        // Each lambda_{1,x} can only complete lambda_{0,x-1}, so matching is a
        // count comparison per t.
        std::sort(odd.begin(), odd.end());
        std::vector<bool> used(odd.size(), false);
        for (const auto& t : even) {
            GaussQ partner = t + GaussQ(1);
            auto it = std::lower_bound(odd.begin(), odd.end(), partner);
            bool merged = false;
            for (; it != odd.end() && *it == partner; ++it) {
                auto k = static_cast<std::size_t>(it - odd.begin());
                if (!used[k]) {
                    used[k] = true;
                    merged = true;
                    break;
                }
            }
            if (merged)
                parts.emplace_back(Disc2R{0, t});
            else
                parts.emplace_back(CharR{0, t});
        }
        for (std::size_t k = 0; k < odd.size(); ++k)
            if (!used[k])
                parts.emplace_back(CharR{1, odd[k]});
        raw = std::move(parts);
    }
    std::sort(raw.begin(), raw.end(), constituent_less);
    return Parameter(field, std::move(raw));
}

int Parameter::dimension() const
{
    int d = 0;
    for (const auto& c : parts_)
        d += archlc::dimension(c);
    return d;
}

bool operator<(const Parameter& a, const Parameter& b)
{
    if (a.field_ != b.field_)
        return a.field_ < b.field_;
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                        constituent_less);
}

std::string to_string(const Parameter& p)
{
    std::string out = to_string(p.field()) + ":";
    bool first = true;
    for (const auto& c : p.constituents()) {
        out += first ? " " : " + ";
        out += to_string(c);
        first = false;
    }
    return out;
}

Parameter dual(const Parameter& p)
{
    std::vector<Constituent> out;
    out.reserve(p.constituents().size());
    for (const auto& c : p.constituents()) {
        std::visit(overloaded{[&](const CharC& x) { out.emplace_back(CharC{-x.n, -x.t}); },
                              [&](const CharR& x) { out.emplace_back(CharR{x.eps, GaussQ(2 * x.eps) - x.t}); },
                              [&](const Disc2R& x) { out.emplace_back(Disc2R{x.n, GaussQ(x.n) - x.t}); }},
                   c);
    }
    return Parameter::normalize(p.field(), std::move(out));
}

Parameter twist_gl1(const Parameter& p, const Constituent& chi)
{
    if (archlc::dimension(chi) != 1)
        throw std::invalid_argument("twisting character must be one-dimensional");
    require_field(p.field(), chi);
    std::vector<Constituent> out;
    out.reserve(p.constituents().size());
    if (p.field() == Field::Complex) {
        const auto& x = std::get<CharC>(chi);
        for (const auto& c : p.constituents()) {
            const auto& y = std::get<CharC>(c);
            out.emplace_back(CharC{y.n + x.n, y.t + x.t});
        }
    } else {
        const auto& x = std::get<CharR>(chi);
        for (const auto& c : p.constituents()) {
            if (auto* l = std::get_if<CharR>(&c))
                out.emplace_back(lambda_product(*l, x));
            else
                out.emplace_back(phi_times_lambda(std::get<Disc2R>(c), x));
        }
    }
    return Parameter::normalize(p.field(), std::move(out));
}

Parameter tensor_2x2(const Disc2R& a, const Disc2R& b)
{
    return Parameter::normalize(Field::Real,
                                {Disc2R{a.n + b.n, a.t + b.t}, Disc2R{a.n - b.n, a.t + b.t - GaussQ(b.n)}});
}

Parameter rankin_selberg(const Parameter& p)
{
    Parameter v = dual(p);
    std::vector<Constituent> out;
    if (p.field() == Field::Complex) {
        for (const auto& a : p.constituents())
            for (const auto& b : v.constituents()) {
                const auto& x = std::get<CharC>(a);
                const auto& y = std::get<CharC>(b);
                out.emplace_back(CharC{x.n + y.n, x.t + y.t});
            }
        return Parameter::normalize(Field::Complex, std::move(out));
    }
    for (const auto& a : p.constituents()) {
        for (const auto& b : v.constituents()) {
            const auto* la = std::get_if<CharR>(&a);
            const auto* lb = std::get_if<CharR>(&b);
            if (la && lb) {
                out.emplace_back(lambda_product(*la, *lb));
            } else if (la) {
                out.emplace_back(phi_times_lambda(std::get<Disc2R>(b), *la));
            } else if (lb) {
                out.emplace_back(phi_times_lambda(std::get<Disc2R>(a), *lb));
            } else {
                auto t = tensor_2x2(std::get<Disc2R>(a), std::get<Disc2R>(b));
                out.insert(out.end(), t.constituents().begin(), t.constituents().end());
            }
        }
    }
    return Parameter::normalize(Field::Real, std::move(out));
}

bool sim_related(const Constituent& a, const Constituent& b)
{
    return int_diff(exponent(a), exponent(b)).has_value();
}

std::vector<Parameter> partition_sim(const Parameter& p)
{
    std::map<std::pair<Rational, Rational>, std::vector<Constituent>> blocks;
    for (const auto& c : p.constituents())
        blocks[sim_class(exponent(c))].push_back(c);
    std::vector<Parameter> out;
    out.reserve(blocks.size());
    for (auto& [key, parts] : blocks)
        out.push_back(Parameter::normalize(p.field(), std::move(parts)));
    return out;
}

std::string describe_llc(const Parameter& p)
{
    std::vector<Constituent> order = p.constituents();
    std::stable_sort(order.begin(), order.end(), [](const Constituent& a, const Constituent& b) {
        return exponent(a).re() > exponent(b).re();
    });

    std::ostringstream out;
    const char* field = p.field() == Field::Real ? "R" : "C";
    out << "GL_" << p.dimension() << "(" << field << "): ";
    if (p.empty()) {
        out << "empty parameter\n";
        return out.str();
    }
    if (p.field() == Field::Complex) {
        out << "Langlands quotient of the principal series induced from\n";
    } else {
        out << "Langlands quotient of the representation induced from the (";
        for (std::size_t k = 0; k < order.size(); ++k)
            out << (k ? "," : "") << archlc::dimension(order[k]);
        out << ") parabolic with\n";
    }
    int k = 1;
    for (const auto& c : order) {
        out << "  [" << k++ << "] " << to_string(c) << ": ";
        std::visit(overloaded{[&](const CharC& x) {
                                  if (x.n == 0 && x.t == GaussQ{}) {
                                      out << "trivial character of GL_1(C)";
                                      return;
                                  }
                                  out << "z^{" << -x.n << "} ||z||" << exponent_text(x.t);
                              },
                              [&](const CharR& x) {
                                  GaussQ power = x.t - GaussQ(x.eps);
                                  if (x.eps == 0 && power == GaussQ{}) {
                                      out << "trivial character of GL_1(R)";
                                      return;
                                  }
                                  if (x.eps == 1)
                                      out << "sgn";
                                  if (power != GaussQ{})
                                      out << (x.eps == 1 ? " " : "") << "|.|" << exponent_text(power);
                                  out << " of GL_1(R)";
                              },
                              [&](const Disc2R& x) {
                                  GaussQ power = x.t - GaussQ(Rational(Rational(x.n) / 2));
                                  out << "D_" << x.n << " ⊗ |det|" << exponent_text(power)
                                      << (x.n == 0 ? " (limit of discrete series)" : " (discrete series)");
                              }},
                   c);
        out << "   Re(t) = " << to_string(exponent(c).re()) << "\n";
    }
    return out.str();
}

}  // namespace archlc
