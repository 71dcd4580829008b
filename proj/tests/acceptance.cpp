// Acceptance run: one PASS/FAIL line per criterion, with its runtime limit.

#include "archlc/cli.hpp"
#include "archlc/converse.hpp"
#include "archlc/errors.hpp"
#include "archlc/genericity.hpp"
#include "archlc/json_io.hpp"
#include "archlc/local_factors.hpp"
#include "archlc/syntax.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace archlc;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why)
    {
        if (ok)
            note = why;
        ok = false;
    }
};

using Check = std::function<Outcome()>;

bool criterion(int id, const char* title, double limit_seconds, const Check& check)
{
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = check();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= limit_seconds)
        out.fail("over the time limit");
    std::printf("%s [%d] %s (%.2f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
                limit_seconds, out.note.empty() ? "" : " : ", out.note.c_str());
    std::fflush(stdout);
    return out.ok;
}

GaussQ q(long n, long d = 1)
{
    return GaussQ(frac(n, d));
}

SearchBounds family_bounds()
{
    SearchBounds b;
    b.maxN = 3;
    b.tGrid = {q(0), q(1, 2), q(1), q(3, 2), q(2)};
    return b;
}

Outcome duplication_coherence()
{
    Outcome o;
    for (long k = 1; k <= 20; ++k) {
        GaussQ t = q(k, 4);
        Parameter merged = Parameter::normalize(Field::Real, {Disc2R{0, t}});
        Constituent a = CharR{0, t};
        Constituent b = CharR{1, t + q(1)};
        if (!equivalent(gamma_factor(merged), gamma_factor(a) * gamma_factor(b)))
            o.fail("gamma at t = " + to_string(t));
        if (!equivalent(l_factor(merged), l_factor(a) * l_factor(b)))
            o.fail("L at t = " + to_string(t));
        if (!equivalent(epsilon_factor(merged), epsilon_factor(a) * epsilon_factor(b)))
            o.fail("epsilon at t = " + to_string(t));
    }
    return o;
}

Outcome genericity_equivalence()
{
    Outcome o;
    auto b = family_bounds();
    std::size_t n = 0;
    for (Field f : {Field::Complex, Field::Real})
        for (const auto& p : enumerate_parameters(f, 3, b)) {
            ++n;
            if (is_generic_comb(p).generic != is_generic_L(p).generic)
                o.fail("disagreement at " + to_string(p));
        }
    o.note = o.ok ? std::to_string(n) + " parameters" : o.note;
    return o;
}

Outcome functional_equation()
{
    Outcome o;
    auto b = family_bounds();
    std::size_t n = 0;
    for (Field f : {Field::Complex, Field::Real})
        for (const auto& p : enumerate_parameters(f, 3, b)) {
            ++n;
            if (!equivalent(gamma_factor(p), gamma_factor_via_fe(p)))
                o.fail("mismatch at " + to_string(p));
        }
    o.note = o.ok ? std::to_string(n) + " parameters" : o.note;
    return o;
}

Outcome round_trip()
{
    Outcome o;
    auto b = family_bounds();
    std::size_t n = 0;
    for (auto [f, dim] : {std::pair{Field::Complex, 3}, std::pair{Field::Real, 2}})
        for (const auto& p : enumerate_generic(f, dim, b)) {
            ++n;
            try {
                if (!(reconstruct(oracle_for(p), b) == p))
                    o.fail("wrong parameter from " + to_string(p));
            } catch (const ReconstructionFailure& e) {
                o.fail(to_string(p) + ": " + e.what());
            }
        }
    o.note = o.ok ? std::to_string(n) + " generic parameters" : o.note;
    return o;
}

Outcome separation()
{
    Outcome o;
    auto b = family_bounds();
    std::size_t pairs = 0;
    for (Field f : {Field::Complex, Field::Real}) {
        auto fam = enumerate_generic(f, 2, b);
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                ++pairs;
                auto w = find_distinguishing_twist(fam[i], fam[j], b);
                if (!w)
                    o.fail("no twist for " + to_string(fam[i]) + " vs " + to_string(fam[j]));
                else if (equivalent(gamma_twisted(fam[i], *w), gamma_twisted(fam[j], *w)))
                    o.fail("twist does not re-verify for " + to_string(fam[i]) + " vs " + to_string(fam[j]));
            }
    }
    o.note = o.ok ? std::to_string(pairs) + " pairs" : o.note;
    return o;
}

Outcome invariants()
{
    Outcome o;
    auto b = family_bounds();
    for (Field f : {Field::Complex, Field::Real}) {
        Constituent trivial = f == Field::Complex ? Constituent(CharC{0, GaussQ()}) : Constituent(CharR{0, GaussQ()});
        for (const auto& p : enumerate_parameters(f, 3, b)) {
            if (!(dual(dual(p)) == p))
                o.fail("dual is not an involution at " + to_string(p));
            if (!(twist_gl1(p, trivial) == p))
                o.fail("trivial twist changes " + to_string(p));
            if (!(Parameter::normalize(f, p.constituents()) == p))
                o.fail("normalize is not idempotent at " + to_string(p));
        }
    }
    for (long n = 0; n <= 4; ++n)
        for (long m = 0; m <= 4; ++m)
            for (const auto& t : b.tGrid)
                for (const auto& s : b.tGrid) {
                    Disc2R x{n, t}, y{m, s};
                    if (!(tensor_2x2(x, y) == tensor_2x2(y, x)))
                        o.fail("tensor product not commutative at N=" + std::to_string(n) + ", M=" + std::to_string(m));
                }
    return o;
}

Outcome numeric_engine()
{
    Outcome o;
    auto g = GammaExpr::gamma(LinForm(1, GaussQ()));
    double rel = std::abs(evaluate(g, 0.5) - std::sqrt(std::numbers::pi)) / std::sqrt(std::numbers::pi);
    if (rel > 1e-12)
        o.fail("Gamma(1/2) relative error " + std::to_string(rel));
    // 2^{1-s} pi^{1/2} Gamma(s) / (Gamma(s/2) Gamma((s+1)/2))
    auto ratio = GammaExpr::power_of_2(LinForm(-1, GaussQ(1))) * GammaExpr::power_of_pi(LinForm::constant(q(1, 2))) *
                 GammaExpr::gamma(LinForm(1, GaussQ())) / GammaExpr::gamma(LinForm(frac(1, 2), GaussQ())) /
                 GammaExpr::gamma(LinForm(frac(1, 2), q(1, 2)));
    const std::complex<double> points[] = {{0.7, 0}, {2.3, 0}, {5.9, 0}, {-0.4, 0}, {-2.6, 0},
                                           {0.5, 1.5}, {3.2, -2.1}, {-1.3, 0.8}, {1.1, 7.0}, {10.5, 3.3}};
    double worst = 0;
    for (auto s : points)
        worst = std::max(worst, std::abs(evaluate(ratio, s) - 1.0));
    if (worst > 1e-10)
        o.fail("duplication ratio off by " + std::to_string(worst));
    return o;
}

Outcome cli_round_trip()
{
    Outcome o;
    auto b = family_bounds();
    std::vector<Parameter> members;
    for (Field f : {Field::Complex, Field::Real}) {
        auto fam = enumerate_parameters(f, 3, b);
        for (std::size_t k = 0; k < 50; ++k)
            members.push_back(fam[k * fam.size() / 50]);
    }
    for (const auto& p : members) {
        std::string text = to_string(p);
        if (!(parse_param(text) == p))
            o.fail("parse(print) differs at " + text);
        std::ostringstream out1, out2, err;
        int c1 = run_cli({"factor", text, "--json"}, out1, err);
        int c2 = run_cli({"factor", text, "--json"}, out2, err);
        if (c1 != 0 || c2 != 0 || out1.str() != out2.str()) {
            o.fail("factor --json not reproducible at " + text);
            continue;
        }
        auto doc = Json::parse(out1.str());
        auto back = parameter_from_json(doc["parameter"]);
        if (!(back == p) || to_json(back).dump() != doc["parameter"].dump())
            o.fail("parameter JSON round trip at " + text);
        for (const char* key : {"L", "epsilon", "gamma"})
            if (to_json(gamma_expr_from_json(doc[key])).dump() != doc[key].dump())
                o.fail(std::string(key) + " JSON round trip at " + text);
        if (!(gamma_expr_from_json(doc["gamma"]) == gamma_factor(p)))
            o.fail("gamma JSON differs from the factor at " + text);
        std::ostringstream echo;
        if (run_cli({"dual", to_string(dual(p))}, echo, err) != 0 || parse_param(echo.str()) != p)
            o.fail("dual via the CLI at " + text);
    }
    o.note = o.ok ? std::to_string(members.size()) + " members" : o.note;
    return o;
}

}  // namespace

int main()
{
    bool all = true;
    all &= criterion(1, "duplication-formula coherence", 5, duplication_coherence);
    all &= criterion(2, "genericity equivalence", 60, genericity_equivalence);
    all &= criterion(3, "functional equation", 60, functional_equation);
    all &= criterion(4, "converse round trip", 120, round_trip);
    all &= criterion(5, "separation", 120, separation);
    all &= criterion(6, "algebraic invariants", 10, invariants);
    all &= criterion(7, "numeric engine", 1, numeric_engine);
    all &= criterion(8, "CLI round trip", 5, cli_round_trip);
    return all ? 0 : 1;
}
