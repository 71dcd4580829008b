#include "archlc/gamma_expr.hpp"

#include "archlc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace archlc {

namespace {

using cd = std::complex<double>;

// Multiset difference on sorted vectors, in place.
void cancel_sorted(std::vector<LinForm>& a, std::vector<LinForm>& b)
{
    std::vector<LinForm> ra, rb;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            ++i;
            ++j;
        } else if (*i < *j) {
            ra.push_back(std::move(*i++));
        } else {
            rb.push_back(std::move(*j++));
        }
    }
    ra.insert(ra.end(), std::make_move_iterator(i), std::make_move_iterator(a.end()));
    rb.insert(rb.end(), std::make_move_iterator(j), std::make_move_iterator(b.end()));
    a = std::move(ra);
    b = std::move(rb);
}

std::vector<LinForm> merge_sorted(const std::vector<LinForm>& a, const std::vector<LinForm>& b)
{
    std::vector<LinForm> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Pairs Gamma(u), Gamma(u + 1/2) inside one side; returns the prefactor
// exponents collected (for 2 and pi) and whether anything changed.
bool duplicate_once(std::vector<LinForm>& side, LinForm& exp2, Rational& pi_half_count)
{
    const GaussQ half(Rational(1, 2));
    for (std::size_t k = 0; k < side.size(); ++k) {
        LinForm partner(side[k].slope(), side[k].offset() + half);
        auto it = std::lower_bound(side.begin(), side.end(), partner);
        if (it == side.end() || !(*it == partner))
            continue;
        LinForm u = side[k];
        auto idx = static_cast<std::size_t>(it - side.begin());
        side.erase(side.begin() + static_cast<std::ptrdiff_t>(std::max(k, idx)));
        side.erase(side.begin() + static_cast<std::ptrdiff_t>(std::min(k, idx)));
        LinForm doubled = u * Rational(2);
        side.insert(std::lower_bound(side.begin(), side.end(), doubled), doubled);
        exp2 += LinForm::constant(GaussQ(1)) - doubled;
        pi_half_count += Rational(1, 2);
        return true;
    }
    return false;
}

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

GammaExpr GammaExpr::gamma(LinForm arg)
{
    if (arg.slope() == 0)
        throw std::invalid_argument("Gamma argument must depend on s: " + to_string(arg));
    GammaExpr x;
    x.num_.push_back(std::move(arg));
    return x;
}

GammaExpr GammaExpr::power_of_i(int k)
{
    GammaExpr x;
    x.root4_ = ((k % 4) + 4) % 4;
    return x;
}

GammaExpr GammaExpr::power_of_2(LinForm e)
{
    GammaExpr x;
    x.exp2_ = std::move(e);
    return x;
}

GammaExpr GammaExpr::power_of_pi(LinForm e)
{
    GammaExpr x;
    x.exp_pi_ = std::move(e);
    return x;
}

GammaExpr GammaExpr::power_of_2pi(const LinForm& e)
{
    GammaExpr x;
    x.exp2_ = e;
    x.exp_pi_ = e;
    return x;
}

GammaExpr GammaExpr::from_parts(int root4, LinForm exp2, LinForm exp_pi, std::vector<LinForm> num,
                                std::vector<LinForm> den)
{
    GammaExpr x;
    x.root4_ = ((root4 % 4) + 4) % 4;
    x.exp2_ = std::move(exp2);
    x.exp_pi_ = std::move(exp_pi);
    for (const auto* side : {&num, &den})
        for (const auto& f : *side)
            if (f.slope() == 0)
                throw std::invalid_argument("Gamma argument must depend on s: " + to_string(f));
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.cancel();
    return x;
}

void GammaExpr::cancel()
{
    cancel_sorted(num_, den_);
}

bool GammaExpr::is_unit() const
{
    return root4_ == 0 && exp2_.is_zero() && exp_pi_.is_zero() && num_.empty() && den_.empty();
}

bool GammaExpr::is_constant() const
{
    return exp2_.is_constant() && exp_pi_.is_constant() && num_.empty() && den_.empty();
}

GammaExpr& GammaExpr::operator*=(const GammaExpr& o)
{
    root4_ = (root4_ + o.root4_) % 4;
    exp2_ += o.exp2_;
    exp_pi_ += o.exp_pi_;
    num_ = merge_sorted(num_, o.num_);
    den_ = merge_sorted(den_, o.den_);
    cancel();
    return *this;
}

GammaExpr& GammaExpr::operator/=(const GammaExpr& o)
{
    return *this *= o.inverse();
}

GammaExpr GammaExpr::inverse() const
{
    GammaExpr x;
    x.root4_ = (4 - root4_) % 4;
    x.exp2_ = -exp2_;
    x.exp_pi_ = -exp_pi_;
    x.num_ = den_;
    x.den_ = num_;
    return x;
}

std::string to_string(const GammaExpr& x)
{
    std::vector<std::string> factors;
    if (x.root4() != 0)
        factors.push_back("i^" + std::to_string(x.root4()));
    if (!x.exp2().is_zero())
        factors.push_back("2^(" + to_string(x.exp2()) + ")");
    if (!x.exp_pi().is_zero())
        factors.push_back("pi^(" + to_string(x.exp_pi()) + ")");
    for (const auto& f : x.num())
        factors.push_back("Gamma(" + to_string(f) + ")");
    std::string out;
    for (const auto& f : factors)
        out += (out.empty() ? "" : " * ") + f;
    if (out.empty())
        out = "1";
    if (!x.den().empty()) {
        std::string d;
        for (const auto& f : x.den())
            d += (d.empty() ? "" : " * ") + ("Gamma(" + to_string(f) + ")");
        out += x.den().size() == 1 ? " / " + d : " / (" + d + ")";
    }
    return out;
}

GammaExpr substitute(const GammaExpr& x, const Rational& a, const GaussQ& b)
{
    if (a == 0)
        throw std::invalid_argument("substitution s -> a*s + b needs a != 0");
    std::vector<LinForm> num, den;
    for (const auto& f : x.num())
        num.push_back(f.compose(a, b));
    for (const auto& f : x.den())
        den.push_back(f.compose(a, b));
    return GammaExpr::from_parts(x.root4(), x.exp2().compose(a, b), x.exp_pi().compose(a, b), std::move(num),
                                 std::move(den));
}

Divisor divisor(const GammaExpr& x)
{
    // Gamma(a*s + b) has simple poles at s = -b/a - k/a, k >= 0.
    std::vector<Progression> items;
    auto add = [&](const LinForm& f, long mult) {
        Rational inv = 1 / f.slope();
        GaussQ start = -f.offset() * GaussQ(inv);
        items.push_back({start, inv, mult});
    };
    for (const auto& f : x.num())
        add(f, 1);
    for (const auto& f : x.den())
        add(f, -1);
    return Divisor::from_progressions(items);
}

long order_at(const GammaExpr& x, const GaussQ& s0)
{
    return divisor(x).order_at(s0);
}

bool holomorphic_at(const GammaExpr& x, const GaussQ& s0)
{
    return order_at(x, s0) <= 0;
}

GammaExpr apply_duplication(const GammaExpr& x)
{
    std::vector<LinForm> num = x.num();
    std::vector<LinForm> den = x.den();
    LinForm exp2 = x.exp2();
    Rational pi_num = 0, pi_den = 0;
    LinForm e2_num, e2_den;
    while (duplicate_once(num, e2_num, pi_num)) {
    }
    while (duplicate_once(den, e2_den, pi_den)) {
    }
    exp2 += e2_num - e2_den;
    LinForm exp_pi = x.exp_pi() + LinForm::constant(GaussQ(Rational(pi_num - pi_den)));
    return GammaExpr::from_parts(x.root4(), exp2, exp_pi, std::move(num), std::move(den));
}

std::complex<double> log_gamma(std::complex<double> z)
{
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    z -= 1.0;
    cd acc = kLanczos[0];
    for (int k = 1; k < 9; ++k)
        acc += kLanczos[k] / (z + static_cast<double>(k));
    cd t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

std::complex<double> log_evaluate(const GammaExpr& x, std::complex<double> s)
{
    constexpr double pi = std::numbers::pi;
    cd acc(0.0, x.root4() * pi / 2.0);
    acc += x.exp2().eval(s) * std::numbers::ln2;
    acc += x.exp_pi().eval(s) * std::log(pi);
    for (const auto& f : x.num())
        acc += log_gamma(f.eval(s));
    for (const auto& f : x.den())
        acc -= log_gamma(f.eval(s));
    return acc;
}

double singular_clearance(const GammaExpr& x, std::complex<double> s)
{
    double best = std::numeric_limits<double>::infinity();
    auto scan = [&](const LinForm& f) {
        cd z = f.eval(s);
        double k = std::min(0.0, std::round(z.real()));
        double d = std::abs(z - k) / std::abs(f.slope().get_d());
        best = std::min(best, d);
    };
    for (const auto& f : x.num())
        scan(f);
    for (const auto& f : x.den())
        scan(f);
    return best;
}

std::complex<double> evaluate(const GammaExpr& x, std::complex<double> s)
{
    if (singular_clearance(x, s) < tolerance::singular_distance)
        throw SingularEvaluation("evaluation of " + to_string(x) + " at a pole or zero");
    // Powers of i are applied exactly; the rest goes through the log.
    static const cd unit[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cd rest = log_evaluate(x, s) - cd(0.0, x.root4() * std::numbers::pi / 2.0);
    return unit[x.root4()] * std::exp(rest);
}

std::vector<std::complex<double>> sample_points(const GammaExpr& a, const GammaExpr& b)
{
    std::vector<cd> pts = {{0.317, 0.0}, {1.713, 0.5}, {-0.243, 1.1}};
    for (auto& s : pts) {
        while (singular_clearance(a, s) < tolerance::sample_clearance ||
               singular_clearance(b, s) < tolerance::sample_clearance)
            s += 1.0 / 7.0;
    }
    return pts;
}

bool equivalent(const GammaExpr& a, const GammaExpr& b)
{
    if (a == b)
        return true;
    if (!(divisor(a) == divisor(b)))
        return false;
    for (const auto& s : sample_points(a, b)) {
        cd ratio = std::exp(log_evaluate(a, s) - log_evaluate(b, s));
        if (std::abs(ratio - 1.0) > tolerance::equality_ratio)
            return false;
    }
    return true;
}

}  // namespace archlc
