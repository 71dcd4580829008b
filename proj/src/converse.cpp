#include "archlc/converse.hpp"

#include "archlc/errors.hpp"
#include "archlc/local_factors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace archlc {

namespace {

using ClassKey = std::pair<Rational, Rational>;  // (Im s, Re s mod 1) on the divisor side

std::set<ClassKey> classes_of(const Divisor& d)
{
    std::set<ClassKey> out;
    // A progression of step h < 1 meets several classes mod 1.
    for (const auto& p : d.progressions()) {
        Rational h = abs(p.step);
        Rational x = p.start.re();
        for (Rational walked = 0; walked < 1; walked += h, x += h)
            out.emplace(p.start.im(), mod(x, Rational(1)));
    }
    return out;
}

// Smallest and largest breakpoint on the horizontal line of the class. A
// line may be stored with a step finer than 1, so a jump of one class can
// be recorded up to one unit to its left; callers pad the window.
std::optional<std::pair<Rational, Rational>> class_window(std::initializer_list<const Divisor*> ds,
                                                          const ClassKey& key)
{
    std::optional<std::pair<Rational, Rational>> w;
    for (const auto* d : ds)
        for (const auto& b : d->breakpoints()) {
            if (b.im() != key.first)
                continue;
            if (!w)
                w.emplace(b.re(), b.re());
            w->first = std::min(w->first, b.re());
            w->second = std::max(w->second, b.re());
        }
    return w;
}

// Points r + k of one class, k in [k0, k1].
struct ClassScan {
    ClassKey key;
    long k0 = 0;
    long k1 = 0;

    GaussQ point(long k) const { return GaussQ(Rational(key.second + k), key.first); }
    long order(const Divisor& d, long k) const { return d.order_at(point(k)); }
};

ClassScan make_scan(const ClassKey& key, const std::pair<Rational, Rational>& w, long pad)
{
    ClassScan s;
    s.key = key;
    s.k0 = to_long(floor(Rational(w.first - key.second))) - pad;
    s.k1 = to_long(ceil(Rational(w.second - key.second))) + pad;
    return s;
}

long zeros(long f)
{
    return f < 0 ? -f : 0;
}

bool by_real_part(const GaussQ& a, const GaussQ& b)
{
    return a < b;
}

// Genericity orders every class so that t ascends while t - N descends;
// pairing the two sorted multisets recovers N.
std::optional<std::vector<std::pair<long, GaussQ>>> pair_up(std::vector<GaussQ> t, std::vector<GaussQ> v)
{
    if (t.size() != v.size())
        return std::nullopt;
    std::sort(t.begin(), t.end(), by_real_part);
    std::sort(v.begin(), v.end(), [](const GaussQ& a, const GaussQ& b) { return b < a; });
    std::vector<std::pair<long, GaussQ>> out;
    for (std::size_t k = 0; k < t.size(); ++k) {
        GaussQ n = t[k] - v[k];
        if (!n.is_integer())
            return std::nullopt;
        out.emplace_back(to_long(n.re().get_num()), t[k]);
    }
    return out;
}

class QueryLog {
public:
    explicit QueryLog(const GammaOracle& o) : oracle_(o) {}

    const GammaExpr& operator()(const Constituent& chi)
    {
        std::string key = to_string(chi);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, oracle_.query(chi)).first;
            order_.push_back(chi);
        }
        return it->second;
    }

    // First queried (or available) character where p disagrees with the oracle.
    std::optional<std::string> contradiction(const Parameter& p)
    {
        std::vector<Constituent> all = order_;
        for (const auto& chi : oracle_.available)
            all.push_back(chi);
        for (const auto& chi : all)
            if (!equivalent(gamma_twisted(p, chi), (*this)(chi)))
                return to_string(chi);
        return std::nullopt;
    }

private:
    const GammaOracle& oracle_;
    std::map<std::string, GammaExpr> cache_;
    std::vector<Constituent> order_;
};

long required_offset(const SearchBounds& b)
{
    Rational spread = 0;
    for (const auto& t : b.tGrid)
        spread = std::max(spread, Rational(abs(t.re())));
    return 1 + 2 * b.maxN + 2 * to_long(ceil(spread));
}

// Reads one complex class from the divisor of the chi_{-M,0} twist, with
// N + M >= 0 for every constituent so each twisted gamma factor is
// Gamma(1 - s - t + N + M) / Gamma(s + t).
std::optional<std::vector<Constituent>> read_complex_class(const Divisor& d, const ClassKey& key, long M)
{
    auto w = class_window({&d}, key);
    if (!w)
        return std::vector<Constituent>{};
    ClassScan scan = make_scan(key, *w, 2);

    std::vector<GaussQ> ts;
    for (long k = scan.k0; k < scan.k1; ++k) {
        long c = zeros(scan.order(d, k)) - zeros(scan.order(d, k + 1));
        if (c < 0)
            return std::nullopt;
        for (long j = 0; j < c; ++j)
            ts.push_back(-scan.point(k));
    }
    GammaExpr known;
    for (const auto& t : ts)
        known /= GammaExpr::gamma(LinForm(1, t));
    Divisor zero_part = divisor(known);

    std::vector<GaussQ> vs;  // t - N
    for (long k = scan.k0 + 1; k <= scan.k1; ++k) {
        long c = (scan.order(d, k) - zero_part.order_at(scan.point(k))) -
                 (scan.order(d, k - 1) - zero_part.order_at(scan.point(k - 1)));
        if (c < 0)
            return std::nullopt;
        for (long j = 0; j < c; ++j)
            vs.push_back(GaussQ(1 + M) - scan.point(k));
    }
    auto pairs = pair_up(std::move(ts), std::move(vs));
    if (!pairs)
        return std::nullopt;
    std::vector<Constituent> out;
    for (auto& [n, t] : *pairs)
        out.emplace_back(CharC{n, t});
    return out;
}

Parameter reconstruct_complex(const GammaOracle& oracle, const SearchBounds& bounds)
{
    QueryLog log(oracle);
    const Constituent trivial = CharC{0, GaussQ{}};
    log(trivial);

    std::vector<long> offsets;
    if (!oracle.available.empty()) {
        long best = 0;
        for (const auto& chi : oracle.available)
            if (auto* c = std::get_if<CharC>(&chi); c && c->t == GaussQ{})
                best = std::max(best, c->n);
        offsets.push_back(best);
    } else {
        long M = required_offset(bounds);
        for (int attempt = 0; attempt < 4; ++attempt, M *= 2)
            offsets.push_back(M);
    }

    std::string last = to_string(trivial);
    for (long M : offsets) {
        const Constituent probe = CharC{M, GaussQ{}};
        Divisor d = divisor(log(probe));
        std::vector<Constituent> parts;
        bool readable = true;
        for (const auto& key : classes_of(d)) {
            auto block = read_complex_class(d, key, M);
            if (!block) {
                readable = false;
                break;
            }
            parts.insert(parts.end(), block->begin(), block->end());
        }
        if (!readable) {
            last = to_string(probe);
            continue;
        }
        Parameter p = Parameter::normalize(Field::Complex, std::move(parts));
        auto bad = log.contradiction(p);
        if (!bad)
            return p;
        last = *bad;
    }
    throw ReconstructionFailure("no parameter within bounds reproduces the twisted gamma factor at " + last, last);
}

// One real class from the trivial (f0) and sign (f1) twists. Zeros of
// lambda_{e,t} sit at -t - 2k in both twists for e = 0 and move to 2 - t - 2k
// for e = 1 under the sign twist; zeros of phi_{-N,u} sit at -u - k and move
// one step right.
std::optional<std::vector<Constituent>> read_real_class(const Divisor& d0, const Divisor& d1, const ClassKey& key)
{
    auto w = class_window({&d0, &d1}, key);
    if (!w)
        return std::vector<Constituent>{};
    ClassScan scan = make_scan(key, *w, 4);
    const long k0 = scan.k0;
    const long k1 = scan.k1;
    auto W0 = [&](long k) { return zeros(scan.order(d0, k)); };
    auto W1 = [&](long k) { return zeros(scan.order(d1, k)); };
    auto lane = [&](long k) { return ((k - k0) % 2 + 2) % 2; };

    // All lambda exponents of one class differ by even integers, so their
    // zeros fill a single parity lane.
    long a0 = scan.order(d0, k0);
    long a1 = scan.order(d0, k0 + 1);
    std::optional<long> lam_lane;
    if (a0 != a1)
        lam_lane = a0 < a1 ? 0 : 1;
    auto on_lam_lane = [&](long k) { return lam_lane && lane(k) == *lam_lane; };

    // Number of phi zero progressions through the point k (valid for k < k1).
    auto Phi = [&](long k) { return on_lam_lane(k) ? W1(k + 1) : W0(k); };

    std::vector<GaussQ> us;
    for (long k = k0; k + 2 <= k1; ++k) {
        long c = Phi(k) - Phi(k + 1);
        if (c < 0)
            return std::nullopt;
        for (long j = 0; j < c; ++j)
            us.push_back(-scan.point(k));
    }

    std::vector<Constituent> parts;
    if (lam_lane) {
        auto L0 = [&](long k) { return W0(k) - Phi(k); };
        auto L1 = [&](long k) { return W1(k) - Phi(k - 1); };
        long first = k0 + 1 + (lane(k0 + 1) == *lam_lane ? 0 : 1);
        long carry = 0;  // sign-one count at k - 2
        for (long k = first; k + 3 <= k1; k += 2) {
            long ct = L0(k) - L0(k + 2);   // lambdas with -t at k
            long ct2 = L1(k) - L1(k + 2);  // lambdas with -t + 2 eps at k
            long e0 = ct2 - carry;
            long e1 = ct - e0;
            if (ct < 0 || ct2 < 0 || e0 < 0 || e1 < 0)
                return std::nullopt;
            GaussQ t = -scan.point(k);
            for (long j = 0; j < e0; ++j)
                parts.emplace_back(CharR{0, t});
            for (long j = 0; j < e1; ++j)
                parts.emplace_back(CharR{1, t});
            carry = e1;
        }
        if (carry != 0)
            return std::nullopt;
    }

    GammaExpr known;
    for (const auto& c : parts)
        known *= gamma_factor(c);
    for (const auto& u : us)
        known /= GammaExpr::gamma(LinForm(1, u));
    Divisor rest = divisor(known);
    auto R = [&](long k) { return scan.order(d0, k) - rest.order_at(scan.point(k)); };

    std::vector<GaussQ> vs;  // u - N
    for (long k = k0 + 1; k <= k1; ++k) {
        long c = R(k) - R(k - 1);
        if (c < 0)
            return std::nullopt;
        for (long j = 0; j < c; ++j)
            vs.push_back(GaussQ(1) - scan.point(k));
    }
    auto pairs = pair_up(std::move(us), std::move(vs));
    if (!pairs)
        return std::nullopt;
    for (auto& [n, u] : *pairs) {
        if (n < 0)
            return std::nullopt;
        parts.emplace_back(Disc2R{n, u});
    }
    return parts;
}

Parameter reconstruct_real(const GammaOracle& oracle)
{
    QueryLog log(oracle);
    const Constituent trivial = CharR{0, GaussQ{}};
    const Constituent sign = CharR{1, GaussQ{}};
    Divisor d0 = divisor(log(trivial));
    Divisor d1 = divisor(log(sign));

    std::set<ClassKey> keys = classes_of(d0);
    keys.merge(classes_of(d1));
    std::vector<Constituent> parts;
    for (const auto& key : keys) {
        auto block = read_real_class(d0, d1, key);
        if (!block)
            throw ReconstructionFailure("twisted gamma divisors are not those of a generic parameter",
                                        to_string(trivial));
        parts.insert(parts.end(), block->begin(), block->end());
    }
    Parameter p = Parameter::normalize(Field::Real, std::move(parts));
    if (auto bad = log.contradiction(p))
        throw ReconstructionFailure("no parameter within bounds reproduces the twisted gamma factor at " + *bad,
                                    *bad);
    return p;
}

// Runs fn(k) for k in [0, count) on a small pool.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++)
            fn(k);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < threads; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
}

void choose(const std::vector<Constituent>& universe, std::size_t from, int room, std::vector<Constituent>& cur,
            Field field, std::set<Parameter>& out)
{
    if (!cur.empty())
        out.insert(Parameter::normalize(field, cur));
    for (std::size_t k = from; k < universe.size(); ++k) {
        int d = dimension(universe[k]);
        if (d > room)
            continue;
        cur.push_back(universe[k]);
        choose(universe, k, room - d, cur, field, out);
        cur.pop_back();
    }
}

}  // namespace

GammaOracle oracle_for(const Parameter& p)
{
    return {p.field(), [p](const Constituent& chi) { return gamma_twisted(p, chi); }, {}};
}

std::vector<Constituent> reconstruction_queries(Field field, const SearchBounds& bounds)
{
    if (field == Field::Real)
        return {CharR{0, GaussQ{}}, CharR{1, GaussQ{}}};
    return {CharC{0, GaussQ{}}, CharC{required_offset(bounds), GaussQ{}}};
}

Parameter reconstruct(const GammaOracle& oracle, const SearchBounds& bounds)
{
    return oracle.field == Field::Complex ? reconstruct_complex(oracle, bounds) : reconstruct_real(oracle);
}

std::vector<Constituent> twist_candidates(Field field, const SearchBounds& bounds)
{
    std::vector<Constituent> out;
    if (field == Field::Complex) {
        out.emplace_back(CharC{0, GaussQ{}});
        for (long m = 1; m <= bounds.maxTwistOffset; ++m) {
            out.emplace_back(CharC{m, GaussQ{}});
            out.emplace_back(CharC{-m, GaussQ{}});
        }
        return out;
    }
    out.emplace_back(CharR{0, GaussQ{}});
    out.emplace_back(CharR{1, GaussQ{}});
    for (long m = 1; m <= bounds.maxTwistOffset; ++m)
        for (long t : {m, -m})
            for (int e : {0, 1})
                out.emplace_back(CharR{e, GaussQ(t)});
    return out;
}

std::optional<Constituent> find_distinguishing_twist(const Parameter& p, const Parameter& q,
                                                     const SearchBounds& bounds)
{
    if (p.field() != q.field())
        throw FieldMismatch("cannot compare " + to_string(p) + " with " + to_string(q));
    if (p == q)
        return std::nullopt;
    for (const auto& chi : twist_candidates(p.field(), bounds))
        if (!equivalent(gamma_twisted(p, chi), gamma_twisted(q, chi)))
            return chi;
    throw SearchExhausted("no candidate twist separates " + to_string(p) + " and " + to_string(q));
}

std::vector<Parameter> enumerate_parameters(Field field, int nMax, const SearchBounds& bounds)
{
    std::vector<Constituent> universe;
    for (const auto& t : bounds.tGrid) {
        if (field == Field::Complex) {
            for (long n = 0; n <= bounds.maxN; ++n)
                universe.emplace_back(CharC{n, t});
        } else {
            universe.emplace_back(CharR{0, t});
            universe.emplace_back(CharR{1, t});
            for (long n = 0; n <= bounds.maxN; ++n)
                universe.emplace_back(Disc2R{n, t});
        }
    }
    std::set<Parameter> found;
    std::vector<Constituent> cur;
    choose(universe, 0, nMax, cur, field, found);
    return {found.begin(), found.end()};
}

std::vector<Parameter> enumerate_generic(Field field, int nMax, const SearchBounds& bounds)
{
    std::vector<Parameter> out;
    for (auto& p : enumerate_parameters(field, nMax, bounds))
        if (certified_genericity(p).generic)
            out.push_back(std::move(p));
    return out;
}

FamilyReport verify_family(Field field, int nMax, const SearchBounds& bounds, unsigned threads)
{
    FamilyReport r;
    r.field = field;
    r.nMax = nMax;
    std::vector<Parameter> members = enumerate_parameters(field, nMax, bounds);
    r.members = members.size();

    struct MemberResult {
        bool generic = false;
        bool cross = false;
        bool fe = false;
        bool round_trip = false;
        std::vector<FamilyFailure> failures;
    };
    std::vector<MemberResult> results(members.size());
    parallel_for(members.size(), threads, [&](std::size_t k) {
        const Parameter& p = members[k];
        MemberResult& m = results[k];
        const std::string text = to_string(p);
        try {
            m.generic = certified_genericity(p).generic;
            m.cross = true;
        } catch (const CrossCheckFailure& e) {
            m.failures.push_back({"cross-check", text, "", e.what()});
        }
        m.fe = equivalent(gamma_factor(p), gamma_factor_via_fe(p));
        if (!m.fe)
            m.failures.push_back({"functional-equation", text, "", to_string(gamma_factor(p))});
        if (!m.generic)
            return;
        try {
            Parameter back = reconstruct(oracle_for(p), bounds);
            m.round_trip = back == p;
            if (!m.round_trip)
                m.failures.push_back({"round-trip", text, "", "reconstructed " + to_string(back)});
        } catch (const std::exception& e) {
            m.failures.push_back({"round-trip", text, "", e.what()});
        }
    });

    std::vector<std::size_t> generic;
    for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& m = results[k];
        r.cross_check_pass += m.cross;
        r.functional_equation_pass += m.fe;
        r.round_trip_pass += m.round_trip;
        if (m.generic)
            generic.push_back(k);
        r.failures.insert(r.failures.end(), m.failures.begin(), m.failures.end());
    }
    r.generic = generic.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < generic.size(); ++a)
        for (std::size_t b = a + 1; b < generic.size(); ++b)
            pairs.emplace_back(generic[a], generic[b]);
    r.pairs = pairs.size();
    std::vector<std::optional<FamilyFailure>> sep(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        const Parameter& p = members[pairs[k].first];
        const Parameter& q = members[pairs[k].second];
        try {
            auto chi = find_distinguishing_twist(p, q, bounds);
            if (!chi)
                sep[k] = FamilyFailure{"separation", to_string(p), to_string(q), "no twist returned"};
            else if (equivalent(gamma_twisted(p, *chi), gamma_twisted(q, *chi)))
                sep[k] = FamilyFailure{"separation", to_string(p), to_string(q),
                                       "twist " + to_string(*chi) + " does not separate"};
        } catch (const std::exception& e) {
            sep[k] = FamilyFailure{"separation", to_string(p), to_string(q), e.what()};
        }
    });
    for (auto& f : sep) {
        if (f)
            r.failures.push_back(std::move(*f));
        else
            ++r.separation_pass;
    }
    return r;
}

std::string to_string(const FamilyReport& r)
{
    std::ostringstream out;
    out << "family " << to_string(r.field) << " dim <= " << r.nMax << ": " << r.members << " members, "
        << r.generic << " generic\n";
    out << "  cross-check          " << r.cross_check_pass << "/" << r.members << "\n";
    out << "  functional equation  " << r.functional_equation_pass << "/" << r.members << "\n";
    out << "  round trip           " << r.round_trip_pass << "/" << r.generic << "\n";
    out << "  separation           " << r.separation_pass << "/" << r.pairs << "\n";
    for (const auto& f : r.failures) {
        out << "  FAIL " << f.check << ": " << f.parameter;
        if (!f.other.empty())
            out << " vs " << f.other;
        out << ": " << f.detail << "\n";
    }
    return out.str();
}

}  // namespace archlc
