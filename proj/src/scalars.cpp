#include "archlc/scalars.hpp"

#include "archlc/errors.hpp"

#include <cctype>
#include <climits>
#include <stdexcept>

namespace archlc {

namespace {

std::strong_ordering cmp_order(int c)
{
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational frac(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num))
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (!all_digits(den))
        throw ParseError("malformed rational denominator in '" + std::string(text) + "'", slash + 1);
    Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational q(Integer(std::string(num)), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational mod(const Rational& x, const Rational& m)
{
    Rational ratio = x / m;
    return Rational(x - m * Rational(floor(ratio)));
}

Rational lcm(const Rational& a, const Rational& b)
{
    // lcm(p1/q1, p2/q2) = lcm(p1, p2) / gcd(q1, q2) for lowest terms.
    Integer num, den;
    mpz_lcm(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_gcd(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer " + z.get_str() + " exceeds machine range");
    return z.get_si();
}

GaussQ::GaussQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

bool GaussQ::is_integer() const
{
    return im_ == 0 && archlc::is_integer(re_);
}

GaussQ& GaussQ::operator+=(const GaussQ& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::strong_ordering operator<=>(const GaussQ& a, const GaussQ& b)
{
    if (int c = cmp(a.re_, b.re_); c != 0)
        return cmp_order(c);
    return cmp_order(cmp(a.im_, b.im_));
}

std::string to_string(const GaussQ& z)
{
    if (z.im() == 0)
        return to_string(z.re());
    std::string out = to_string(z.re());
    out += z.im() < 0 ? "-" : "+";
    out += to_string(Rational(abs(z.im())));
    out += "i";
    return out;
}

GaussQ parse_gaussq(std::string_view text)
{
    // gq := rat | rat ('+'|'-') rat 'i'
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start])))
        ++start;
    std::size_t end = text.size();
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    std::string_view body = text.substr(start, end - start);
    if (body.empty())
        throw ParseError("empty number", start);
    if (body.back() != 'i')
        return GaussQ(parse_rational(body));
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size() - 1; k > 0; --k) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        throw ParseError("imaginary literal needs a real part ('0+1i')", start);
    Rational re = parse_rational(body.substr(0, split));
    std::string_view im_text = body.substr(split + 1, body.size() - split - 2);
    if (im_text.empty() || im_text.front() == '+' || im_text.front() == '-')
        throw ParseError("malformed imaginary part", start + split + 1);
    Rational im = parse_rational(im_text);
    if (body[split] == '-')
        im = -im;
    return GaussQ(re, im);
}

Order preceq_cmp(const GaussQ& w, const GaussQ& z)
{
    auto d = int_diff(w, z);
    if (!d)
        return Order::Incomparable;
    if (*d > 0)
        return Order::Less;
    if (*d < 0)
        return Order::Greater;
    return Order::Equal;
}

std::optional<Integer> int_diff(const GaussQ& w, const GaussQ& z)
{
    GaussQ d = z - w;
    if (!d.is_integer())
        return std::nullopt;
    return d.re().get_num();
}

LinForm& LinForm::operator+=(const LinForm& o)
{
    slope_ += o.slope_;
    offset_ += o.offset_;
    return *this;
}

LinForm& LinForm::operator-=(const LinForm& o)
{
    slope_ -= o.slope_;
    offset_ -= o.offset_;
    return *this;
}

LinForm& LinForm::operator*=(const Rational& c)
{
    slope_ *= c;
    offset_ *= GaussQ(c);
    return *this;
}

std::strong_ordering operator<=>(const LinForm& a, const LinForm& b)
{
    if (int c = cmp(a.slope_, b.slope_); c != 0)
        return cmp_order(c);
    return a.offset_ <=> b.offset_;
}

std::string to_string(const LinForm& f)
{
    std::string out;
    const Rational& a = f.slope();
    if (a != 0) {
        if (a == 1)
            out = "s";
        else if (a == -1)
            out = "-s";
        else
            out = to_string(a) + "*s";
    }
    const GaussQ& c = f.offset();
    if (c == GaussQ{})
        return out.empty() ? "0" : out;
    if (out.empty())
        return to_string(c);
    if (c.im() == 0 && c.re() < 0)
        return out + " - " + to_string(Rational(-c.re()));
    return out + " + " + to_string(c);
}

}  // namespace archlc
