#include "archlc/syntax.hpp"

#include "archlc/errors.hpp"

#include <cctype>
#include <string>

namespace archlc {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip();
        return pos_ == s_.size();
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::size_t pos() const { return pos_; }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::string near = pos_ < s_.size() ? " near '" + std::string(s_.substr(pos_, 8)) + "'" : " at end of input";
        throw ParseError(what + near, pos_);
    }

    std::string word()
    {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }

    std::string digits()
    {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (b == pos_)
            fail("expected digits");
        return std::string(s_.substr(b, pos_ - b));
    }

    Integer integer()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        Integer z{digits()};
        return neg ? Integer(-z) : z;
    }

    Rational rational()
    {
        Integer p = integer();
        Integer q = 1;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t at = pos_;
            q = Integer{digits()};
            if (q == 0) {
                pos_ = at;
                fail("zero denominator");
            }
        }
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            fail("non-rational literal");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }

    GaussQ gaussian()
    {
        Rational re = rational();
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            return GaussQ(0, re);
        }
        char c = peek();
        if (c != '+' && c != '-')
            return GaussQ(re);
        ++pos_;
        Rational im = 1;
        if (char d = peek(); d != 'i') {
            if (d == '+' || d == '-')
                fail("unexpected sign");
            im = rational();
        }
        expect('i');
        return GaussQ(re, c == '-' ? Rational(-im) : im);
    }

    Constituent summand()
    {
        skip();
        std::size_t at = pos_;
        std::string name = word();
        if (name != "chi" && name != "lambda" && name != "phi") {
            pos_ = at;
            fail("expected chi, lambda or phi");
        }
        expect('(');
        skip();
        std::size_t index_at = pos_;
        Integer a = integer();
        expect(',');
        GaussQ t = gaussian();
        expect(')');
        if (!a.fits_slong_p()) {
            pos_ = index_at;
            fail("index out of range");
        }
        long n = a.get_si();
        if (name == "chi")
            return chi_subscript(n, t);
        if (name == "phi")
            return phi_subscript(n, t);
        if (n != 0 && n != 1) {
            pos_ = index_at;
            fail("lambda sign index must be 0 or 1");
        }
        return CharR{static_cast<int>(n), t};
    }

    std::optional<Field> field_prefix()
    {
        std::size_t save = pos_;
        char c = peek();
        if (c == 'C' || c == 'R') {
            ++pos_;
            if (peek() == ':') {
                ++pos_;
                return c == 'C' ? Field::Complex : Field::Real;
            }
        }
        pos_ = save;
        return std::nullopt;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Parameter parse_param(std::string_view text)
{
    Parser in(text);
    auto field = in.field_prefix();
    if (!field)
        in.fail("expected 'C:' or 'R:'");
    std::vector<Constituent> parts;
    if (!in.done()) {
        for (;;) {
            std::size_t at = in.pos();
            auto c = in.summand();
            if (field_of(c) != *field)
                throw FieldMismatch(to_string(c) + " at position " + std::to_string(at) +
                                    " is not a constituent over " + to_string(*field));
            parts.push_back(std::move(c));
            if (in.done())
                break;
            in.expect('+');
        }
    }
    return Parameter::normalize(*field, std::move(parts));
}

Constituent parse_constituent(std::string_view text)
{
    Parser in(text);
    auto c = in.summand();
    if (!in.done())
        in.fail("trailing input");
    return c;
}

Constituent parse_character(std::string_view text)
{
    Parser in(text);
    auto field = in.field_prefix();
    auto c = in.summand();
    if (!in.done())
        in.fail("trailing input");
    if (dimension(c) != 1)
        throw ParseError("a twisting character must be chi(...) or lambda(...)", 0);
    if (field && field_of(c) != *field)
        throw FieldMismatch(to_string(c) + " is not a character over " + to_string(*field));
    return c;
}

}  // namespace archlc
