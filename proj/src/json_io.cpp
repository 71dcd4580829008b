#include "archlc/json_io.hpp"

#include "archlc/errors.hpp"
#include "archlc/local_factors.hpp"
#include "archlc/syntax.hpp"

#include <map>
#include <memory>

namespace archlc {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing JSON field '") + key + "'", 0);
    return j.at(key);
}

long long_from_json(const Json& j)
{
    if (!j.is_number_integer())
        throw ParseError("expected an integer in JSON", 0);
    return j.get<long>();
}

}  // namespace

Json to_json(const Rational& q)
{
    return to_fraction_string(q);
}

Json to_json(const GaussQ& z)
{
    return Json::array({to_json(z.re()), to_json(z.im())});
}

Json to_json(const LinForm& f)
{
    Json j;
    j["s"] = to_json(f.slope());
    j["c"] = to_json(f.offset());
    return j;
}

Json to_json(const GammaExpr& x)
{
    Json j;
    j["i"] = x.root4();
    j["exp2"] = to_json(x.exp2());
    j["expPi"] = to_json(x.exp_pi());
    j["num"] = Json::array();
    for (const auto& f : x.num())
        j["num"].push_back(to_json(f));
    j["den"] = Json::array();
    for (const auto& f : x.den())
        j["den"].push_back(to_json(f));
    return j;
}

Json to_json(const Constituent& c)
{
    Json j;
    if (auto* x = std::get_if<CharC>(&c)) {
        j["kind"] = "chi";
        j["a"] = -x->n;
    } else if (auto* x = std::get_if<CharR>(&c)) {
        j["kind"] = "lambda";
        j["eps"] = x->eps;
    } else {
        j["kind"] = "phi";
        j["a"] = -std::get<Disc2R>(c).n;
    }
    j["t"] = to_json(exponent(c));
    return j;
}

Json to_json(const Parameter& p)
{
    Json j;
    j["field"] = to_string(p.field());
    j["text"] = to_string(p);
    j["dimension"] = p.dimension();
    j["constituents"] = Json::array();
    for (const auto& c : p.constituents())
        j["constituents"].push_back(to_json(c));
    return j;
}

Json to_json(const GenericityVerdict& v)
{
    Json j;
    j["generic"] = v.generic;
    if (!v.witness) {
        j["witness"] = nullptr;
        return j;
    }
    Json w;
    w["condition"] = v.witness->condition;
    w["indices"] = v.witness->indices;
    w["inequality"] = v.witness->inequality;
    if (v.witness->condition == "L-pole")
        w["poleOrder"] = v.witness->pole_order;
    j["witness"] = w;
    return j;
}

Json to_json(const FamilyReport& r)
{
    auto count = [](std::size_t pass, std::size_t total) {
        Json c;
        c["pass"] = pass;
        c["total"] = total;
        return c;
    };
    Json j;
    j["field"] = to_string(r.field);
    j["nmax"] = r.nMax;
    j["members"] = r.members;
    j["generic"] = r.generic;
    j["crossCheck"] = count(r.cross_check_pass, r.members);
    j["functionalEquation"] = count(r.functional_equation_pass, r.members);
    j["roundTrip"] = count(r.round_trip_pass, r.generic);
    j["separation"] = count(r.separation_pass, r.pairs);
    j["failures"] = Json::array();
    for (const auto& f : r.failures) {
        Json e;
        e["check"] = f.check;
        e["parameter"] = f.parameter;
        if (!f.other.empty())
            e["other"] = f.other;
        e["detail"] = f.detail;
        j["failures"].push_back(e);
    }
    j["passed"] = r.passed();
    return j;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw ParseError("expected a rational string in JSON", 0);
    return parse_rational(j.get<std::string>());
}

GaussQ gaussq_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected [re, im] in JSON", 0);
    return GaussQ(rational_from_json(j[0]), rational_from_json(j[1]));
}

LinForm linform_from_json(const Json& j)
{
    return LinForm(rational_from_json(field(j, "s")), gaussq_from_json(field(j, "c")));
}

GammaExpr gamma_expr_from_json(const Json& j)
{
    std::vector<LinForm> num, den;
    const Json& jn = field(j, "num");
    const Json& jd = field(j, "den");
    if (!jn.is_array() || !jd.is_array())
        throw ParseError("num/den must be arrays", 0);
    for (const auto& f : jn)
        num.push_back(linform_from_json(f));
    for (const auto& f : jd)
        den.push_back(linform_from_json(f));
    return GammaExpr::from_parts(static_cast<int>(long_from_json(field(j, "i"))),
                                 linform_from_json(field(j, "exp2")), linform_from_json(field(j, "expPi")),
                                 std::move(num), std::move(den));
}

Parameter parameter_from_json(const Json& j)
{
    std::string f = field(j, "field").get<std::string>();
    if (f != "C" && f != "R")
        throw ParseError("field must be \"C\" or \"R\"", 0);
    Field fld = f == "C" ? Field::Complex : Field::Real;
    std::vector<Constituent> parts;
    for (const auto& c : field(j, "constituents")) {
        std::string kind = field(c, "kind").get<std::string>();
        GaussQ t = gaussq_from_json(field(c, "t"));
        if (kind == "chi")
            parts.emplace_back(chi_subscript(long_from_json(field(c, "a")), t));
        else if (kind == "phi")
            parts.emplace_back(phi_subscript(long_from_json(field(c, "a")), t));
        else if (kind == "lambda")
            parts.emplace_back(CharR{static_cast<int>(long_from_json(field(c, "eps"))), t});
        else
            throw ParseError("unknown constituent kind '" + kind + "'", 0);
    }
    return Parameter::normalize(fld, std::move(parts));
}

Json transcript_json(const Parameter& p, const std::vector<Constituent>& twists)
{
    Json j = Json::object();
    for (const auto& chi : twists)
        j[to_string(chi)] = to_json(gamma_twisted(p, chi));
    return j;
}

GammaOracle oracle_from_transcript(const Json& j)
{
    if (!j.is_object() || j.empty())
        throw ParseError("transcript must be a non-empty JSON object", 0);
    auto table = std::make_shared<std::map<std::string, GammaExpr>>();
    GammaOracle o;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        Constituent chi = parse_character(key);
        if (first)
            o.field = field_of(chi);
        else if (field_of(chi) != o.field)
            throw FieldMismatch("transcript mixes real and complex characters");
        first = false;
        (*table)[to_string(chi)] = gamma_expr_from_json(value);
        o.available.push_back(chi);
    }
    o.query = [table](const Constituent& chi) {
        auto it = table->find(to_string(chi));
        if (it == table->end())
            throw ReconstructionFailure("transcript has no entry for " + to_string(chi), to_string(chi));
        return it->second;
    };
    return o;
}

}  // namespace archlc
