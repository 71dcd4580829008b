#include "archlc/cli.hpp"

#include "archlc/converse.hpp"
#include "archlc/errors.hpp"
#include "archlc/genericity.hpp"
#include "archlc/json_io.hpp"
#include "archlc/local_factors.hpp"
#include "archlc/syntax.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace archlc {

namespace {

constexpr int kUsage = 1;
constexpr int kMath = 2;

// "s=0.5+2i", "0.5", "-1-0.25i", "3i"
std::complex<double> parse_point(std::string text)
{
    if (text.rfind("s=", 0) == 0)
        text.erase(0, 2);
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (text.empty())
        throw ParseError("empty evaluation point", 0);
    std::size_t used = 0;
    auto number = [&](const std::string& s, std::size_t from) {
        try {
            return std::stod(s.substr(from), &used);
        } catch (const std::exception&) {
            throw ParseError("malformed evaluation point '" + text + "'", from);
        }
    };
    if (text.back() != 'i') {
        double re = number(text, 0);
        if (used != text.size())
            throw ParseError("malformed evaluation point '" + text + "'", used);
        return {re, 0.0};
    }
    std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag = [&](const std::string& s) {
        if (s == "+" || s.empty())
            return 1.0;
        if (s == "-")
            return -1.0;
        double v = number(s, 0);
        if (used != s.size())
            throw ParseError("malformed evaluation point '" + text + "'", used);
        return v;
    };
    if (split == std::string::npos)
        return {0.0, imag(body)};
    double re = number(body.substr(0, split), 0);
    if (used != split)
        throw ParseError("malformed evaluation point '" + text + "'", used);
    return {re, imag(body.substr(split))};
}

std::string complex_text(std::complex<double> z)
{
    std::ostringstream o;
    o << std::setprecision(15) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return o.str();
}

std::vector<GaussQ> parse_grid(const std::string& text)
{
    std::vector<GaussQ> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(parse_gaussq(item));
    if (out.empty())
        throw ParseError("empty t-grid", 0);
    return out;
}

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw std::invalid_argument("cannot open " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

Json factor_json(const Parameter& p)
{
    Json j;
    j["parameter"] = to_json(p);
    j["L"] = to_json(l_factor(p));
    j["epsilon"] = to_json(epsilon_factor(p));
    j["gamma"] = to_json(gamma_factor(p));
    return j;
}

struct Options {
    std::string param;
    std::string other;
    std::string character;
    std::string eval;
    std::string path = "-";
    std::string field = "C";
    std::string grid = "0,1/2,1,3/2,2";
    bool json = false;
    int nmax = 2;
    long maxN = 3;
    long maxTwist = 8;
    unsigned threads = 0;
};

SearchBounds bounds_of(const Options& o)
{
    SearchBounds b;
    b.maxN = o.maxN;
    b.tGrid = parse_grid(o.grid);
    b.maxTwistOffset = o.maxTwist;
    return b;
}

// "phi(-2, 1)" or "R: phi(-2, 1)", normalized.
Disc2R single_phi(const std::string& text)
{
    Parameter p = text.find(':') == std::string::npos ? Parameter::normalize(Field::Real, {parse_constituent(text)})
                                                      : parse_param(text);
    if (p.constituents().size() != 1 || !std::holds_alternative<Disc2R>(p.constituents().front()))
        throw ParseError("tensor takes two phi(...) constituents", 0);
    return std::get<Disc2R>(p.constituents().front());
}

void print_param(std::ostream& out, const Parameter& p, bool json)
{
    if (json)
        out << to_json(p).dump(2) << "\n";
    else
        out << to_string(p) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Archimedean local factors and the local converse theorem", "archlc"};
    app.require_subcommand(1);
    Options o;

    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--maxN", o.maxN, "largest N in the search bounds")->check(CLI::NonNegativeNumber);
        sub->add_option("--tgrid", o.grid, "comma separated exponent grid");
        sub->add_option("--max-twist", o.maxTwist, "largest twist offset")->check(CLI::PositiveNumber);
    };

    auto* factor = app.add_subcommand("factor", "print L, epsilon and gamma factors");
    factor->add_option("param", o.param)->required();
    factor->add_option("--eval", o.eval, "evaluate numerically at s=<complex>");
    factor->add_flag("--json", o.json);

    auto* generic = app.add_subcommand("generic", "decide genericity");
    generic->add_option("param", o.param)->required();
    generic->add_flag("--json", o.json);

    auto* twist = app.add_subcommand("twist", "twist by a one-dimensional character");
    twist->add_option("param", o.param)->required();
    twist->add_option("character", o.character)->required();
    twist->add_flag("--json", o.json);

    auto* tensor = app.add_subcommand("tensor", "tensor product of two phi constituents");
    tensor->add_option("a", o.param)->required();
    tensor->add_option("b", o.other)->required();
    tensor->add_flag("--json", o.json);

    auto* dual_cmd = app.add_subcommand("dual", "contragredient parameter");
    dual_cmd->add_option("param", o.param)->required();
    dual_cmd->add_flag("--json", o.json);

    auto* llc = app.add_subcommand("llc", "describe the Langlands quotient data");
    llc->add_option("param", o.param)->required();

    auto* distinguish = app.add_subcommand("distinguish", "find a twist separating two parameters");
    distinguish->add_option("p", o.param)->required();
    distinguish->add_option("q", o.other)->required();
    distinguish->add_flag("--json", o.json);
    add_bounds(distinguish);

    auto* oracle = app.add_subcommand("oracle", "write the twisted gamma transcript of a parameter");
    oracle->add_option("param", o.param)->required();
    add_bounds(oracle);

    auto* rebuild = app.add_subcommand("reconstruct", "recover a parameter from a transcript");
    rebuild->add_option("transcript", o.path, "JSON file, or - for stdin");
    rebuild->add_flag("--json", o.json);
    add_bounds(rebuild);

    auto* family = app.add_subcommand("verify-family", "check the converse theorem over a family");
    family->add_option("--field", o.field)->check(CLI::IsMember({"C", "R"}));
    family->add_option("--nmax", o.nmax)->check(CLI::PositiveNumber);
    family->add_option("--threads", o.threads);
    family->add_flag("--json", o.json);
    add_bounds(family);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (factor->parsed()) {
            Parameter p = parse_param(o.param);
            GammaExpr L = l_factor(p), eps = epsilon_factor(p), gam = gamma_factor(p);
            if (o.json) {
                Json j = factor_json(p);
                if (!o.eval.empty()) {
                    auto s = parse_point(o.eval);
                    auto pair = [](std::complex<double> z) { return Json::array({z.real(), z.imag()}); };
                    j["at"] = pair(s);
                    j["values"] = {{"L", pair(evaluate(L, s))},
                                   {"epsilon", pair(evaluate(eps, s))},
                                   {"gamma", pair(evaluate(gam, s))}};
                }
                out << j.dump(2) << "\n";
                return 0;
            }
            out << "parameter  " << to_string(p) << "\n";
            out << "L(s)       " << to_string(L) << "\n";
            out << "eps        " << to_string(eps) << "\n";
            out << "gamma(s)   " << to_string(gam) << "\n";
            if (!o.eval.empty()) {
                auto s = parse_point(o.eval);
                out << "at s = " << complex_text(s) << "\n";
                out << "  L      " << complex_text(evaluate(L, s)) << "\n";
                out << "  eps    " << complex_text(evaluate(eps, s)) << "\n";
                out << "  gamma  " << complex_text(evaluate(gam, s)) << "\n";
            }
            return 0;
        }
        if (generic->parsed()) {
            Parameter p = parse_param(o.param);
            GenericityVerdict v = certified_genericity(p);
            if (o.json)
                out << to_json(v).dump(2) << "\n";
            else
                out << to_string(v) << "\n";
            return 0;
        }
        if (twist->parsed()) {
            print_param(out, twist_gl1(parse_param(o.param), parse_character(o.character)), o.json);
            return 0;
        }
        if (tensor->parsed()) {
            print_param(out, tensor_2x2(single_phi(o.param), single_phi(o.other)), o.json);
            return 0;
        }
        if (dual_cmd->parsed()) {
            print_param(out, dual(parse_param(o.param)), o.json);
            return 0;
        }
        if (llc->parsed()) {
            out << describe_llc(parse_param(o.param));
            return 0;
        }
        if (distinguish->parsed()) {
            Parameter p = parse_param(o.param), q = parse_param(o.other);
            auto chi = find_distinguishing_twist(p, q, bounds_of(o));
            if (o.json) {
                Json j;
                j["equal"] = !chi.has_value();
                j["character"] = chi ? Json(to_string(*chi)) : Json(nullptr);
                if (chi) {
                    j["gammaP"] = to_json(gamma_twisted(p, *chi));
                    j["gammaQ"] = to_json(gamma_twisted(q, *chi));
                }
                out << j.dump(2) << "\n";
            } else if (!chi) {
                out << "equal\n";
            } else {
                out << "separated by " << to_string(*chi) << "\n";
                out << "  gamma(p x chi) = " << to_string(gamma_twisted(p, *chi)) << "\n";
                out << "  gamma(q x chi) = " << to_string(gamma_twisted(q, *chi)) << "\n";
            }
            return 0;
        }
        if (oracle->parsed()) {
            Parameter p = parse_param(o.param);
            SearchBounds b = bounds_of(o);
            // Make sure the probe clears this particular parameter too.
            for (const auto& c : p.constituents()) {
                if (auto* x = std::get_if<CharC>(&c))
                    b.maxN = std::max(b.maxN, x->n < 0 ? -x->n : x->n);
                b.tGrid.push_back(exponent(c));
            }
            out << transcript_json(p, reconstruction_queries(p.field(), b)).dump(2) << "\n";
            return 0;
        }
        if (rebuild->parsed()) {
            Json j = Json::parse(read_input(o.path));
            print_param(out, reconstruct(oracle_from_transcript(j), bounds_of(o)), o.json);
            return 0;
        }
        if (family->parsed()) {
            Field f = o.field == "R" ? Field::Real : Field::Complex;
            FamilyReport r = verify_family(f, o.nmax, bounds_of(o), o.threads);
            if (o.json)
                out << to_json(r).dump(2) << "\n";
            else
                out << to_string(r);
            return r.passed() ? 0 : kMath;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const FieldMismatch& e) {
        err << "field mismatch: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        err << "bad JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const ReconstructionFailure& e) {
        err << "reconstruction failed: " << e.what() << "\n";
        return kMath;
    } catch (const CrossCheckFailure& e) {
        err << "cross-check failed: " << e.what() << "\n";
        return kMath;
    } catch (const SearchExhausted& e) {
        err << "search exhausted: " << e.what() << "\n";
        return kMath;
    } catch (const SingularEvaluation& e) {
        err << "singular evaluation: " << e.what() << "\n";
        return kMath;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace archlc
