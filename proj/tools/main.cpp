#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "toruscount/analysis.hpp"
#include "toruscount/errors.hpp"
#include "toruscount/json_io.hpp"
#include "toruscount/oracle.hpp"
#include "toruscount/prp.hpp"

using namespace toruscount;
using nlohmann::json;

namespace {

struct CommonInput {
    std::size_t rank = 0;
    std::vector<std::string> exprs;
    std::string file;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonInput& in) {
    cmd->add_option("-r,--rank", in.rank, "ambient rank (number of variables)");
    cmd->add_option("-e,--expr", in.exprs, "inline polynomial (repeatable)");
    cmd->add_option("-f,--file", in.file,
                    "input file: '# comments', first line 'rank R', one polynomial per line");
    cmd->add_option("--format", in.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

std::vector<LaurentPolynomial> load_polynomials(CommonInput& in) {
    std::vector<std::pair<std::string, std::size_t>> texts;  // text, source line
    for (const auto& e : in.exprs) texts.emplace_back(e, 0);
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw InputError("cannot open input file: " + in.file);
        std::string line;
        bool have_rank = false;
        std::size_t lineno = 0;
        while (std::getline(f, line)) {
            ++lineno;
            std::string trimmed = line.substr(line.find_first_not_of(" \t") == std::string::npos
                                                  ? line.size()
                                                  : line.find_first_not_of(" \t"));
            if (trimmed.empty() || trimmed[0] == '#') continue;
            if (!have_rank) {
                std::istringstream is(trimmed);
                std::string word;
                is >> word;
                long r = 0;
                if (word != "rank" || !(is >> r) || r < 1)
                    throw InputError("line " + std::to_string(lineno) +
                                     ": first entry must be 'rank R'");
                in.rank = static_cast<std::size_t>(r);
                have_rank = true;
                continue;
            }
            texts.emplace_back(trimmed, lineno);
        }
        if (!have_rank) throw InputError("input file has no 'rank R' line");
    }
    if (in.rank == 0) throw InputError("no rank given (use --rank or an input file)");
    if (texts.empty()) throw InputError("no polynomials given (use --expr or --file)");
    std::vector<LaurentPolynomial> out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
            out.push_back(LaurentPolynomial::parse(texts[i].first, in.rank));
        } catch (const ParseError& e) {
            std::string where = texts[i].second
                                    ? "line " + std::to_string(texts[i].second) + ", column " +
                                          std::to_string(e.position() + 1)
                                    : "polynomial " + std::to_string(i + 1) + ", column " +
                                          std::to_string(e.position() + 1);
            throw InputError(where + ": " + e.what());
        }
    }
    return out;
}

Limits limits_from_env() {
    Limits limits;
    if (const char* raw = std::getenv("TORUSCOUNT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0)
            throw InputError("TORUSCOUNT_BUDGET must be a positive integer");
        limits.subset_budget = v;
        limits.oracle_budget = v;
    }
    return limits;
}

json input_json(const CommonInput& in, const std::vector<LaurentPolynomial>& polys) {
    json fs = json::array();
    for (const auto& f : polys) fs.push_back(f.to_string());
    return json{{"rank", std::to_string(in.rank)}, {"polynomials", fs}};
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string report_text(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "degree        " << rep.degree << "\n"
       << "degree_bound  " << rep.degree_bound << "\n"
       << "M             " << rep.M.get_str() << "\n"
       << "D             " << rep.D.get_str() << (rep.D_exact ? "" : " (chain bound)") << "\n"
       << "R             " << rep.R.get_str() << "\n"
       << "N_R           " << rep.N_R.get_str() << "\n"
       << "period | M*D  " << rep.period_bound_MD.get_str() << "\n"
       << "period | N*D  " << rep.period_bound_NR.get_str() << "\n";
    return os.str();
}

std::string planes_text(const Decomposition& dec) {
    std::ostringstream os;
    os << "maximal planes (" << dec.maximal_planes.size() << "):\n";
    for (const auto& q : dec.maximal_planes) {
        os << "  dim " << q.dim() << " order " << q.order().get_str() << " at (";
        for (std::size_t i = 0; i < q.representative.size(); ++i)
            os << (i ? ", " : "") << q.representative[i].to_string();
        os << ")\n";
    }
    return os.str();
}

int run_analyze(CommonInput& in) {
    Limits limits = limits_from_env();
    auto polys = load_polynomials(in);
    Decomposition dec = decompose(polys, limits);
    AnalysisReport rep = analyze(dec);
    json out{{"input", input_json(in, polys)},
             {"analysis", to_json(rep)},
             {"decomposition", to_json(dec)}};
    emit(out, in.format, report_text(rep) + planes_text(dec));
    return 0;
}

int run_count(CommonInput& in, long from, long to, bool exact_order) {
    if (from < 1 || to < from) throw InputError("count range must satisfy 1 <= from <= to");
    Limits limits = limits_from_env();
    auto polys = load_polynomials(in);
    Decomposition dec = decompose(polys, limits);
    TorsionCounter counter(dec, limits);
    json counts = json::array();
    std::ostringstream text;
    for (long n = from; n <= to; ++n) {
        Integer p = exact_order ? counter.count_exact_order(n) : counter.count_dividing(n);
        counts.push_back(json{{"n", std::to_string(n)}, {"p", p.get_str()}});
        text << n << "\t" << p.get_str() << "\n";
    }
    json out{{"input", input_json(in, polys)},
             {"order", exact_order ? "exact" : "dividing"},
             {"counts", counts}};
    emit(out, in.format, text.str());
    return 0;
}

int run_fit(CommonInput& in) {
    Limits limits = limits_from_env();
    auto polys = load_polynomials(in);
    Decomposition dec = decompose(polys, limits);
    AnalysisReport rep = analyze(dec);
    PolynomialPeriodicFunction fitted = fit_counting_function(dec, rep, limits);
    json out{{"input", input_json(in, polys)},
             {"analysis", to_json(rep)},
             {"fitted", to_json(fitted)}};
    std::ostringstream text;
    text << "period " << fitted.period.get_str() << "\n"
         << "degree " << fitted.degree << "\n";
    for (int i = 0; i <= fitted.degree; ++i) {
        text << "a_" << i << ":";
        for (const Rational& c : fitted.coeffs[i]) text << " " << c.to_string();
        text << "\n";
    }
    emit(out, in.format, text.str());
    return 0;
}

int run_oracle(CommonInput& in, long n, bool exact_order) {
    if (n < 1) throw InputError("--n must be positive");
    Limits limits = limits_from_env();
    auto polys = load_polynomials(in);
    OracleConfig config;
    config.budget = limits.oracle_budget;
    config.max_n = n;  // the evaluation budget is the binding cap here
    config.max_rank = in.rank;
    Integer p = exact_order ? brute_count_exact_order(polys, n, config)
                            : brute_count_dividing(polys, n, config);
    json out{{"input", input_json(in, polys)},
             {"order", exact_order ? "exact" : "dividing"},
             {"counts", json::array({json{{"n", std::to_string(n)}, {"p", p.get_str()}}})}};
    emit(out, in.format, std::to_string(n) + "\t" + p.get_str() + "\n");
    return 0;
}

std::vector<std::pair<Rational, Angle>> parse_terms(const std::string& text) {
    std::vector<std::pair<Rational, Angle>> terms;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        auto at = piece.find('@');
        if (at == std::string::npos)
            throw InputError("term '" + piece + "' is not of the form coeff@angle");
        terms.emplace_back(Rational::from_string(piece.substr(0, at)),
                           Angle::from_string(piece.substr(at + 1)));
    }
    if (terms.empty()) throw InputError("no terms given");
    return terms;
}

std::string vertex_text(const Prp& p) {
    // Cumulative partial sums of the side vectors in direction order.
    // Decimal values are display-only approximations.
    auto sides = p.directed_sides();
    std::sort(sides.begin(), sides.end());
    std::ostringstream os;
    os << "vertices (decimal display only):\n";
    double x = 0, y = 0;
    os << "  v0 (0, 0)\n";
    for (std::size_t k = 0; k < sides.size(); ++k) {
        double len = sides[k].second.to_double();
        double arg = 2.0 * 3.14159265358979323846 * sides[k].first.value().to_double();
        x += len * std::cos(arg);
        y += len * std::sin(arg);
        os << "  v" << (k + 1) << " (" << x << ", " << y << ")  side length "
           << sides[k].second.to_string() << " direction " << sides[k].first.to_string() << "\n";
    }
    return os.str();
}

std::string prp_text(const Prp& p) {
    std::ostringstream os;
    os << "sides " << p.length() << " order " << p.order().get_str() << "\n";
    for (const auto& s : p.sides())
        os << "  length " << s.coeff.abs().to_string() << " angle " << s.angle.to_string()
           << (s.coeff.sign() < 0 ? " (negated)" : "") << "\n";
    return os.str();
}

int run_prp(const std::string& action, long n, long p, const std::string& terms_arg,
            bool vertices, const std::string& format) {
    Prp value;
    json out;
    if (action == "generate") {
        if (n < 1 || p < 1) throw InputError("generate needs --n and --p");
        value = Prp::generator(Integer(n), Integer(p));
        out["prp"] = to_json(value);
    } else if (action == "normalize") {
        value = Prp::normalize(parse_terms(terms_arg));
        out["prp"] = to_json(value);
    } else if (action == "decompose") {
        value = Prp::normalize(parse_terms(terms_arg));
        Limits limits = limits_from_env();
        auto terms = value.schoenberg_decompose(limits);
        out["prp"] = to_json(value);
        json parts = json::array();
        for (const auto& t : terms) parts.push_back(to_json(t));
        out["terms"] = parts;
        std::ostringstream text;
        text << prp_text(value) << "decomposition (" << terms.size() << " prime-gon terms):\n";
        for (const auto& t : terms)
            text << "  " << t.scale.to_string() << " * rot(" << t.rotation.to_string()
                 << ") * gon(" << t.prime.get_str() << ")\n";
        std::string body = text.str();
        if (vertices) {
            body += vertex_text(value);
            out["vertices_note"] = "see text format for the display-only vertex list";
        }
        emit(out, format, body);
        return 0;
    } else {
        throw InputError("unknown prp action: " + action);
    }
    std::string text = prp_text(value);
    if (vertices) {
        text += vertex_text(value);
        out["vertices_note"] = "see text format for the display-only vertex list";
    }
    emit(out, format, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "toruscount: exact counting of torsion points on algebraic subsets of the "
        "complex torus, with the supporting algebra of vanishing sums of roots of unity"};
    app.require_subcommand(1);

    CommonInput in;
    long from = 1, to = 24, oracle_n = 1;
    bool exact_order = false;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "degree and period analysis");
    add_common(analyze_cmd, in);

    CLI::App* count_cmd = app.add_subcommand("count", "table of torsion point counts");
    add_common(count_cmd, in);
    count_cmd->add_option("--from", from, "first n");
    count_cmd->add_option("--to", to, "last n");
    count_cmd->add_flag("--exact-order", exact_order,
                        "count points of order exactly n instead of dividing n");

    CLI::App* fit_cmd = app.add_subcommand("fit", "fit the polynomial-periodic closed form");
    add_common(fit_cmd, in);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference count");
    add_common(oracle_cmd, in);
    oracle_cmd->add_option("--n", oracle_n, "order to count at")->required();
    oracle_cmd->add_flag("--exact-order", exact_order, "count points of order exactly n");

    CLI::App* prp_cmd = app.add_subcommand("prp", "polar rational polygon toolkit");
    std::string prp_action, terms_arg;
    long gen_n = 0, gen_p = 0;
    bool vertices = false;
    std::string prp_format = "json";
    prp_cmd->add_option("action", prp_action, "generate | normalize | decompose")->required();
    prp_cmd->add_option("--n", gen_n, "level for generate");
    prp_cmd->add_option("--p", gen_p, "prime for generate");
    prp_cmd->add_option("--terms", terms_arg, "comma list coeff@angle, e.g. '1@0,1@1/3,1@2/3'");
    prp_cmd->add_flag("--vertices", vertices, "append a plain-text vertex list");
    prp_cmd->add_option("--format", prp_format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(in);
        if (count_cmd->parsed()) return run_count(in, from, to, exact_order);
        if (fit_cmd->parsed()) return run_fit(in);
        if (oracle_cmd->parsed()) return run_oracle(in, oracle_n, exact_order);
        if (prp_cmd->parsed())
            return run_prp(prp_action, gen_n, gen_p, terms_arg, vertices, prp_format);
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
