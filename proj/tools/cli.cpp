#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orderpoly/bernoulli.hpp"
#include "orderpoly/eulerian.hpp"
#include "orderpoly/framework.hpp"
#include "orderpoly/omega_graph.hpp"
#include "orderpoly/order_poly.hpp"
#include "orderpoly/poset_io.hpp"
#include "orderpoly/unlabeled.hpp"
#include "orderpoly/validation.hpp"

namespace orderpoly::cli {

using nlohmann::json;

json to_json(const UniPoly& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) {
        coeffs.push_back(to_fraction_string(c));
    }
    return {{"variable", p.variable()}, {"coefficients", coeffs}, {"rendered", p.to_string()}};
}

json to_json(const LocalizedRatio& r)
{
    return {{"numerator", to_json(r.numerator())}, {"pole_order", r.pole_order()}, {"rendered", r.to_string()}};
}

json to_json(const QSym& f)
{
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json exps = json::array();
        for (auto x : e) {
            exps.push_back(static_cast<unsigned>(x));
        }
        terms.push_back({{"exponents", exps}, {"coefficient", to_fraction_string(c)}});
    }
    return {{"variables", f.variable_count()}, {"terms", terms}, {"rendered", f.to_string()}};
}

json poset_json(const LabeledPoset& lp)
{
    json covers = json::array();
    for (auto [x, y] : lp.poset().covers()) {
        covers.push_back({x, y});
    }
    return {{"elements", lp.size()}, {"labels", lp.omega()}, {"covers", covers}};
}

UniPoly polynomial_from_json(const json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coefficients")) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return UniPoly(std::move(coeffs), j.value("variable", std::string("t")));
}

namespace {

json to_json(const CarrierValue& v)
{
    return std::visit([](const auto& x) { return cli::to_json(x); }, v);
}

json integers_json(const std::vector<Integer>& v)
{
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(x.get_str());
    }
    return out;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LabeledPoset load_poset(const std::string& path)
{
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw InputError("cannot read '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return parse_poset_file(buffer.str());
}

json metadata(const LabeledPoset& lp)
{
    const OmegaGraph g = build_omega_graph(lp);
    return {{"size", lp.size()},
            {"ideals", g.vertex_count()},
            {"omega_natural_ideals", omega_natural_ideals(lp).size()},
            {"path_counts", integers_json(count_paths(g).c)}};
}

/// What a command produced: the plain-text rendering and the JSON result.
struct Output {
    std::string text;
    json result;
};

struct Settings {
    std::string poset_path;
    bool json_output = false;
    bool timing = false;
    bool dot = false;
    std::string route;
    std::string unlabeled;
    std::string spec;
    unsigned n = 0;
    std::size_t vars = 0;
    std::size_t max_size = 5;
};

Output cmd_ideals(const LabeledPoset& lp)
{
    const auto natural = omega_natural_ideals(lp);
    std::ostringstream text;
    json list = json::array();
    for (ElementSet s : enumerate_ideals(lp.poset())) {
        const bool omega_natural = std::binary_search(natural.begin(), natural.end(), s);
        text << s.to_string() << (omega_natural ? "  omega-natural" : "") << '\n';
        list.push_back({{"elements", s.members()}, {"omega_natural", omega_natural}});
    }
    return {text.str(), {{"ideals", list}}};
}

Output cmd_omega_graph(const LabeledPoset& lp, bool dot)
{
    const OmegaGraph g = build_omega_graph(lp);
    json arcs = json::array();
    std::ostringstream text;
    if (dot) {
        text << g.to_dot();
    } else {
        text << "vertices: " << g.vertex_count() << "\narcs: " << g.arc_count() << '\n';
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (auto j : g.successors(i)) {
            arcs.push_back({i, j});
            if (!dot) {
                text << g.ideals()[i].to_string() << " -> " << g.ideals()[j].to_string() << '\n';
            }
        }
    }
    json vertices = json::array();
    for (ElementSet s : g.ideals()) {
        vertices.push_back(s.members());
    }
    return {text.str(), {{"vertices", vertices}, {"arcs", arcs}}};
}

Output cmd_order_poly(const LabeledPoset& lp, const Settings& s)
{
    UniPoly p;
    if (!s.unlabeled.empty()) {
        if (s.unlabeled == "weak") {
            p = order_poly_unlabeled(lp.poset());
        } else if (s.unlabeled == "strict") {
            p = strict_order_poly(lp.poset());
        } else {
            const UniPoly signed_poly = signed_order_poly_nabla(lp.poset());
            p = lp.size() % 2 == 0 ? signed_poly : -signed_poly;
        }
    } else if (s.route == "matrix") {
        p = order_poly_matrix(lp);
    } else if (s.route == "oracle") {
        try {
            p = order_poly_bruteforce(lp);
        } catch (const OracleBoundError& e) {
            throw UsageError(std::string(e.what()) + " (raise POSET_ORACLE_MAX or pick another route)");
        }
    } else {
        p = order_poly_recursive(lp);
    }
    return {p.to_string() + "\n", {{"polynomial", to_json(p)}}};
}

Output cmd_eulerian(const LabeledPoset& lp, const std::string& route)
{
    EulerianPair pair;
    if (route == "chains") {
        pair = eulerian_from_chains(lp);
    } else {
        pair = {eulerian_recursive(lp), e_tilde_recursive(lp)};
    }
    return {pair.e.to_string() + "\n", {{"e", to_json(pair.e)}, {"e_tilde", to_json(pair.e_tilde)}}};
}

Output cmd_phi(const LabeledPoset& lp)
{
    const Rational v = phi(lp);
    return {to_display_string(v) + "\n", {{"phi", to_fraction_string(v)}}};
}

Output cmd_bernoulli(unsigned n, const std::string& route)
{
    Rational b;
    if (route == "shrub") {
        if (n > 18) {
            throw UsageError("the shrub route builds 2^n + 1 ideals; use n <= 18");
        }
        b = bernoulli_from_shrub(n);
    } else if (route == "multinomial") {
        b = bernoulli_multinomial(n);
    } else {
        b = bernoulli_numbers_oracle(n).b[n];
    }
    return {to_display_string(b) + "\n", {{"n", n}, {"b", to_fraction_string(b)}}};
}

Output cmd_qsym(const LabeledPoset& lp, std::size_t vars, const std::string& route)
{
    QSym k;
    if (route == "recursive") {
        k = qsym_recursive(lp, vars);
    } else {
        if (std::pow(static_cast<double>(vars), static_cast<double>(lp.size())) > 5e7) {
            throw UsageError("the direct route would enumerate more than 5e7 maps; use --route recursive");
        }
        k = qsym_direct(lp, vars);
    }
    return {k.to_string() + "\n", {{"qsym", to_json(k)}}};
}

Output cmd_invariant(const LabeledPoset& lp, const std::string& spec_text)
{
    InvariantSpec spec;
    try {
        spec = parse_invariant_spec(spec_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const CarrierValue v = run_invariant(spec, lp);
    return {to_string(v) + "\n", {{"spec", spec.name}, {"value", to_json(v)}}};
}

int cmd_check(const Settings& s, std::ostream& out)
{
    const auto results = run_check_suite(s.max_size);
    bool all = true;
    json rows = json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        all = all && r.passed;
        json row = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
        if (!r.detail.empty()) {
            row["detail"] = r.detail;
        }
        if (s.timing) {
            row["seconds"] = r.seconds;
        }
        rows.push_back(row);
        text << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(38)
             << r.name << std::right << std::setw(7) << r.cases << " cases";
        if (s.timing) {
            text << "  " << std::fixed << std::setprecision(2) << r.seconds << " s";
        }
        text << '\n';
        if (!r.detail.empty()) {
            text << "       " << r.detail << '\n';
        }
    }
    text << (all ? "all checks passed" : "some checks FAILED") << '\n';
    if (s.json_output) {
        out << json{{"command", "check"}, {"max_size", s.max_size}, {"passed", all}, {"criteria", rows}}.dump(2)
            << '\n';
    } else {
        out << text.str();
    }
    return all ? kOk : kInvariantViolation;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact order polynomials, Eulerian polynomials and related invariants of labeled posets",
                 "orderpoly"};
    app.require_subcommand(1);
    Settings s;
    app.add_flag("--json", s.json_output, "Print a JSON document instead of plain text");
    app.add_flag("--timing", s.timing, "Include wall-clock timing in the output");

    const auto with_poset = [&](CLI::App* sub) {
        sub->add_option("poset", s.poset_path, "Poset file ('-' reads standard input)")->required();
        sub->fallthrough();
        return sub;
    };

    auto* ideals = with_poset(app.add_subcommand("ideals", "List order ideals, marking the omega-natural ones"));
    auto* graph = with_poset(app.add_subcommand("omega-graph", "Print the omega-graph"));
    graph->add_flag("--dot", s.dot, "Emit Graphviz DOT");
    auto* order = with_poset(app.add_subcommand("order-poly", "Order polynomial"));
    order->add_option("--route", s.route, "Computation route")
        ->check(CLI::IsMember({"matrix", "recursive", "oracle"}))
        ->default_str("recursive");
    order->add_option("--unlabeled", s.unlabeled, "Ignore labels: weak, strict or the nabla route to the weak one")
        ->check(CLI::IsMember({"weak", "strict", "nabla"}));
    auto* euler = with_poset(app.add_subcommand("eulerian", "Eulerian polynomial e(P, omega; lambda)"));
    euler->add_option("--route", s.route, "Computation route")
        ->check(CLI::IsMember({"chains", "recursive"}))
        ->default_str("recursive");
    auto* phi_cmd = with_poset(app.add_subcommand("phi", "Coefficient of t in the order polynomial"));
    auto* bern = app.add_subcommand("bernoulli", "Bernoulli number b_n");
    bern->fallthrough();
    bern->add_option("--n", s.n, "Index n >= 1")->required()->check(CLI::Range(1U, 64U));
    bern->add_option("--route", s.route, "Computation route")
        ->check(CLI::IsMember({"oracle", "shrub", "multinomial"}))
        ->default_str("oracle");
    auto* qsym = with_poset(app.add_subcommand("qsym", "Quasi-symmetric generating function K in N variables"));
    qsym->add_option("--vars", s.vars, "Number of variables")->required()->check(CLI::Range(std::size_t{1}, std::size_t{32}));
    qsym->add_option("--route", s.route, "Computation route")
        ->check(CLI::IsMember({"direct", "recursive"}))
        ->default_str("direct");
    auto* inv = with_poset(app.add_subcommand("invariant", "Run a built-in recursive invariant"));
    inv->add_option("--spec", s.spec, "omega, etilde, eulerian or qsym:N")->required();
    auto* check = app.add_subcommand("check", "Run the cross-validation suite and print a pass/fail table");
    check->fallthrough();
    check->add_option("--max-size", s.max_size, "Largest catalog poset size")
        ->check(CLI::Range(std::size_t{1}, std::size_t{6}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (check->parsed()) {
            return cmd_check(s, out);
        }

        std::string command;
        Output result;
        std::optional<LabeledPoset> lp;
        if (bern->parsed()) {
            command = "bernoulli";
            result = cmd_bernoulli(s.n, s.route.empty() ? "oracle" : s.route);
        } else {
            lp = load_poset(s.poset_path);
            if (ideals->parsed()) {
                command = "ideals";
                result = cmd_ideals(*lp);
            } else if (graph->parsed()) {
                command = "omega-graph";
                result = cmd_omega_graph(*lp, s.dot);
            } else if (order->parsed()) {
                command = "order-poly";
                result = cmd_order_poly(*lp, s);
            } else if (euler->parsed()) {
                command = "eulerian";
                result = cmd_eulerian(*lp, s.route);
            } else if (phi_cmd->parsed()) {
                command = "phi";
                result = cmd_phi(*lp);
            } else if (qsym->parsed()) {
                command = "qsym";
                result = cmd_qsym(*lp, s.vars, s.route);
            } else if (inv->parsed()) {
                command = "invariant";
                result = cmd_invariant(*lp, s.spec);
            }
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        if (s.json_output) {
            json doc = {{"command", command}, {"result", result.result}};
            if (!s.route.empty()) {
                doc["route"] = s.route;
            }
            if (!s.unlabeled.empty()) {
                doc["unlabeled"] = s.unlabeled;
            }
            json meta = lp ? metadata(*lp) : json::object();
            if (s.timing) {
                meta["timing_ms"] = ms;
            }
            if (lp) {
                doc["poset"] = poset_json(*lp);
            }
            doc["metadata"] = meta;
            out << doc.dump(2) << '\n';
        } else {
            out << result.text;
            if (s.timing) {
                out << "time: " << std::fixed << std::setprecision(3) << ms << " ms\n";
            }
        }
        return kOk;
    } catch (const PosetParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const PosetError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInvariantViolation;
    }
}

} // namespace orderpoly::cli
