#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "stw/errors.hpp"
#include "stw/io.hpp"
#include "stw/parse.hpp"
#include "stw/theorems.hpp"

namespace {

using stw::theorems::CheckReport;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

bool has_bar(const std::string& s)
{
    return s.find('|') != std::string::npos;
}

stw::steenrod::Elem parse_steenrod(const std::string& s)
{
    return stw::parse::eval_steenrod(*stw::parse::parse(s));
}

stw::twisted::Elem parse_twisted(const std::string& s)
{
    return stw::parse::eval_twisted(*stw::parse::parse(s));
}

void emit(const std::string& format, const std::string& text, const nlohmann::json& j)
{
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int run_verify(const std::string& name, int max_degree, int vars, const std::string& format)
{
    using namespace stw::theorems;
    const std::map<std::string, std::function<CheckReport()>> checks = {
        {"appendix", [&] { return check_appendix(); }},
        {"commutation", [&] { return check_commutation(std::min(max_degree, 10)); }},
        {"hopf", [&] { return check_hopf(); }},
        {"inverse", [&] { return check_inverse(max_degree); }},
        {"freeness", [&] { return check_freeness(max_degree); }},
        {"k2o", [&] { return check_k2o(max_degree); }},
        {"k2o2", [&] { return check_k2o2(max_degree); }},
        {"sq3kappa", [&] { return check_sq3_kappa10(); }},
        {"thom",
         [&] {
             const int deg = std::min(max_degree, 12);
             return check_thom_twist(deg, std::max(vars, deg));
         }},
        {"census", [&] { return abp_census(std::min(max_degree, 31)).second; }},
    };

    std::vector<CheckReport> reports;
    if (name == "all") {
        for (const auto& [n, fn] : checks)
            reports.push_back(fn());  // std::map iterates sorted by name
    }
    else {
        auto it = checks.find(name);
        if (it == checks.end()) {
            std::cerr << "unknown check: " << name << "\n";
            return kExitUsage;
        }
        reports.push_back(it->second());
    }

    bool any_fail = false;
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) {
            out.push_back(nlohmann::json::parse(stw::io::report_to_json(r)));
            any_fail = any_fail || r.failed();
        }
        std::cout << (reports.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
    }
    else {
        for (const auto& r : reports) {
            std::cout << stw::io::report_to_text(r, reports.size() == 1);
            any_fail = any_fail || r.failed();
        }
    }
    return any_fail ? kExitVerifyFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Computer algebra for the mod-2 Steenrod algebra, its twisted extension by "
                 "H*(K(Z/2,1) x K(Z/2,2)), and graded modules over both"};
    app.require_subcommand(1);
    app.fallthrough();

    int max_degree = 16;
    int vars = -1;  // defaults to max_degree
    std::string format = "text";
    app.add_option("--max-degree", max_degree, "degree bound for truncated computations")
        ->capture_default_str();
    app.add_option("--vars", vars, "Stiefel-Whitney variable bound (default: max-degree)");
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string expr, expr2, algebra, which, path, check_name;
    int degree = 0;
    bool tables = false;

    auto* adem = app.add_subcommand("adem", "normalize a Sq word to admissible form");
    adem->add_option("expr", expr)->required();
    auto* mul = app.add_subcommand("mul", "multiply two elements (plain or twisted)");
    mul->add_option("lhs", expr)->required();
    mul->add_option("rhs", expr2)->required();
    auto* coprod = app.add_subcommand("coprod", "coproduct of an element");
    coprod->add_option("expr", expr)->required();
    auto* phi = app.add_subcommand("phi", "twisting embedding of an A(1) element");
    phi->add_option("expr", expr)->required();
    auto* psi = app.add_subcommand("psi", "inverse twisting on a twisted A(1) element");
    psi->add_option("expr", expr)->required();
    auto* basis = app.add_subcommand("basis", "basis of an algebra in one degree");
    basis->add_option("algebra", algebra, "A | A1 | twisted-A | twisted-A1")->required();
    basis->add_option("degree", degree)->required();
    auto* series_cmd = app.add_subcommand("series", "dimension series of a standard algebra");
    series_cmd
        ->add_option("which", which, "A | A1 | twisted-A | twisted-A1 | K | BO | BSpin | ko | joker")
        ->required();
    auto* realize = app.add_subcommand("realize", "realize a module presentation from JSON");
    realize->add_option("path", path)->required()->check(CLI::ExistingFile);
    realize->add_flag("--tables", tables, "include basis expressions and action tables");
    auto* verify = app.add_subcommand("verify", "run a named verification");
    verify
        ->add_option("name", check_name,
                     "appendix | commutation | hopf | inverse | freeness | k2o | k2o2 | "
                     "sq3kappa | thom | census | all")
        ->required();
    auto* census = app.add_subcommand("census", "splitting census with summand table");
    auto* conjecture = app.add_subcommand("conjecture", "series for the conjectural quotients");

    CLI11_PARSE(app, argc, argv);
    if (vars < 0)
        vars = max_degree;

    try {
        if (adem->parsed()) {
            const auto e = parse_steenrod(expr);
            emit(format, stw::steenrod::render(e),
                 {{"input", expr}, {"result", stw::steenrod::render(e)}});
        }
        else if (mul->parsed()) {
            if (has_bar(expr) || has_bar(expr2)) {
                const auto p = stw::twisted::mul(parse_twisted(expr), parse_twisted(expr2));
                emit(format, stw::twisted::render(p), {{"result", stw::twisted::render(p)}});
            }
            else {
                const auto p = stw::steenrod::mul(parse_steenrod(expr), parse_steenrod(expr2));
                emit(format, stw::steenrod::render(p), {{"result", stw::steenrod::render(p)}});
            }
        }
        else if (coprod->parsed()) {
            if (has_bar(expr)) {
                const auto d = stw::twisted::coproduct(parse_twisted(expr));
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& [a, b] : d)
                    pairs.push_back({stw::twisted::render(a), stw::twisted::render(b)});
                emit(format, stw::twisted::render(d), {{"pairs", pairs}});
            }
            else {
                const auto d = stw::steenrod::coproduct(parse_steenrod(expr));
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& [a, b] : d)
                    pairs.push_back({stw::steenrod::render(a), stw::steenrod::render(b)});
                emit(format, stw::steenrod::render(d), {{"pairs", pairs}});
            }
        }
        else if (phi->parsed()) {
            const auto img = stw::twisted::phi(parse_steenrod(expr));
            emit(format, stw::twisted::render(img), {{"result", stw::twisted::render(img)}});
        }
        else if (psi->parsed()) {
            const auto img = stw::twisted::psi(parse_twisted(expr));
            emit(format, stw::twisted::render(img), {{"result", stw::twisted::render(img)}});
        }
        else if (basis->parsed()) {
            std::vector<std::string> lines;
            if (algebra == "A" || algebra == "full" || algebra == "FullA") {
                for (const auto& m : stw::steenrod::admissible_basis(degree))
                    lines.push_back(stw::steenrod::render(m));
            }
            else if (algebra == "A1") {
                for (const auto& e : stw::steenrod::a1_basis(degree))
                    lines.push_back(stw::steenrod::render(e));
            }
            else if (algebra == "twisted-A" || algebra == "FullTwisted") {
                for (const auto& t : stw::twisted::full_basis(degree))
                    lines.push_back(stw::twisted::render(t));
            }
            else if (algebra == "twisted-A1" || algebra == "TwistedA1") {
                for (const auto& e :
                     stw::twisted::basis(stw::twisted::TwistedSubalgebraId::TwistedA1, degree))
                    lines.push_back(stw::twisted::render(e));
            }
            else {
                std::cerr << "unknown algebra: " << algebra << "\n";
                return kExitUsage;
            }
            std::string text;
            for (const auto& l : lines)
                text += l + "\n";
            if (!text.empty())
                text.pop_back();
            emit(format, text, {{"algebra", algebra}, {"degree", degree}, {"basis", lines}});
        }
        else if (series_cmd->parsed()) {
            stw::series::PoincareSeries s;
            using stw::theorems::ps_a;
            using stw::theorems::ps_a1;
            using stw::theorems::ps_joker;
            using stw::theorems::ps_k;
            using stw::theorems::ps_ko;
            using stw::theorems::ps_twisted;
            if (which == "A")
                s = ps_a(max_degree);
            else if (which == "A1")
                s = ps_a1(max_degree);
            else if (which == "twisted-A")
                s = ps_twisted(max_degree);
            else if (which == "twisted-A1")
                s = stw::twisted::dimension_series(
                    stw::twisted::TwistedSubalgebraId::TwistedA1, max_degree);
            else if (which == "K")
                s = ps_k(max_degree);
            else if (which == "BO")
                s = stw::unstable::dimension_series(
                    stw::unstable::Ambient::BO(std::max(vars, max_degree)), max_degree);
            else if (which == "BSpin")
                s = stw::unstable::bspin_series(max_degree);
            else if (which == "ko")
                s = ps_ko(max_degree);
            else if (which == "joker")
                s = ps_joker(std::max(max_degree, 4)).truncated(max_degree);
            else {
                std::cerr << "unknown series: " << which << "\n";
                return kExitUsage;
            }
            emit(format, s.str(), {{"which", which}, {"series", s.dims()}});
        }
        else if (realize->parsed()) {
            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            const auto pres = stw::io::presentation_from_json(buf.str());
            const stw::fpmod::Realization r(pres, max_degree);
            if (format == "json")
                std::cout << stw::io::realization_to_json(r, tables) << "\n";
            else
                std::cout << stw::io::realization_to_text(r, tables);
        }
        else if (verify->parsed()) {
            return run_verify(check_name, max_degree, vars, format);
        }
        else if (census->parsed()) {
            const auto [entries, report] = stw::theorems::abp_census(std::min(max_degree, 31));
            if (format == "json")
                std::cout << stw::io::census_to_json(entries, report) << "\n";
            else
                std::cout << stw::io::census_to_text(entries, report);
            return report.failed() ? kExitVerifyFail : kExitPass;
        }
        else if (conjecture->parsed()) {
            const auto report = stw::theorems::explore_conjecture(max_degree);
            if (format == "json")
                std::cout << stw::io::report_to_json(report) << "\n";
            else
                std::cout << stw::io::report_to_text(report, true);
        }
    }
    catch (const stw::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const stw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitPass;
}
