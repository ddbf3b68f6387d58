#include "stw/io.hpp"

#include <json.hpp>

#include "stw/errors.hpp"
#include "stw/parse.hpp"

namespace stw::io {

using nlohmann::json;

fpmod::Presentation presentation_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::exception& e) {
        throw DomainError(std::string("invalid presentation JSON: ") + e.what());
    }
    fpmod::Presentation p;
    try {
        p.algebra = fpmod::algebra_from_name(j.at("algebra").get<std::string>());
        for (const auto& g : j.at("generators"))
            p.generators.push_back(
                {g.at("name").get<std::string>(), g.at("degree").get<int>()});
        for (const auto& rel : j.value("relations", json::array())) {
            fpmod::Relation r;
            for (const auto& t : rel) {
                const std::string coef = t.at("coef").get<std::string>();
                const auto ast = parse::parse(coef);
                fpmod::AlgElem e = fpmod::is_twisted(p.algebra)
                                       ? fpmod::AlgElem(parse::eval_twisted(*ast))
                                       : fpmod::AlgElem(parse::eval_steenrod(*ast));
                r.push_back({std::move(e), t.at("gen").get<std::string>()});
            }
            p.relations.push_back(std::move(r));
        }
    }
    catch (const json::exception& e) {
        throw DomainError(std::string("invalid presentation JSON: ") + e.what());
    }
    p.validate();
    return p;
}

std::string presentation_to_json(const fpmod::Presentation& p)
{
    json j;
    j["algebra"] = fpmod::algebra_name(p.algebra);
    j["generators"] = json::array();
    for (const auto& g : p.generators)
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    j["relations"] = json::array();
    for (const auto& r : p.relations) {
        json jr = json::array();
        for (const auto& t : r)
            jr.push_back({{"coef", fpmod::render(t.coef)}, {"gen", t.gen}});
        j["relations"].push_back(std::move(jr));
    }
    return j.dump(2);
}

namespace {

    json tables_json(const fpmod::Realization& r)
    {
        json tables = json::object();
        for (const auto& [name, theta] : r.action_generators()) {
            const int tdeg = *fpmod::elem_degree(theta);
            json per_degree = json::array();
            for (int d = 0; d + tdeg <= r.max_degree(); ++d) {
                const f2::BitMatrix m = r.action_matrix(theta, d);
                json rows = json::array();
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    std::string bits;
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        bits += m.get(i, c) ? '1' : '0';
                    rows.push_back(bits);
                }
                per_degree.push_back({{"degree", d},
                                      {"rows", m.rows()},
                                      {"cols", m.cols()},
                                      {"matrix", rows}});
            }
            tables[name] = std::move(per_degree);
        }
        return tables;
    }

}  // namespace

std::string realization_to_json(const fpmod::Realization& r, bool include_tables)
{
    json j;
    j["algebra"] = fpmod::algebra_name(r.presentation().algebra);
    j["max_degree"] = r.max_degree();
    j["generators"] = json::array();
    for (const auto& g : r.presentation().generators)
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    j["dims"] = r.poincare().dims();
    if (include_tables) {
        json basis = json::array();
        for (int d = 0; d <= r.max_degree(); ++d)
            basis.push_back(r.basis_expressions(d));
        j["basis"] = std::move(basis);
        j["tables"] = tables_json(r);
    }
    return j.dump(2);
}

std::string realization_to_text(const fpmod::Realization& r, bool include_tables)
{
    std::string out = "algebra: " + fpmod::algebra_name(r.presentation().algebra) + "\n";
    out += "dims: " + r.poincare().str() + "\n";
    if (include_tables) {
        for (int d = 0; d <= r.max_degree(); ++d) {
            out += "degree " + std::to_string(d) + ":\n";
            for (const auto& b : r.basis_expressions(d))
                out += "  " + b + "\n";
        }
    }
    return out;
}

namespace {

    json report_json_value(const theorems::CheckReport& r)
    {
        json j;
        j["check"] = r.check;
        j["max_degree"] = r.max_degree;
        j["status"] = theorems::status_name(r.status);
        j["ledger"] = json::array();
        for (const auto& row : r.ledger)
            j["ledger"].push_back({{"degree", row.degree}, {"lhs", row.lhs}, {"rhs", row.rhs}});
        j["ms"] = r.ms;
        j["notes"] = r.notes;
        return j;
    }

}  // namespace

std::string report_to_json(const theorems::CheckReport& r)
{
    return report_json_value(r).dump(2);
}

std::string report_to_text(const theorems::CheckReport& r, bool verbose)
{
    std::string out = "[" + theorems::status_name(r.status) + "] " + r.check +
                      " (max degree " + std::to_string(r.max_degree) + ", " +
                      std::to_string(r.ms) + " ms)\n";
    if (verbose || r.status == theorems::Status::Fail) {
        for (const auto& row : r.ledger) {
            out += "  degree " + std::to_string(row.degree) + ": " + std::to_string(row.lhs) +
                   " vs " + std::to_string(row.rhs) +
                   (row.lhs == row.rhs ? "" : "   <-- mismatch") + "\n";
        }
    }
    for (const auto& note : r.notes)
        out += "  " + note + "\n";
    return out;
}

std::string census_to_json(const std::vector<theorems::CensusEntry>& entries,
                           const theorems::CheckReport& r)
{
    json j = report_json_value(r);
    j["entries"] = json::array();
    for (const auto& e : entries) {
        j["entries"].push_back({{"J", e.J},
                                {"shift", e.nJ},
                                {"kind", theorems::kind_name(e.kind)},
                                {"multiplicity", e.multiplicity}});
    }
    return j.dump(2);
}

std::string census_to_text(const std::vector<theorems::CensusEntry>& entries,
                           const theorems::CheckReport& r)
{
    std::string out;
    for (const auto& e : entries) {
        std::string jstr = "(";
        for (std::size_t i = 0; i < e.J.size(); ++i) {
            if (i)
                jstr += ",";
            jstr += std::to_string(e.J[i]);
        }
        jstr += ")";
        out += "J = " + jstr + "  shift " + std::to_string(e.nJ) + "  " +
               theorems::kind_name(e.kind);
        if (e.kind == theorems::CensusEntry::Kind::Free)
            out += "  multiplicity " + std::to_string(e.multiplicity);
        out += "\n";
    }
    out += report_to_text(r, false);
    return out;
}

}  // namespace stw::io
