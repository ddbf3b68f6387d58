// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stw/fpmod.hpp"
#include "stw/series.hpp"
#include "stw/theorems.hpp"
#include "stw/twisted.hpp"
#include "stw/unstable.hpp"

namespace {

using Clock = std::chrono::steady_clock;
namespace sq = stw::steenrod;
namespace tw = stw::twisted;
namespace un = stw::unstable;
namespace th = stw::theorems;

struct Criterion {
    int number;
    std::string title;
    double time_budget_ms;  // 0 = no budget
    std::function<bool(std::string&)> run;
};

sq::Elem sqe(int n)
{
    return sq::Elem::mono({n});
}

bool check_report(const th::CheckReport& r, std::string& detail)
{
    if (r.status == th::Status::Fail) {
        for (const auto& note : r.notes)
            if (note.find("FAILED") != std::string::npos)
                detail += " " + note;
        for (const auto& row : r.ledger)
            if (row.lhs != row.rhs)
                detail += " degree " + std::to_string(row.degree) + ": " +
                          std::to_string(row.lhs) + " != " + std::to_string(row.rhs) + ";";
        return false;
    }
    return true;
}

std::vector<std::int64_t> dual_poly_dims(int max_degree)
{
    std::vector<std::int64_t> dp(max_degree + 1, 0);
    dp[0] = 1;
    for (int gen = 1; (1 << gen) - 1 <= max_degree; ++gen) {
        const int d = (1 << gen) - 1;
        for (int j = d; j <= max_degree; ++j)
            dp[j] += dp[j - d];
    }
    return dp;
}

bool criterion_appendix(std::string& detail)
{
    const auto r = th::check_appendix();
    if (!check_report(r, detail))
        return false;
    // The six-term normal form must be reported verbatim.
    const tw::Elem expected = tw::mul(tw::phi(sqe(2)), tw::phi(sqe(2)));
    if (expected.terms().size() != 6) {
        detail = "normal form does not have six terms";
        return false;
    }
    return true;
}

bool criterion_hopf(std::string& detail)
{
    return check_report(th::check_hopf(), detail);
}

bool criterion_inverse(std::string& detail)
{
    return check_report(th::check_inverse(20), detail);
}

bool criterion_commutation(std::string& detail)
{
    return check_report(th::check_commutation(10), detail);
}

bool criterion_freeness(std::string& detail)
{
    return check_report(th::check_freeness(24), detail);
}

bool criterion_k2o(std::string& detail)
{
    return check_report(th::check_k2o(20), detail);
}

bool criterion_k2o2(std::string& detail)
{
    return check_report(th::check_k2o2(20), detail) &&
           check_report(th::check_sq3_kappa10(), detail);
}

bool criterion_thom(std::string& detail)
{
    return check_report(th::check_thom_twist(12, 12), detail);
}

bool criterion_census(std::string& detail)
{
    return check_report(th::abp_census(20).second, detail);
}

bool criterion_oracles(std::string& detail)
{
    const auto a1 = th::ps_a1(10);
    const auto dual = stw::series::product(stw::series::PoincareSeries({1, 1, 1, 1, 0, 0, 0}),
                                           stw::series::PoincareSeries({1, 0, 0, 1, 0, 0, 0}));
    if (!a1.agrees_with(stw::series::shift(dual, 0), 6) || a1.at(7) != 0 || a1.at(8) != 0) {
        detail = "A(1) dimension profile mismatch";
        return false;
    }

    const auto a = th::ps_a(20);
    const auto oracle = dual_poly_dims(20);
    for (int d = 0; d <= 20; ++d)
        if (a.at(d) != oracle[d]) {
            detail = "Steenrod dims differ from the dual polynomial count in degree " +
                     std::to_string(d);
            return false;
        }

    if (!(th::ps_joker(6) == stw::series::PoincareSeries({1, 1, 1, 1, 1, 0, 0}))) {
        detail = "joker dims are not (1,1,1,1,1)";
        return false;
    }
    return true;
}

bool criterion_properties(std::string& detail)
{
    std::mt19937 rng(987654321);

    // Adem normal-form soundness on random words.
    for (int trial = 0; trial < 300; ++trial) {
        sq::Word w;
        const int len = 1 + rng() % 4;
        for (int i = 0; i < len; ++i)
            w.push_back(1 + rng() % 8);
        const sq::Elem nf = sq::adem_normalize(w);
        for (const auto& m : nf.terms())
            if (!sq::is_admissible(m)) {
                detail = "inadmissible monomial in a normal form";
                return false;
            }
    }

    // Sampled associativity in the Steenrod algebra.
    std::vector<sq::Mono> monos;
    for (int d = 0; d <= 8; ++d)
        for (const auto& m : sq::admissible_basis(d))
            monos.push_back(m);
    for (int trial = 0; trial < 400; ++trial) {
        const auto& a = monos[rng() % monos.size()];
        const auto& b = monos[rng() % monos.size()];
        const auto& c = monos[rng() % monos.size()];
        if (sq::degree(a) + sq::degree(b) + sq::degree(c) > 12)
            continue;
        if (!(sq::mul(sq::mul(a, b), sq::Elem::mono(c)) ==
              sq::mul(sq::Elem::mono(a), sq::mul(b, c)))) {
            detail = "associativity failure";
            return false;
        }
    }

    // Sampled coassociativity.
    for (const auto& m : monos) {
        if (sq::degree(m) > 10)
            continue;
        std::set<std::vector<sq::Mono>> lhs, rhs;
        auto toggle = [](std::set<std::vector<sq::Mono>>& s, std::vector<sq::Mono> k) {
            auto it = s.find(k);
            if (it != s.end())
                s.erase(it);
            else
                s.insert(std::move(k));
        };
        for (const auto& [x, y] : sq::coproduct(m)) {
            for (const auto& [x1, x2] : sq::coproduct(x))
                toggle(lhs, {x1, x2, y});
            for (const auto& [y1, y2] : sq::coproduct(y))
                toggle(rhs, {x, y1, y2});
        }
        if (lhs != rhs) {
            detail = "coassociativity failure";
            return false;
        }
    }

    // Unstable axioms for all generators of degree <= 12.
    for (const un::Ambient amb : {un::Ambient::K(), un::Ambient::BO(14)}) {
        for (const auto& g : un::generators_up_to(amb, 12)) {
            const un::Elem x = un::Elem::gen(amb, g);
            if (!(un::sq_action(g.degree(), x) == un::mul(x, x)) ||
                !un::sq_action(g.degree() + 1, x).is_zero()) {
                detail = "unstable axiom failure on " + un::render(g);
                return false;
            }
        }
    }

    // Relation soundness in the realizations used by the acceptance checks.
    using stw::fpmod::AlgElem;
    std::vector<stw::fpmod::Presentation> ps;
    {
        stw::fpmod::Presentation p;
        p.algebra = stw::fpmod::AlgebraKind::FullTwisted;
        p.generators.push_back({"g", 0});
        p.relations.push_back({{AlgElem(tw::phi(sqe(1))), "g"}});
        p.relations.push_back({{AlgElem(tw::phi(sqe(2))), "g"}});
        ps.push_back(p);
    }
    {
        stw::fpmod::Presentation p;
        p.algebra = stw::fpmod::AlgebraKind::A1;
        p.generators.push_back({"g", 0});
        p.relations.push_back({{AlgElem(sqe(3)), "g"}});
        ps.push_back(p);
    }
    for (const auto& p : ps) {
        stw::fpmod::Realization r(p, 10);
        for (const auto& rel : p.relations) {
            if (!r.class_of(rel).second.is_zero()) {
                detail = "relation image nonzero in a realization";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main()
{
    const auto suite_start = Clock::now();
    const std::vector<Criterion> criteria = {
        {1, "appendix reproduction (phi relations, six-term normal form)", 1000.0,
         criterion_appendix},
        {2, "Hopf property (comultiplicativity and 64 product pairs)", 5000.0, criterion_hopf},
        {3, "inverse pair phi_ext / psi through degree 20", 0.0, criterion_inverse},
        {4, "commutation identity through degree 10", 0.0, criterion_commutation},
        {5, "Milnor-Moore freeness through degree 24", 60000.0, criterion_freeness},
        {6, "k2o series identity through degree 20", 60000.0, criterion_k2o},
        {7, "k2o<2> series identity and Sq3 kappa10 vanishing", 0.0, criterion_k2o2},
        {8, "Thom twist through degree 12", 0.0, criterion_thom},
        {9, "splitting census through degree 20", 300000.0, criterion_census},
        {10, "dimension oracles (A(1), Steenrod algebra, joker)", 0.0, criterion_oracles},
        {11, "structural property suites", 0.0, criterion_properties},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        }
        catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ok && c.time_budget_ms > 0 && ms > c.time_budget_ms) {
            ok = false;
            detail = "exceeded time budget of " + std::to_string(c.time_budget_ms) + " ms";
        }
        std::printf("%s  criterion %2d: %s (%.0f ms)%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), ms, detail.empty() ? "" : ("  [" + detail + "]").c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }

    const double total =
        std::chrono::duration<double, std::milli>(Clock::now() - suite_start).count();
    if (total > 600000.0) {
        std::printf("FAIL  full suite exceeded 10 minutes (%.0f ms)\n", total);
        ++failures;
    }
    std::printf("%d/%zu criteria passed (total %.0f ms)\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures == 0 ? 0 : 1;
}
