#include <doctest.h>

#include <random>

#include "stw/errors.hpp"
#include "stw/fpmod.hpp"
#include "stw/io.hpp"
#include "stw/unstable.hpp"

using namespace stw::fpmod;
using stw::DomainError;
namespace sq = stw::steenrod;
namespace tw = stw::twisted;
namespace un = stw::unstable;
namespace f2 = stw::f2;

namespace {

sq::Elem sqe(std::initializer_list<sq::Mono> monos)
{
    sq::Elem e;
    for (const auto& m : monos)
        e.toggle(m);
    return e;
}

Presentation cyclic(AlgebraKind kind, int degree, std::vector<AlgElem> rels)
{
    Presentation p;
    p.algebra = kind;
    p.generators.push_back({"g", degree});
    for (auto& r : rels)
        p.relations.push_back({RelTerm{std::move(r), "g"}});
    return p;
}

// Independent joker oracle: left ideal A(1)·Sq3 computed degreewise with
// plain Steenrod multiplication and row reduction, no fpmod machinery.
std::vector<std::int64_t> joker_dims_oracle(int max_degree)
{
    std::vector<std::int64_t> dims;
    for (int d = 0; d <= max_degree; ++d) {
        const auto& adm = sq::admissible_basis(d);
        f2::SpanSolver a1(adm.size()), ideal(adm.size());
        auto vec_of = [&](const sq::Elem& e) {
            f2::BitVector v(adm.size());
            for (auto c : sq::coords(e, d))
                v.set(c);
            return v;
        };
        for (const auto& e : sq::a1_basis(d))
            a1.add(vec_of(e));
        if (d >= 3)
            for (const auto& e : sq::a1_basis(d - 3))
                ideal.add(vec_of(sq::mul(e, sqe({{3}}))));
        dims.push_back(static_cast<std::int64_t>(a1.rank() - ideal.rank()));
    }
    return dims;
}

}  // namespace

TEST_CASE("the trivial module over A(1)")
{
    Realization r(cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{1}})), AlgElem(sqe({{2}}))}), 8);
    CHECK(r.poincare() == stw::series::PoincareSeries({1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("the joker against an independent degreewise oracle")
{
    Realization r(cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{3}}))}), 8);
    const auto oracle = joker_dims_oracle(8);
    CHECK(oracle == std::vector<std::int64_t>{1, 1, 1, 1, 1, 0, 0, 0, 0});
    CHECK(r.poincare().dims() == oracle);
}

TEST_CASE("A(1) as a module over itself")
{
    Realization r(cyclic(AlgebraKind::A1, 0, {}), 8);
    CHECK(r.poincare() == stw::series::PoincareSeries({1, 1, 1, 2, 1, 1, 1, 0, 0}));
}

TEST_CASE("induction along phi")
{
    const Presentation trivial =
        cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{1}})), AlgElem(sqe({{2}}))});
    const Presentation induced = induce_along_phi(trivial);
    CHECK(induced.algebra == AlgebraKind::FullTwisted);
    REQUIRE(induced.relations.size() == 2);
    CHECK(std::get<tw::Elem>(induced.relations[0][0].coef) == tw::phi(sqe({{1}})));
    CHECK(std::get<tw::Elem>(induced.relations[1][0].coef) == tw::phi(sqe({{2}})));

    // Induction of the free rank-1 module gives the whole twisted algebra.
    Realization free_tw(induce_along_phi(cyclic(AlgebraKind::A1, 0, {})), 8);
    CHECK(free_tw.poincare() ==
          tw::dimension_series(tw::TwistedSubalgebraId::FullTwisted, 8));

    CHECK_THROWS_AS(induce_along_phi(cyclic(AlgebraKind::FullA, 0, {})), DomainError);
}

TEST_CASE("the k2o quotient matches the product series in low degrees")
{
    Realization r(induce_along_phi(
                      cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{1}})), AlgElem(sqe({{2}}))})),
                  8);
    const auto lhs = r.poincare();
    const auto ko = stw::series::divide(sq::dimension_series(sq::AlgebraId::FullA, 8),
                                        sq::dimension_series(sq::AlgebraId::A1, 8));
    const auto rhs = stw::series::product(ko, un::dimension_series(un::Ambient::K(), 8));
    CHECK(lhs == rhs);
}

TEST_CASE("relation soundness in every realized degree")
{
    const std::vector<Presentation> presentations = {
        cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{3}}))}),
        cyclic(AlgebraKind::FullA, 0, {AlgElem(sqe({{1}})), AlgElem(sqe({{2}}))}),
        cyclic(AlgebraKind::FullTwisted, 0, {AlgElem(tw::phi(sqe({{1}}))),
                                             AlgElem(tw::phi(sqe({{2}})))}),
        cyclic(AlgebraKind::TwistedA1, 0, {AlgElem(tw::phi(sqe({{2}})))}),
    };
    for (const auto& p : presentations) {
        Realization r(p, 7);
        for (const auto& rel : p.relations) {
            const auto [deg, vec] = r.class_of(rel);
            CHECK(vec.is_zero());

            // The whole left ideal vanishes: multiply the relation by a few
            // algebra generators and reduce again.
            const AlgElem theta = is_twisted(p.algebra)
                                      ? AlgElem(tw::Elem::from_steenrod(sqe({{1}})))
                                      : AlgElem(sqe({{1}}));
            if (deg + 1 <= r.max_degree()) {
                std::vector<RelTerm> moved;
                for (const auto& t : rel) {
                    AlgElem c = is_twisted(p.algebra)
                                    ? AlgElem(tw::mul(std::get<tw::Elem>(theta),
                                                      std::get<tw::Elem>(t.coef)))
                                    : AlgElem(sq::mul(std::get<sq::Elem>(theta),
                                                      std::get<sq::Elem>(t.coef)));
                    if (!elem_is_zero(c))
                        moved.push_back({std::move(c), t.gen});
                }
                if (!moved.empty())
                    CHECK(r.class_of(moved).second.is_zero());
            }
        }
    }
}

TEST_CASE("action tables: Sq1 twice is zero and Adem composition holds")
{
    Realization r(cyclic(AlgebraKind::FullA, 0, {AlgElem(sqe({{3}}))}), 10);
    for (int d = 0; d + 2 <= 10; ++d) {
        const int n = r.dim(d);
        for (int i = 0; i < n; ++i) {
            f2::BitVector e(n);
            e.set(i);
            const auto sq1 = r.act(AlgElem(sqe({{1}})), d, e);
            CHECK(r.act(AlgElem(sqe({{1}})), d + 1, sq1).is_zero());
        }
    }

    // Composing generator tables letter by letter agrees with acting by the
    // Adem normal form of the word.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        sq::Word w;
        int wdeg = 0;
        while (true) {
            const int letter = 1 + rng() % 3;
            if (wdeg + letter > 6 || (w.size() >= 2 && rng() % 2))
                break;
            w.push_back(letter);
            wdeg += letter;
        }
        if (w.empty())
            continue;
        const int d = rng() % (10 - wdeg + 1);
        const int n = r.dim(d);
        if (n == 0)
            continue;
        f2::BitVector v(n);
        v.set(rng() % n);

        // Apply letters right to left, tracking the running degree.
        f2::BitVector stepwise = v;
        int at = d;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            stepwise = r.act(AlgElem(sqe({{*it}})), at, stepwise);
            at += *it;
        }
        f2::BitVector expected(r.dim(d + wdeg));
        const sq::Elem nf = sq::adem_normalize(w);
        if (!nf.is_zero())
            expected = r.act(AlgElem(nf), d, v);
        CHECK(stepwise == expected);
    }
}

TEST_CASE("kappa relations in the k2o realization")
{
    Realization r(cyclic(AlgebraKind::FullTwisted, 0,
                         {AlgElem(tw::phi(sqe({{1}}))), AlgElem(tw::phi(sqe({{2}})))}),
                  4);
    const auto kappa = r.generator_class("g");
    CHECK(kappa.popcount() == 1);

    tw::Elem i1;
    i1.toggle(tw::Term{un::Mon{{un::Gen::iota1(), 1}}, {}});
    tw::Elem i2;
    i2.toggle(tw::Term{un::Mon{{un::Gen::iota2(), 1}}, {}});
    CHECK(r.act(AlgElem(tw::Elem::from_steenrod(sqe({{1}}))), 0, kappa) ==
          r.act(AlgElem(i1), 0, kappa));
    CHECK(r.act(AlgElem(tw::Elem::from_steenrod(sqe({{2}}))), 0, kappa) ==
          r.act(AlgElem(i2), 0, kappa));
    // phi(Sq1) kappa = 0 and phi(Sq2) kappa = 0 as stated.
    CHECK(r.act(AlgElem(tw::phi(sqe({{1}}))), 0, kappa).is_zero());
    CHECK(r.act(AlgElem(tw::phi(sqe({{2}}))), 0, kappa).is_zero());
}

TEST_CASE("tensor with the trivial plain module is the identity")
{
    Realization unit_plain(cyclic(AlgebraKind::FullA, 0,
                                  {AlgElem(sqe({{1}})), AlgElem(sqe({{2}})), AlgElem(sqe({{4}}))}),
                           6);
    // Quotient by Sq1, Sq2, Sq4 is Z/2 in the realized range.
    CHECK(unit_plain.poincare() == stw::series::PoincareSeries({1, 0, 0, 0, 0, 0, 0}));

    Realization t(cyclic(AlgebraKind::FullTwisted, 0,
                         {AlgElem(tw::phi(sqe({{1}}))), AlgElem(tw::phi(sqe({{2}})))}),
                  6);
    TensorRealization prod(unit_plain, t, 6);
    CHECK(prod.poincare() == t.poincare());
}

TEST_CASE("the lambda10 x kappa tensor module")
{
    Presentation shifted;
    shifted.algebra = AlgebraKind::FullA;
    shifted.generators.push_back({"l", 10});
    shifted.relations.push_back({RelTerm{AlgElem(sqe({{3}})), "l"}});
    Realization plain(shifted, 13);

    Realization t(cyclic(AlgebraKind::FullTwisted, 0,
                         {AlgElem(tw::phi(sqe({{1}}))), AlgElem(tw::phi(sqe({{2}})))}),
                  3);
    TensorRealization prod(plain, t, 13);

    CHECK(prod.dim(10) == 1);
    const auto lambda = plain.generator_class("l");
    const auto kappa = t.generator_class("g");
    const auto lk = prod.embed(10, lambda, 0, kappa);
    CHECK(lk.popcount() == 1);

    // Cartan: (1 (x) Sq1)(l x k) = Sq1(l) x k + l x (1 (x) Sq1)k.
    const auto lhs = prod.act(tw::Elem::from_steenrod(sqe({{1}})), 10, lk);
    const auto rhs = prod.embed(11, plain.act(AlgElem(sqe({{1}})), 10, lambda), 0, kappa) ^
                     prod.embed(10, lambda, 1,
                                t.act(AlgElem(tw::Elem::from_steenrod(sqe({{1}}))), 0, kappa));
    CHECK(lhs == rhs);
}

TEST_CASE("basis expressions are deterministic and sorted")
{
    Realization r(cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{3}}))}), 4);
    Realization r2(cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{3}}))}), 4);
    for (int d = 0; d <= 4; ++d)
        CHECK(r.basis_expressions(d) == r2.basis_expressions(d));
    CHECK(r.basis_expressions(0) == std::vector<std::string>{"(1) g"});
}

TEST_CASE("presentation validation")
{
    Presentation p;
    p.algebra = AlgebraKind::A1;
    p.generators.push_back({"g", 0});
    p.relations.push_back({RelTerm{AlgElem(sqe({{1}})), "h"}});
    CHECK_THROWS_AS(p.validate(), DomainError);

    p.relations = {{RelTerm{AlgElem(sqe({{4}})), "g"}}};  // Sq4 not in A(1)
    CHECK_THROWS_AS(p.validate(), DomainError);

    p.relations = {{RelTerm{AlgElem(sqe({{1}})), "g"}, RelTerm{AlgElem(sqe({{2}})), "g"}}};
    CHECK_THROWS_AS(p.validate(), DomainError);  // mixed degree within one relation

    p.relations = {{RelTerm{AlgElem(tw::phi(sqe({{1}}))), "g"}}};
    CHECK_THROWS_AS(p.validate(), DomainError);  // twisted coefficient over A1

    Presentation dup;
    dup.algebra = AlgebraKind::FullA;
    dup.generators = {{"g", 0}, {"g", 1}};
    CHECK_THROWS_AS(dup.validate(), DomainError);
}

TEST_CASE("presentation JSON round trip")
{
    const std::string text = R"({
        "algebra": "TwistedA1",
        "generators": [{"name": "g", "degree": 0}],
        "relations": [[{"coef": "1 | Sq2 + i1 | Sq1 + i1^2 | 1 + i2 | 1", "gen": "g"}]]
    })";
    const Presentation p = stw::io::presentation_from_json(text);
    CHECK(p.algebra == AlgebraKind::TwistedA1);
    REQUIRE(p.relations.size() == 1);
    CHECK(std::get<tw::Elem>(p.relations[0][0].coef) == tw::phi(sqe({{2}})));

    const Presentation again = stw::io::presentation_from_json(stw::io::presentation_to_json(p));
    CHECK(again.algebra == p.algebra);
    REQUIRE(again.relations.size() == 1);
    CHECK(std::get<tw::Elem>(again.relations[0][0].coef) ==
          std::get<tw::Elem>(p.relations[0][0].coef));

    CHECK_THROWS_AS(stw::io::presentation_from_json("{"), DomainError);
    CHECK_THROWS_AS(stw::io::presentation_from_json(R"({"algebra": "nope", "generators": []})"),
                    DomainError);
}

TEST_CASE("distinguished classes require a one-dimensional home degree")
{
    Realization joker(cyclic(AlgebraKind::A1, 0, {AlgElem(sqe({{3}}))}), 4);
    const auto kappa = unique_class(joker, "kappa", 0);
    CHECK(kappa.name == "kappa");
    CHECK(kappa.degree == 0);
    CHECK(kappa.coords == joker.generator_class("g"));

    Realization a1_free(cyclic(AlgebraKind::A1, 0, {}), 4);
    CHECK_THROWS_AS(unique_class(a1_free, "x", 3), DomainError);  // two classes in degree 3
}

TEST_CASE("realize rejects bad degrees and unknown generators in expressions")
{
    Realization r(cyclic(AlgebraKind::FullA, 0, {}), 4);
    CHECK_THROWS_AS(r.dim(5), DomainError);
    CHECK_THROWS_AS(r.generator_class("nope"), DomainError);
    CHECK_THROWS_AS(r.act(AlgElem(sqe({{1}, {2}})), 0, r.generator_class("g")), DomainError);
}
