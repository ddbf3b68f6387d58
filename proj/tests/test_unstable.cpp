#include <doctest.h>

#include <random>

#include "stw/errors.hpp"
#include "stw/unstable.hpp"

using namespace stw::unstable;
using stw::DomainError;

namespace {

const Ambient K = Ambient::K();

Elem gen_elem(const Ambient& amb, const Gen& g)
{
    return Elem::gen(amb, g);
}

// Monomial-count oracle: partitions of d into parts drawn from the generator
// degrees (each degree available once as a polynomial generator).
std::vector<std::int64_t> poly_dims_oracle(const std::vector<int>& gen_degrees, int max_degree)
{
    std::vector<std::int64_t> dp(max_degree + 1, 0);
    dp[0] = 1;
    for (int d : gen_degrees)
        for (int j = d; j <= max_degree; ++j)
            dp[j] += dp[j - d];
    return dp;
}

}  // namespace

TEST_CASE("Steenrod action on the K generators")
{
    const Elem i1 = gen_elem(K, Gen::iota1());
    const Elem i2 = gen_elem(K, Gen::iota2());
    CHECK(sq_action(1, i1) == mul(i1, i1));
    CHECK(sq_action(2, i1).is_zero());
    CHECK(sq_action(2, i2) == mul(i2, i2));
    CHECK(sq_action(1, mul(i1, i1)).is_zero());
    CHECK(sq_action(2, mul(i1, i1)) == mul(mul(i1, i1), mul(i1, i1)));
    CHECK(sq_action(0, i2) == i2);
    CHECK_THROWS_AS(sq_action(-1, i2), DomainError);

    // Sq1(iota_2) is the degree-3 Serre generator.
    CHECK(sq_action(1, i2) == gen_elem(K, Gen::iota2({1})));
    // Sq1(Sq1 iota_2) = Sq1 Sq1 iota_2 = 0.
    CHECK(sq_action(1, gen_elem(K, Gen::iota2({1}))).is_zero());
    // Sq2(Sq1 iota_2) is the degree-5 generator Sq2 Sq1 iota_2.
    CHECK(sq_action(2, gen_elem(K, Gen::iota2({1}))) == gen_elem(K, Gen::iota2({2, 1})));
    // Sq3(Sq1 iota_2) = (Sq1 iota_2)^2 by instability.
    const Elem sq1i2 = gen_elem(K, Gen::iota2({1}));
    CHECK(sq_action(3, sq1i2) == mul(sq1i2, sq1i2));
}

TEST_CASE("Wu formula on Stiefel-Whitney classes")
{
    const Ambient bo = Ambient::BO(8);
    const Elem w1 = gen_elem(bo, Gen::sw(1));
    const Elem w2 = gen_elem(bo, Gen::sw(2));
    const Elem w3 = gen_elem(bo, Gen::sw(3));
    CHECK(sq_action(1, w2) == mul(w1, w2) + w3);
    CHECK(sq_action(2, w2) == mul(w2, w2));
    CHECK(sq_action(3, w2).is_zero());
    const Elem w4 = gen_elem(bo, Gen::sw(4));
    CHECK(sq_action(1, w3) == mul(w1, w3));
    // Sq2(w3) = w2 w3 + w1 w4 + w5.
    const Elem w5 = gen_elem(bo, Gen::sw(5));
    CHECK(sq_action(2, w3) == mul(w2, w3) + mul(w1, w4) + w5);
}

TEST_CASE("generator tables")
{
    const auto gens5 = generators_up_to(K, 5);
    REQUIRE(gens5.size() == 4);
    CHECK(gens5[0] == Gen::iota1());
    CHECK(gens5[1] == Gen::iota2());
    CHECK(gens5[2] == Gen::iota2({1}));
    CHECK(gens5[3] == Gen::iota2({2, 1}));

    CHECK(generators_up_to(K, 1) == std::vector<Gen>{Gen::iota1()});

    const auto bo3 = generators_up_to(Ambient::BO(3), 3);
    CHECK(bo3 == std::vector<Gen>{Gen::sw(1), Gen::sw(2), Gen::sw(3)});

    // Serre generator degrees follow the 2^k + 1 pattern.
    std::vector<int> degrees;
    for (const auto& g : generators_up_to(K, 17))
        degrees.push_back(g.degree());
    CHECK(degrees == std::vector<int>{1, 2, 3, 5, 9, 17});
}

TEST_CASE("dimension series of the ambient algebras")
{
    const auto k_dims = dimension_series(K, 12);
    CHECK(k_dims.at(0) == 1);
    CHECK(k_dims.at(1) == 1);
    CHECK(k_dims.at(2) == 2);
    CHECK(k_dims.at(3) == 3);
    CHECK(k_dims.at(4) == 4);
    const auto k_oracle = poly_dims_oracle({1, 2, 3, 5, 9}, 12);
    for (int d = 0; d <= 12; ++d)
        CHECK(k_dims.at(d) == k_oracle[d]);

    // F2[w1] has one monomial in every degree.
    const auto bo1 = dimension_series(Ambient::BO(1), 10);
    for (int d = 0; d <= 10; ++d)
        CHECK(bo1.at(d) == 1);

    // Stabilized BO dimensions are partition counts.
    const auto bo = dimension_series(Ambient::BO(12), 12);
    std::vector<int> all_parts;
    for (int i = 1; i <= 12; ++i)
        all_parts.push_back(i);
    const auto partitions = poly_dims_oracle(all_parts, 12);
    for (int d = 0; d <= 12; ++d)
        CHECK(bo.at(d) == partitions[d]);
}

TEST_CASE("instability axioms for every generator of degree <= 12")
{
    for (const Ambient amb : {K, Ambient::BO(14)}) {
        for (const auto& g : generators_up_to(amb, 12)) {
            const Elem x = gen_elem(amb, g);
            CHECK(sq_action(g.degree(), x) == mul(x, x));
            CHECK(sq_action(g.degree() + 1, x).is_zero());
            CHECK(sq_action(g.degree() + 5, x).is_zero());
        }
    }
}

TEST_CASE("Cartan formula on random monomial pairs up to degree 10")
{
    std::mt19937 rng(2718);
    for (const Ambient amb : {K, Ambient::BO(10)}) {
        for (int trial = 0; trial < 80; ++trial) {
            const int da = rng() % 6, db = rng() % 5;
            const auto& ma = monomials_of_degree(amb, da);
            const auto& mb = monomials_of_degree(amb, db);
            if (ma.empty() || mb.empty())
                continue;
            const Elem x = Elem::mono(amb, ma[rng() % ma.size()]);
            const Elem y = Elem::mono(amb, mb[rng() % mb.size()]);
            const int i = rng() % 7;
            Elem rhs(amb);
            for (int a = 0; a <= i; ++a)
                rhs += mul(sq_action(a, x), sq_action(i - a, y));
            CHECK(sq_action(i, mul(x, y)) == rhs);
        }
    }
}

TEST_CASE("the action factors through Adem normalization")
{
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        stw::steenrod::Word w;
        const int len = 1 + rng() % 3;
        for (int i = 0; i < len; ++i)
            w.push_back(1 + rng() % 4);
        const int d = rng() % 7;
        const auto& monos = monomials_of_degree(K, d);
        if (monos.empty())
            continue;
        const Elem x = Elem::mono(K, monos[rng() % monos.size()]);
        CHECK(act_word(w, x) == act(stw::steenrod::adem_normalize(w), x));
    }
}

TEST_CASE("classifying substitution iota -> w")
{
    const Elem i1 = gen_elem(K, Gen::iota1());
    const Elem i2 = gen_elem(K, Gen::iota2());
    const Ambient bo = Ambient::BO(10);
    CHECK(classify_iota_to_w(i1, 10) == gen_elem(bo, Gen::sw(1)));
    CHECK(classify_iota_to_w(i2, 10) == gen_elem(bo, Gen::sw(2)));
    CHECK(classify_iota_to_w(gen_elem(K, Gen::iota2({1})), 10) ==
          mul(gen_elem(bo, Gen::sw(1)), gen_elem(bo, Gen::sw(2))) + gen_elem(bo, Gen::sw(3)));
    CHECK_THROWS_AS(classify_iota_to_w(mul(i2, i2), 3), DomainError);
}

TEST_CASE("classification commutes with Sq^i for i <= 4 on K monomials of degree <= 8")
{
    const int vars = 13;  // room for degree 8 + i
    for (int d = 0; d <= 8; ++d) {
        for (const auto& m : monomials_of_degree(K, d)) {
            const Elem x = Elem::mono(K, m);
            for (int i = 1; i <= 4; ++i) {
                const Elem lhs = classify_iota_to_w(sq_action(i, x), vars);
                const Elem rhs = sq_action(i, classify_iota_to_w(x, vars));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("BSpin series")
{
    const auto s = bspin_series(8);
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 0);
    CHECK(s.at(3) == 0);
    CHECK(s.at(4) == 1);

    const auto bo = dimension_series(Ambient::BO(8), 8);
    for (int d = 0; d <= 8; ++d)
        CHECK(s.at(d) <= bo.at(d));

    CHECK_THROWS_AS(bspin_series(32), DomainError);
}

TEST_CASE("rendering")
{
    CHECK(render(Gen::iota1()) == "i1");
    CHECK(render(Gen::iota2()) == "i2");
    CHECK(render(Gen::iota2({2, 1})) == "Sq2 Sq1 i2");
    CHECK(render(Gen::sw(3)) == "w3");
    Mon m;
    m[Gen::iota1()] = 2;
    m[Gen::iota2()] = 1;
    m[Gen::iota2({1})] = 1;
    CHECK(render(m) == "i1^2 i2 Sq1 i2");
    CHECK(render(Elem::one(K)) == "1");
    CHECK(render(Elem::zero(K)) == "0");
}
