#include <doctest.h>

#include <map>
#include <random>
#include <atomic>
#include <thread>

#include "stw/series.hpp"
#include "stw/steenrod.hpp"

using namespace stw::steenrod;

namespace {

Elem nf(const Word& w)
{
    return adem_normalize(w);
}

Elem terms(std::initializer_list<Mono> monos)
{
    Elem e;
    for (const auto& m : monos)
        e.toggle(m);
    return e;
}

// Independent dimension oracle for the Steenrod algebra: monomial count in
// the dual polynomial algebra on generators of degree 2^i - 1.
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

std::vector<Mono> monos_up_to(int max_degree)
{
    std::vector<Mono> all;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& m : admissible_basis(d))
            all.push_back(m);
    return all;
}

using Tensor3 = std::set<std::vector<Mono>>;

void toggle3(Tensor3& t, std::vector<Mono> key)
{
    auto it = t.find(key);
    if (it != t.end())
        t.erase(it);
    else
        t.insert(std::move(key));
}

}  // namespace

TEST_CASE("Adem normalization on the defining examples")
{
    CHECK(nf({1, 1}) == Elem::zero());
    CHECK(nf({2, 2}) == terms({{3, 1}}));
    CHECK(nf({1, 2}) == terms({{3}}));
    CHECK(nf({2, 3}) == terms({{5}, {4, 1}}));
    CHECK(nf({1, 2, 1}) == terms({{3, 1}}));
    // Sq3 Sq2 = 0 and Sq1 Sq3 = 0, two classical degenerate cases.
    CHECK(nf({3, 2}) == Elem::zero());
    CHECK(nf({1, 3}) == Elem::zero());
    CHECK(nf({}) == Elem::unit());
    CHECK(nf({0, 2}) == terms({{2}}));
}

TEST_CASE("normal forms contain only admissible monomials")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Word w;
        const int len = 1 + rng() % 4;
        for (int i = 0; i < len; ++i)
            w.push_back(1 + rng() % 7);
        const Elem e = nf(w);
        for (const auto& m : e.terms())
            CHECK(is_admissible(m));
        if (auto d = e.degree())
            CHECK(*d == degree(w));
    }
}

TEST_CASE("multiplication: unit, squares, zero divisors")
{
    const Elem x = terms({{4, 2}, {5}});
    CHECK(mul(Elem::unit(), x) == x);
    CHECK(mul(x, Elem::unit()) == x);
    CHECK(mul(terms({{2}}), terms({{2}})) == terms({{3, 1}}));
    // (Sq1 + Sq2) Sq1 = Sq2 Sq1 because Sq1 Sq1 = 0.
    CHECK(mul(terms({{1}, {2}}), terms({{1}})) == terms({{2, 1}}));
}

TEST_CASE("associativity on all monomial triples of total degree <= 12")
{
    const auto all = monos_up_to(12);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (degree(a) + degree(b) > 12)
                continue;
            for (const auto& c : all) {
                if (degree(a) + degree(b) + degree(c) > 12)
                    continue;
                const Elem ab_c = mul(mul(a, b), Elem::mono(c));
                const Elem a_bc = mul(Elem::mono(a), mul(b, c));
                CHECK(ab_c == a_bc);
            }
        }
}

TEST_CASE("coproduct on small elements")
{
    CHECK(coproduct(Mono{}) == TensorElem{{{}, {}}});
    CHECK(coproduct(Mono{2}) == TensorElem{{{2}, {}}, {{1}, {1}}, {{}, {2}}});
    // Sq1 is primitive.
    CHECK(coproduct(Mono{1}) == TensorElem{{{1}, {}}, {{}, {1}}});
}

TEST_CASE("coassociativity on all monomials of degree <= 10")
{
    for (const auto& m : monos_up_to(10)) {
        Tensor3 lhs, rhs;
        for (const auto& [a, b] : coproduct(m)) {
            for (const auto& [a1, a2] : coproduct(a))
                toggle3(lhs, {a1, a2, b});
            for (const auto& [b1, b2] : coproduct(b))
                toggle3(rhs, {a, b1, b2});
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the coproduct is an algebra map on pairs of total degree <= 10")
{
    const auto all = monos_up_to(10);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (degree(a) + degree(b) > 10)
                continue;
            const TensorElem lhs = coproduct(mul(a, b));
            TensorElem rhs;
            for (const auto& [a1, a2] : coproduct(a))
                for (const auto& [b1, b2] : coproduct(b)) {
                    const Elem left = mul(a1, b1);
                    const Elem right = mul(a2, b2);
                    for (const auto& ml : left.terms())
                        for (const auto& mr : right.terms()) {
                            auto key = std::make_pair(ml, mr);
                            auto it = rhs.find(key);
                            if (it != rhs.end())
                                rhs.erase(it);
                            else
                                rhs.insert(key);
                        }
                }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("admissible bases in low degrees")
{
    CHECK(admissible_basis(0) == std::vector<Mono>{{}});
    CHECK(admissible_basis(3) == std::vector<Mono>{{2, 1}, {3}});
    CHECK(basis(AlgebraId::A1, 0).size() == 1);
}

TEST_CASE("the A(1) profile is 1,1,1,2,1,1,1 and matches the dual series")
{
    const auto dims = dimension_series(AlgebraId::A1, 10);
    CHECK(dims == stw::series::PoincareSeries({1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0}));
    int total = 0;
    for (int d = 0; d <= 10; ++d)
        total += static_cast<int>(dims.at(d));
    CHECK(total == 8);

    // Oracle: coefficient expansion of (1 + t + t^2 + t^3)(1 + t^3).
    const auto dual = stw::series::product(stw::series::PoincareSeries({1, 1, 1, 1, 0, 0, 0}),
                                           stw::series::PoincareSeries({1, 0, 0, 1, 0, 0, 0}));
    CHECK(dims.truncated(6) == dual);
}

TEST_CASE("degree-5 A(1) basis element is the sum Sq5 + Sq4 Sq1")
{
    const auto& b5 = a1_basis(5);
    REQUIRE(b5.size() == 1);
    CHECK(b5[0] == terms({{5}, {4, 1}}));
    CHECK(in_a1(terms({{5}, {4, 1}})));
    CHECK_FALSE(in_a1(terms({{5}})));
    CHECK_FALSE(in_a1(terms({{4}})));
}

TEST_CASE("A(1) word expressions reconstruct their elements")
{
    for (int d = 0; d <= 6; ++d) {
        for (const auto& e : a1_basis(d)) {
            const auto words = a1_word_expression(e);
            REQUIRE(words.has_value());
            Elem rebuilt;
            for (const auto& w : *words) {
                for (int letter : w)
                    CHECK((letter == 1 || letter == 2));
                rebuilt += adem_normalize(w);
            }
            CHECK(rebuilt == e);
        }
    }
    CHECK_FALSE(a1_word_expression(terms({{4}})).has_value());
}

TEST_CASE("A(1) is closed under multiplication and coproduct")
{
    std::vector<Elem> all;
    for (int d = 0; d <= 6; ++d)
        for (const auto& e : a1_basis(d))
            all.push_back(e);
    REQUIRE(all.size() == 8);

    for (const auto& a : all)
        for (const auto& b : all)
            CHECK(in_a1(mul(a, b)));

    // Coproduct components: group the tensor by left factor degree and check
    // each side stays inside A(1) columnwise.
    for (const auto& a : all) {
        const TensorElem t = coproduct(a);
        std::map<Mono, Elem> by_left, by_right;
        for (const auto& [l, r] : t) {
            by_left[l].toggle(r);
            by_right[r].toggle(l);
        }
        for (const auto& [l, sum] : by_left)
            CHECK(in_a1(sum));
        for (const auto& [r, sum] : by_right)
            CHECK(in_a1(sum));
    }
}

TEST_CASE("Steenrod dimension series against the dual polynomial oracle")
{
    const auto dims = dimension_series(AlgebraId::FullA, 20);
    CHECK(dims.at(0) == 1);
    CHECK(dims.at(1) == 1);
    CHECK(dims.at(2) == 1);
    CHECK(dims.at(3) == 2);
    const auto oracle = dual_poly_dims(20);
    for (int d = 0; d <= 20; ++d)
        CHECK(dims.at(d) == oracle[d]);
}

TEST_CASE("rendering")
{
    CHECK(render(Mono{3, 1}) == "Sq3 Sq1");
    CHECK(render(Elem::unit()) == "1");
    CHECK(render(Elem::zero()) == "0");
    CHECK(render(terms({{5}, {4, 1}})) == "Sq4 Sq1 + Sq5");
}

TEST_CASE("memo caches survive concurrent use")
{
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([t, &ok] {
            std::mt19937 rng(1000 + t);
            for (int trial = 0; trial < 150; ++trial) {
                Word w;
                const int len = 1 + rng() % 4;
                for (int i = 0; i < len; ++i)
                    w.push_back(1 + rng() % 6);
                const Elem e = adem_normalize(w);
                for (const auto& m : e.terms())
                    if (!is_admissible(m))
                        ok = false;
                coproduct(e);
                basis(AlgebraId::A1, static_cast<int>(rng() % 8));
            }
        });
    }
    for (auto& th : workers)
        th.join();
    CHECK(ok);
}
