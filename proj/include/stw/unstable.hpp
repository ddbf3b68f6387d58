#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stw/series.hpp"
#include "stw/steenrod.hpp"

namespace stw::unstable {

// Polynomial generator of one of the two ambient algebras:
//   - K type (cohomology of K(Z/2,1) x K(Z/2,2)): iota_1 in degree 1 and the
//     Serre generators Sq^I iota_2 for admissible I of excess <= 1, degree
//     2 + |I| (the empty word is iota_2 itself);
//   - BO type: Stiefel-Whitney classes w_i, degree i.
struct Gen {
    enum class Kind { Iota1, Iota2Derived, StiefelWhitney };

    Kind kind = Kind::Iota1;
    steenrod::Mono word;  // Iota2Derived only
    int index = 0;        // StiefelWhitney only

    static Gen iota1();
    static Gen iota2(steenrod::Mono word = {});
    static Gen sw(int index);

    int degree() const;

    bool operator==(const Gen& rhs) const
    {
        return kind == rhs.kind && word == rhs.word && index == rhs.index;
    }
    bool operator<(const Gen& rhs) const;
};

struct Ambient {
    enum class Kind { K, BO };
    Kind kind = Kind::K;
    int vars = 0;  // BO only: classes w_1 .. w_vars

    static Ambient K() { return {Kind::K, 0}; }
    static Ambient BO(int vars) { return {Kind::BO, vars}; }

    bool operator==(const Ambient& rhs) const { return kind == rhs.kind && vars == rhs.vars; }
    bool operator<(const Ambient& rhs) const
    {
        return kind != rhs.kind ? kind < rhs.kind : vars < rhs.vars;
    }
};

// Monomial: generator -> positive exponent.
using Mon = std::map<Gen, int>;

int degree(const Mon& m);
Mon mul(const Mon& a, const Mon& b);

// GF(2) sum of monomials of a fixed ambient algebra.
class Elem {
public:
    explicit Elem(Ambient amb = Ambient::K()) : amb_(amb) {}
    static Elem zero(Ambient amb) { return Elem(amb); }
    static Elem one(Ambient amb);
    static Elem gen(Ambient amb, const Gen& g);
    static Elem mono(Ambient amb, Mon m);

    const Ambient& ambient() const { return amb_; }
    bool is_zero() const { return terms_.empty(); }
    const std::set<Mon>& terms() const { return terms_; }

    void toggle(const Mon& m);
    Elem& operator+=(const Elem& rhs);
    friend Elem operator+(Elem lhs, const Elem& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    std::optional<int> degree() const;

    bool operator==(const Elem& rhs) const { return amb_ == rhs.amb_ && terms_ == rhs.terms_; }
    bool operator!=(const Elem& rhs) const { return !(*this == rhs); }

private:
    Ambient amb_;
    std::set<Mon> terms_;
};

Elem mul(const Elem& a, const Elem& b);
Elem pow(const Elem& a, int n);

// Steenrod square on a polynomial element: Cartan on products, instability
// plus Adem straightening on K generators, the Wu formula on w_i.
Elem sq_action(int i, const Elem& x);

// Action of a word (rightmost letter acts first), then of a full element.
Elem act_word(const steenrod::Word& w, const Elem& x);
Elem act(const steenrod::Elem& a, const Elem& x);

std::vector<Gen> generators_up_to(const Ambient& amb, int max_degree);
const std::vector<Mon>& monomials_of_degree(const Ambient& amb, int d);
series::PoincareSeries dimension_series(const Ambient& amb, int max_degree);

// Substitution iota_1 -> w_1, Sq^I iota_2 -> Sq^I(w_2); Steenrod-equivariant.
// Requires vars >= degree of x so no image terms are truncated away.
Elem classify_iota_to_w(const Elem& x, int vars);

// Dimensions of H*(BO) modulo the Steenrod-closed ideal generated by w_1 and
// w_2. The truncation model is only valid strictly below degree 32.
series::PoincareSeries bspin_series(int max_degree);

std::string render(const Gen& g);
std::string render(const Mon& m);
std::string render(const Elem& e);

}  // namespace stw::unstable
