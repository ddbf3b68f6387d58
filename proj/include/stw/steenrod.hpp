#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stw/series.hpp"

namespace stw::steenrod {

// Free word Sq^{i1} ... Sq^{ik} with all exponents >= 1; the empty word is 1.
using Word = std::vector<int>;

// Admissible word: i_j >= 2 i_{j+1} throughout.
using Mono = std::vector<int>;

int degree(const Word& w);
int excess(const Mono& m);
bool is_admissible(const Mono& m);

// C(n, k) mod 2 by Lucas: odd iff the bits of k are contained in those of n.
bool binom_mod2(long long n, long long k);

// GF(2) sum of admissible monomials. The empty set is 0; {1} renders as "1".
class Elem {
public:
    Elem() = default;
    static Elem zero() { return Elem(); }
    static Elem unit() { return mono(Mono{}); }
    static Elem mono(Mono m);

    bool is_zero() const { return terms_.empty(); }
    const std::set<Mono>& terms() const { return terms_; }

    void toggle(const Mono& m);
    Elem& operator+=(const Elem& rhs);
    friend Elem operator+(Elem lhs, const Elem& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    // Common degree of all terms, nullopt for 0 or an inhomogeneous sum.
    std::optional<int> degree() const;

    bool operator==(const Elem& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const Elem& rhs) const { return !(*this == rhs); }
    bool operator<(const Elem& rhs) const { return terms_ < rhs.terms_; }

private:
    std::set<Mono> terms_;
};

// Admissible normal form of a free word, via the Adem relations.
Elem adem_normalize(const Word& w);

Elem mul(const Elem& a, const Elem& b);
Elem mul(const Mono& a, const Mono& b);

// GF(2) sum of x' (x) x'' tensor terms, both factors admissible.
using TensorElem = std::set<std::pair<Mono, Mono>>;

TensorElem coproduct(const Mono& m);
TensorElem coproduct(const Elem& a);

enum class AlgebraId { FullA, A1 };

// All admissible monomials of the given degree, sorted.
const std::vector<Mono>& admissible_basis(int degree);

// Basis of the degree-d part of the subalgebra generated by Sq^1 and Sq^2,
// computed by degreewise spanning (not from a table). Elements can be proper
// sums of admissibles, e.g. Sq^5 + Sq^4 Sq^1 in degree 5.
const std::vector<Elem>& a1_basis(int degree);

std::vector<Elem> basis(AlgebraId alg, int degree);
series::PoincareSeries dimension_series(AlgebraId alg, int max_degree);

bool in_a1(const Elem& a);

// Writes a as a GF(2) sum of words in the letters {1, 2}, or nullopt when
// a is not in the subalgebra generated by Sq^1 and Sq^2.
std::optional<std::vector<Word>> a1_word_expression(const Elem& a);

// Coordinates of a homogeneous element over admissible_basis(degree).
std::vector<std::size_t> coords(const Elem& a, int degree);

std::string render(const Mono& m);
std::string render(const Elem& a);
std::string render(const TensorElem& t);

}  // namespace stw::steenrod
