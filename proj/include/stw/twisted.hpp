#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stw/series.hpp"
#include "stw/steenrod.hpp"
#include "stw/unstable.hpp"

namespace stw::twisted {

// Basis term k (x) a of the twisted algebra: a K-type polynomial monomial
// and an admissible Steenrod monomial.
struct Term {
    unstable::Mon poly;
    steenrod::Mono sq;

    int degree() const { return unstable::degree(poly) + steenrod::degree(sq); }

    bool operator==(const Term& rhs) const { return poly == rhs.poly && sq == rhs.sq; }
    bool operator<(const Term& rhs) const
    {
        return poly != rhs.poly ? poly < rhs.poly : sq < rhs.sq;
    }
};

// GF(2) sum of twisted terms.
class Elem {
public:
    Elem() = default;
    static Elem zero() { return Elem(); }
    static Elem unit();
    static Elem term(Term t);
    // Inclusions of the two factors.
    static Elem from_poly(const unstable::Elem& k);
    static Elem from_steenrod(const steenrod::Elem& a);

    bool is_zero() const { return terms_.empty(); }
    const std::set<Term>& terms() const { return terms_; }

    void toggle(const Term& t);
    Elem& operator+=(const Elem& rhs);
    friend Elem operator+(Elem lhs, const Elem& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    std::optional<int> degree() const;

    bool operator==(const Elem& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const Elem& rhs) const { return !(*this == rhs); }

private:
    std::set<Term> terms_;
};

// Semidirect product: (k (x) a)(l (x) b) = sum_i k a'_i(l) (x) a''_i b over
// the coproduct of a.
Elem mul(const Elem& x, const Elem& y);

using TensorElem = std::set<std::pair<Term, Term>>;

// Componentwise coproduct: the K factor carries the coproduct determined by
// D(iota_1) and D(iota_2), the Steenrod factor the Cartan coproduct.
TensorElem coproduct(const Elem& x);

// The twisting embedding phi on the subalgebra generated by Sq^1 and Sq^2:
// phi(Sq^1) = 1 (x) Sq^1 + i1 (x) 1,
// phi(Sq^2) = 1 (x) Sq^2 + i1 (x) Sq^1 + i1^2 (x) 1 + i2 (x) 1.
// Throws DomainError when the argument is not in that subalgebra.
Elem phi(const steenrod::Elem& a);

// Inverse automorphism on generators:
// psi(1 (x) Sq^1) = 1 (x) Sq^1 + i1 (x) 1,
// psi(1 (x) Sq^2) = 1 (x) Sq^2 + i1 (x) Sq^1 + i2 (x) 1,
// psi(k (x) 1) = k (x) 1.
Elem psi(const Elem& x);

// phi extended by the identity on the polynomial factor.
Elem phi_extended(const Elem& x);

bool in_twisted_a1(const Elem& x);

enum class TwistedSubalgebraId { FullTwisted, TwistedA1 };

// Basis of the full twisted algebra in one degree (all pairs k (x) a).
const std::vector<Term>& full_basis(int degree);

// For TwistedA1: products (K monomial) (x) (A(1) basis element).
std::vector<Elem> basis(TwistedSubalgebraId id, int degree);
series::PoincareSeries dimension_series(TwistedSubalgebraId id, int max_degree);

struct IdentityReport {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines;
};

struct VerifyReport {
    std::vector<IdentityReport> identities;
    bool all_pass() const;
};

// Recomputes the two defining relations of phi and its comultiplicativity,
// with the intermediate normal forms in the report.
VerifyReport verify_appendix();

// Checks phi(alpha)(l (x) 1) = sum (alpha'(l) (x) 1) phi(alpha'') for every
// alpha in the A(1) basis and every K monomial l of degree <= max_degree.
VerifyReport verify_commutation(int max_degree);

std::string render(const Term& t);
std::string render(const Elem& x);
std::string render(const TensorElem& t);

}  // namespace stw::twisted
