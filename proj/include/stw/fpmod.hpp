#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "stw/f2.hpp"
#include "stw/series.hpp"
#include "stw/steenrod.hpp"
#include "stw/twisted.hpp"

namespace stw::fpmod {

enum class AlgebraKind { FullA, A1, FullTwisted, TwistedA1 };

std::string algebra_name(AlgebraKind kind);
AlgebraKind algebra_from_name(const std::string& name);
bool is_twisted(AlgebraKind kind);

// Homogeneous coefficient: plain Steenrod element for FullA/A1, twisted
// element for the twisted algebras.
using AlgElem = std::variant<steenrod::Elem, twisted::Elem>;

std::optional<int> elem_degree(const AlgElem& e);
bool elem_is_zero(const AlgElem& e);
std::string render(const AlgElem& e);

struct Generator {
    std::string name;
    int degree = 0;
};

struct RelTerm {
    AlgElem coef;
    std::string gen;
};

using Relation = std::vector<RelTerm>;

struct Presentation {
    AlgebraKind algebra = AlgebraKind::FullA;
    std::vector<Generator> generators;
    std::vector<Relation> relations;

    // Throws DomainError on unknown generator names, coefficient/algebra
    // mismatches, inhomogeneous relations, or duplicate generator names.
    void validate() const;
    int relation_degree(const Relation& r) const;
};

// Replaces every relation coefficient a by phi(a); generators are kept.
// Realizes the induction of an A(1)-module along the twisting embedding.
Presentation induce_along_phi(const Presentation& p);

// Degreewise realization of a finitely presented graded module: in each
// degree, the span of (algebra basis element)·(generator) modulo the span of
// (algebra basis element)·(relation). Bases are coset representatives at the
// non-pivot coordinates, with ambient coordinates ordered lexicographically
// by (generator name, algebra basis element rendering).
class Realization {
public:
    Realization(Presentation p, int max_degree);
    Realization(Realization&&) noexcept;
    Realization& operator=(Realization&&) noexcept;
    ~Realization();

    const Presentation& presentation() const;
    int max_degree() const;

    int dim(int degree) const;
    series::PoincareSeries poincare() const;
    std::vector<std::string> basis_expressions(int degree) const;

    // Quotient coordinates of a formal sum of coef·gen terms (homogeneous).
    std::pair<int, f2::BitVector> class_of(const std::vector<RelTerm>& expr) const;
    f2::BitVector generator_class(const std::string& name) const;
    int generator_degree(const std::string& name) const;

    // Left action of a homogeneous algebra element on quotient coordinates.
    f2::BitVector act(const AlgElem& theta, int from_degree, const f2::BitVector& v) const;

    // Row r is the image of the r-th basis vector of the source degree.
    f2::BitMatrix action_matrix(const AlgElem& theta, int from_degree) const;

    // The algebra generators used for default action tables: Sq^(2^k) for the
    // plain part and the K generators for the twisted algebras.
    std::vector<std::pair<std::string, AlgElem>> action_generators() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// A named class pinned down by dimension count: the unique nonzero element
// of its realization in one degree (kappa, lambda_10 and friends).
struct DistinguishedClass {
    std::string name;
    int degree = 0;
    f2::BitVector coords;
};

// Throws unless the realization is one-dimensional in that degree.
DistinguishedClass unique_class(const Realization& r, const std::string& name, int degree);

// Graded tensor product M (x) N of a FullA realization and a FullTwisted
// realization, with (k (x) a)(x (x) y) = sum a'(x) (x) (k (x) a'')(y).
class TensorRealization {
public:
    TensorRealization(const Realization& plain, const Realization& tw, int max_degree);

    int max_degree() const { return max_degree_; }
    int dim(int degree) const;
    series::PoincareSeries poincare() const;

    // Index of the pure tensor basis slot (plain degree, plain index, tw index).
    std::size_t index_of(int degree, int plain_degree, std::size_t pi, std::size_t ti) const;

    // Embeds x (x) y for quotient coordinate vectors of the two factors.
    f2::BitVector embed(int plain_degree, const f2::BitVector& x, int tw_degree,
                        const f2::BitVector& y) const;

    f2::BitVector act(const twisted::Elem& theta, int from_degree,
                      const f2::BitVector& v) const;

private:
    struct Slot {
        int plain_degree;
        std::size_t pi, ti;
    };
    const Realization* plain_;
    const Realization* tw_;
    int max_degree_;
    std::vector<std::vector<Slot>> slots_;                    // per degree
    std::vector<std::map<std::pair<int, std::pair<std::size_t, std::size_t>>, std::size_t>> index_;
};

}  // namespace stw::fpmod
