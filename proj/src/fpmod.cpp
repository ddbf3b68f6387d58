#include "stw/fpmod.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>

#include "stw/errors.hpp"
#include "stw/unstable.hpp"

namespace stw::fpmod {

std::string algebra_name(AlgebraKind kind)
{
    switch (kind) {
    case AlgebraKind::FullA:
        return "FullA";
    case AlgebraKind::A1:
        return "A1";
    case AlgebraKind::FullTwisted:
        return "FullTwisted";
    case AlgebraKind::TwistedA1:
        return "TwistedA1";
    }
    return "?";
}

AlgebraKind algebra_from_name(const std::string& name)
{
    if (name == "FullA")
        return AlgebraKind::FullA;
    if (name == "A1")
        return AlgebraKind::A1;
    if (name == "FullTwisted")
        return AlgebraKind::FullTwisted;
    if (name == "TwistedA1")
        return AlgebraKind::TwistedA1;
    throw DomainError("unknown algebra name: " + name);
}

bool is_twisted(AlgebraKind kind)
{
    return kind == AlgebraKind::FullTwisted || kind == AlgebraKind::TwistedA1;
}

std::optional<int> elem_degree(const AlgElem& e)
{
    return std::visit([](const auto& x) { return x.degree(); }, e);
}

bool elem_is_zero(const AlgElem& e)
{
    return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

std::string render(const AlgElem& e)
{
    return std::visit([](const auto& x) { return render(x); }, e);
}

void Presentation::validate() const
{
    std::set<std::string> names;
    for (const auto& g : generators) {
        if (!names.insert(g.name).second)
            throw DomainError("duplicate generator name: " + g.name);
    }
    for (const auto& r : relations) {
        std::optional<int> rdeg;
        for (const auto& t : r) {
            if (!names.count(t.gen))
                throw DomainError("relation references unknown generator: " + t.gen);
            const bool twisted_coef = std::holds_alternative<twisted::Elem>(t.coef);
            if (twisted_coef != is_twisted(algebra))
                throw DomainError("relation coefficient type does not match algebra " +
                                  algebra_name(algebra));
            if (elem_is_zero(t.coef))
                continue;
            const auto cdeg = elem_degree(t.coef);
            if (!cdeg)
                throw DomainError("relation coefficients must be homogeneous");
            int gdeg = 0;
            for (const auto& g : generators)
                if (g.name == t.gen)
                    gdeg = g.degree;
            const int tdeg = *cdeg + gdeg;
            if (rdeg && *rdeg != tdeg)
                throw DomainError("relation terms have mixed total degree");
            rdeg = tdeg;
        }
        if (algebra == AlgebraKind::A1) {
            for (const auto& t : r)
                if (!steenrod::in_a1(std::get<steenrod::Elem>(t.coef)))
                    throw DomainError("relation coefficient " + render(t.coef) +
                                      " is not in A(1)");
        }
        if (algebra == AlgebraKind::TwistedA1) {
            for (const auto& t : r)
                if (!twisted::in_twisted_a1(std::get<twisted::Elem>(t.coef)))
                    throw DomainError("relation coefficient " + render(t.coef) +
                                      " is not in the twisted A(1)");
        }
    }
}

int Presentation::relation_degree(const Relation& r) const
{
    for (const auto& t : r) {
        if (elem_is_zero(t.coef))
            continue;
        int gdeg = 0;
        for (const auto& g : generators)
            if (g.name == t.gen)
                gdeg = g.degree;
        return *elem_degree(t.coef) + gdeg;
    }
    return 0;
}

Presentation induce_along_phi(const Presentation& p)
{
    if (p.algebra != AlgebraKind::A1)
        throw DomainError("induce_along_phi expects an A(1) presentation");
    p.validate();
    Presentation out;
    out.algebra = AlgebraKind::FullTwisted;
    out.generators = p.generators;
    for (const auto& r : p.relations) {
        Relation nr;
        for (const auto& t : r)
            nr.push_back(RelTerm{twisted::phi(std::get<steenrod::Elem>(t.coef)), t.gen});
        out.relations.push_back(std::move(nr));
    }
    return out;
}

namespace {

    const unstable::Ambient kK = unstable::Ambient::K();

    // Expression of Steenrod elements over the A(1) basis of one degree.
    const f2::SpanSolver& a1_span(int degree)
    {
        static std::map<int, f2::SpanSolver> cache;
        static std::mutex cache_mutex;
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(degree);
        if (it != cache.end())
            return it->second;
        const auto& adm = steenrod::admissible_basis(degree);
        f2::SpanSolver span(adm.size());
        for (const auto& e : steenrod::a1_basis(degree)) {
            f2::BitVector v(adm.size());
            for (auto c : steenrod::coords(e, degree))
                v.set(c);
            const bool fresh = span.add(v);
            assert(fresh);
            (void)fresh;
        }
        return cache.emplace(degree, std::move(span)).first->second;
    }

    std::vector<std::size_t> a1_coords(const steenrod::Elem& e, int degree)
    {
        const auto& adm = steenrod::admissible_basis(degree);
        f2::BitVector v(adm.size());
        for (auto c : steenrod::coords(e, degree))
            v.set(c);
        auto combo = a1_span(degree).express(v);
        if (!combo)
            throw DomainError("element " + steenrod::render(e) + " is not in A(1)");
        return *combo;
    }

    // TwistedA1 basis labels in one degree: (K monomial, index into the A(1)
    // basis of the complementary degree), in the order used by
    // twisted::basis(TwistedA1, d).
    struct TwistedA1Label {
        unstable::Mon poly;
        int a1_degree;
        std::size_t a1_index;
    };

    const std::vector<TwistedA1Label>& twisted_a1_labels(int degree)
    {
        static std::map<int, std::vector<TwistedA1Label>> cache;
        static std::mutex cache_mutex;
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(degree);
        if (it != cache.end())
            return it->second;
        std::vector<TwistedA1Label> labels;
        for (int j = 0; j <= degree; ++j) {
            const auto& a1 = steenrod::a1_basis(j);
            if (a1.empty())
                continue;
            for (const auto& k : unstable::monomials_of_degree(kK, degree - j))
                for (std::size_t q = 0; q < a1.size(); ++q)
                    labels.push_back(TwistedA1Label{k, j, q});
        }
        return cache.emplace(degree, std::move(labels)).first->second;
    }

    twisted::Elem twisted_a1_element(const TwistedA1Label& label)
    {
        twisted::Elem out;
        for (const auto& m : steenrod::a1_basis(label.a1_degree)[label.a1_index].terms())
            out.toggle(twisted::Term{label.poly, m});
        return out;
    }

    // Uniform view of the four acting algebras: basis enumeration, rendering,
    // expansion of homogeneous elements in basis coordinates.
    struct AlgebraView {
        AlgebraKind kind;

        std::size_t dim(int d) const
        {
            switch (kind) {
            case AlgebraKind::FullA:
                return steenrod::admissible_basis(d).size();
            case AlgebraKind::A1:
                return steenrod::a1_basis(d).size();
            case AlgebraKind::FullTwisted:
                return twisted::full_basis(d).size();
            case AlgebraKind::TwistedA1:
                return twisted_a1_labels(d).size();
            }
            return 0;
        }

        AlgElem element(int d, std::size_t i) const
        {
            switch (kind) {
            case AlgebraKind::FullA:
                return steenrod::Elem::mono(steenrod::admissible_basis(d)[i]);
            case AlgebraKind::A1:
                return steenrod::a1_basis(d)[i];
            case AlgebraKind::FullTwisted:
                return twisted::Elem::term(twisted::full_basis(d)[i]);
            case AlgebraKind::TwistedA1:
                return twisted_a1_element(twisted_a1_labels(d)[i]);
            }
            throw DomainError("bad algebra");
        }

        std::string rendering(int d, std::size_t i) const
        {
            return render(element(d, i));
        }

        f2::BitVector expand(const AlgElem& e, int d) const
        {
            f2::BitVector v(dim(d));
            switch (kind) {
            case AlgebraKind::FullA: {
                const auto& a = std::get<steenrod::Elem>(e);
                for (auto c : steenrod::coords(a, d))
                    v.flip(c);
                return v;
            }
            case AlgebraKind::A1: {
                for (auto c : a1_coords(std::get<steenrod::Elem>(e), d))
                    v.flip(c);
                return v;
            }
            case AlgebraKind::FullTwisted: {
                const auto& basis = twisted::full_basis(d);
                for (const auto& t : std::get<twisted::Elem>(e).terms()) {
                    auto it = std::lower_bound(basis.begin(), basis.end(), t);
                    if (it == basis.end() || !(*it == t))
                        throw DomainError("twisted term of unexpected degree");
                    v.flip(static_cast<std::size_t>(it - basis.begin()));
                }
                return v;
            }
            case AlgebraKind::TwistedA1: {
                // Decompose per K monomial, then per column in A(1).
                const auto& labels = twisted_a1_labels(d);
                std::map<std::pair<unstable::Mon, std::size_t>, std::size_t> pos;
                for (std::size_t i = 0; i < labels.size(); ++i)
                    pos[{labels[i].poly, labels[i].a1_index}] = i;
                std::map<unstable::Mon, steenrod::Elem> cols;
                for (const auto& t : std::get<twisted::Elem>(e).terms())
                    cols[t.poly].toggle(t.sq);
                for (const auto& [k, a] : cols) {
                    const int j = d - unstable::degree(k);
                    if (j < 0)
                        throw DomainError("twisted term of unexpected degree");
                    for (auto q : a1_coords(a, j))
                        v.flip(pos.at({k, q}));
                }
                return v;
            }
            }
            throw DomainError("bad algebra");
        }

        AlgElem mul(const AlgElem& a, const AlgElem& b) const
        {
            if (is_twisted(kind))
                return twisted::mul(std::get<twisted::Elem>(a), std::get<twisted::Elem>(b));
            return steenrod::mul(std::get<steenrod::Elem>(a), std::get<steenrod::Elem>(b));
        }
    };

}  // namespace

struct Realization::Impl {
    Presentation pres;
    int max_degree;
    AlgebraView alg;

    struct AmbientLabel {
        std::size_t gen;    // index into pres.generators
        std::size_t basis;  // index into the algebra basis of degree d - |gen|
        std::string rendering;
    };

    struct DegreeData {
        std::vector<AmbientLabel> labels;
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;
        f2::SpanSolver sub{0};
        std::vector<std::size_t> nonpivot;                  // ambient positions
        std::map<std::size_t, std::size_t> quotient_index;  // position -> basis slot
    };
    std::vector<DegreeData> degrees;

    // (1 (x) a)·coef per relation term, shared across all K-monomial factors.
    std::map<std::pair<const void*, steenrod::Mono>, twisted::Elem> twist_cache;

    const twisted::Elem& twist_product(const twisted::Elem& coef, const steenrod::Mono& a)
    {
        const auto key = std::make_pair(static_cast<const void*>(&coef), a);
        auto it = twist_cache.find(key);
        if (it != twist_cache.end())
            return it->second;
        twisted::Elem prod = twisted::mul(twisted::Elem::from_steenrod(steenrod::Elem::mono(a)),
                                          coef);
        return twist_cache.emplace(key, std::move(prod)).first->second;
    }

    void build_degree(int d);
    f2::BitVector ambient_coords(const std::vector<RelTerm>& expr, int degree) const;
    f2::BitVector reduce_to_quotient(int degree, const f2::BitVector& ambient) const;
    f2::BitVector lift(int degree, const f2::BitVector& quotient) const;
};

void Realization::Impl::build_degree(int d)
{
    DegreeData data;
    // Ambient basis: (algebra basis element of degree d - |g|) · g.
    for (std::size_t gi = 0; gi < pres.generators.size(); ++gi) {
        const int rem = d - pres.generators[gi].degree;
        if (rem < 0)
            continue;
        for (std::size_t bi = 0; bi < alg.dim(rem); ++bi)
            data.labels.push_back({gi, bi, alg.rendering(rem, bi)});
    }
    std::sort(data.labels.begin(), data.labels.end(),
              [&](const AmbientLabel& a, const AmbientLabel& b) {
                  const auto& na = pres.generators[a.gen].name;
                  const auto& nb = pres.generators[b.gen].name;
                  return na != nb ? na < nb : a.rendering < b.rendering;
              });
    for (std::size_t i = 0; i < data.labels.size(); ++i)
        data.position[{data.labels[i].gen, data.labels[i].basis}] = i;

    data.sub = f2::SpanSolver(data.labels.size());

    // Submodule rows: (algebra basis element) · (relation).
    for (const auto& rel : pres.relations) {
        const int rdeg = pres.relation_degree(rel);
        const int mult = d - rdeg;
        if (mult < 0)
            continue;
        for (std::size_t bi = 0; bi < alg.dim(mult); ++bi) {
            f2::BitVector row(data.labels.size());
            if (is_twisted(pres.algebra)) {
                // b = k (x) a (or a sum of such for TwistedA1): use
                // (k (x) 1)((1 (x) a)·coef) and multiply the K part in.
                std::vector<std::pair<unstable::Mon, steenrod::Mono>> factors;
                if (pres.algebra == AlgebraKind::FullTwisted) {
                    const auto& t = twisted::full_basis(mult)[bi];
                    factors.push_back({t.poly, t.sq});
                }
                else {
                    const auto& label = twisted_a1_labels(mult)[bi];
                    for (const auto& m :
                         steenrod::a1_basis(label.a1_degree)[label.a1_index].terms())
                        factors.push_back({label.poly, m});
                }
                for (const auto& t : rel) {
                    if (elem_is_zero(t.coef))
                        continue;
                    std::size_t gi = 0;
                    for (std::size_t g = 0; g < pres.generators.size(); ++g)
                        if (pres.generators[g].name == t.gen)
                            gi = g;
                    const int cdeg = *elem_degree(t.coef);
                    twisted::Elem total;
                    for (const auto& [k, a] : factors) {
                        const twisted::Elem& base =
                            twist_product(std::get<twisted::Elem>(t.coef), a);
                        for (const auto& bt : base.terms())
                            total.toggle(
                                twisted::Term{unstable::mul(k, bt.poly), bt.sq});
                    }
                    const f2::BitVector coords =
                        alg.expand(AlgElem(std::move(total)), mult + cdeg);
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        if (coords.get(c))
                            row.flip(data.position.at({gi, c}));
                }
            }
            else {
                const AlgElem b = alg.element(mult, bi);
                for (const auto& t : rel) {
                    if (elem_is_zero(t.coef))
                        continue;
                    std::size_t gi = 0;
                    for (std::size_t g = 0; g < pres.generators.size(); ++g)
                        if (pres.generators[g].name == t.gen)
                            gi = g;
                    const int cdeg = *elem_degree(t.coef);
                    const AlgElem prod = alg.mul(b, t.coef);
                    if (elem_is_zero(prod))
                        continue;
                    const f2::BitVector coords = alg.expand(prod, mult + cdeg);
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        if (coords.get(c))
                            row.flip(data.position.at({gi, c}));
                }
            }
            data.sub.add(row);
        }
    }

    std::vector<bool> is_pivot(data.labels.size(), false);
    for (auto p : data.sub.pivots())
        is_pivot[p] = true;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        if (!is_pivot[i]) {
            data.quotient_index[i] = data.nonpivot.size();
            data.nonpivot.push_back(i);
        }
    }
    degrees.push_back(std::move(data));
}

f2::BitVector Realization::Impl::ambient_coords(const std::vector<RelTerm>& expr,
                                                int degree) const
{
    const DegreeData& data = degrees[degree];
    f2::BitVector out(data.labels.size());
    for (const auto& t : expr) {
        if (elem_is_zero(t.coef))
            continue;
        std::size_t gi = pres.generators.size();
        for (std::size_t g = 0; g < pres.generators.size(); ++g)
            if (pres.generators[g].name == t.gen)
                gi = g;
        if (gi == pres.generators.size())
            throw DomainError("unknown generator: " + t.gen);
        const int rem = degree - pres.generators[gi].degree;
        if (rem < 0)
            throw DomainError("expression degree mismatch");
        const f2::BitVector coords = alg.expand(t.coef, rem);
        for (std::size_t c = 0; c < coords.size(); ++c)
            if (coords.get(c))
                out.flip(data.position.at({gi, c}));
    }
    return out;
}

f2::BitVector Realization::Impl::reduce_to_quotient(int degree,
                                                    const f2::BitVector& ambient) const
{
    const DegreeData& data = degrees[degree];
    const f2::BitVector reduced = data.sub.reduce(ambient);
    f2::BitVector out(data.nonpivot.size());
    for (std::size_t j = 0; j < data.nonpivot.size(); ++j)
        if (reduced.get(data.nonpivot[j]))
            out.set(j);
    return out;
}

f2::BitVector Realization::Impl::lift(int degree, const f2::BitVector& quotient) const
{
    const DegreeData& data = degrees[degree];
    f2::BitVector out(data.labels.size());
    for (std::size_t j = 0; j < quotient.size(); ++j)
        if (quotient.get(j))
            out.set(data.nonpivot[j]);
    return out;
}

Realization::Realization(Presentation p, int max_degree) : impl_(std::make_unique<Impl>())
{
    if (max_degree < 0)
        throw DomainError("max_degree must be nonnegative");
    p.validate();
    impl_->pres = std::move(p);
    impl_->max_degree = max_degree;
    impl_->alg = AlgebraView{impl_->pres.algebra};
    for (int d = 0; d <= max_degree; ++d)
        impl_->build_degree(d);
}

Realization::Realization(Realization&&) noexcept = default;
Realization& Realization::operator=(Realization&&) noexcept = default;
Realization::~Realization() = default;

const Presentation& Realization::presentation() const
{
    return impl_->pres;
}

int Realization::max_degree() const
{
    return impl_->max_degree;
}

int Realization::dim(int degree) const
{
    if (degree < 0 || degree > impl_->max_degree)
        throw DomainError("degree out of realized range");
    return static_cast<int>(impl_->degrees[degree].nonpivot.size());
}

series::PoincareSeries Realization::poincare() const
{
    std::vector<std::int64_t> dims(impl_->max_degree + 1, 0);
    for (int d = 0; d <= impl_->max_degree; ++d)
        dims[d] = dim(d);
    return series::PoincareSeries(std::move(dims));
}

std::vector<std::string> Realization::basis_expressions(int degree) const
{
    if (degree < 0 || degree > impl_->max_degree)
        throw DomainError("degree out of realized range");
    const auto& data = impl_->degrees[degree];
    std::vector<std::string> out;
    for (auto p : data.nonpivot) {
        const auto& label = data.labels[p];
        out.push_back("(" + label.rendering + ") " + impl_->pres.generators[label.gen].name);
    }
    return out;
}

std::pair<int, f2::BitVector> Realization::class_of(const std::vector<RelTerm>& expr) const
{
    std::optional<int> deg;
    for (const auto& t : expr) {
        if (elem_is_zero(t.coef))
            continue;
        const auto cdeg = elem_degree(t.coef);
        if (!cdeg)
            throw DomainError("class_of needs homogeneous coefficients");
        int gdeg = -1;
        for (const auto& g : impl_->pres.generators)
            if (g.name == t.gen)
                gdeg = g.degree;
        if (gdeg < 0)
            throw DomainError("unknown generator: " + t.gen);
        const int tdeg = *cdeg + gdeg;
        if (deg && *deg != tdeg)
            throw DomainError("class_of needs a homogeneous expression");
        deg = tdeg;
    }
    if (!deg)
        throw DomainError("class_of needs a nonzero expression");
    if (*deg > impl_->max_degree)
        throw DomainError("expression degree exceeds realized range");
    return {*deg, impl_->reduce_to_quotient(*deg, impl_->ambient_coords(expr, *deg))};
}

f2::BitVector Realization::generator_class(const std::string& name) const
{
    AlgElem unit = is_twisted(impl_->pres.algebra) ? AlgElem(twisted::Elem::unit())
                                                   : AlgElem(steenrod::Elem::unit());
    return class_of({RelTerm{unit, name}}).second;
}

int Realization::generator_degree(const std::string& name) const
{
    for (const auto& g : impl_->pres.generators)
        if (g.name == name)
            return g.degree;
    throw DomainError("unknown generator: " + name);
}

f2::BitVector Realization::act(const AlgElem& theta, int from_degree,
                               const f2::BitVector& v) const
{
    const auto tdeg = elem_degree(theta);
    if (!tdeg)
        throw DomainError("act needs a nonzero homogeneous algebra element");
    const int to_degree = from_degree + *tdeg;
    if (from_degree < 0 || to_degree > impl_->max_degree)
        throw DomainError("act out of realized range");
    if (v.size() != static_cast<std::size_t>(dim(from_degree)))
        throw DomainError("act: coordinate vector has wrong length");

    const auto& src = impl_->degrees[from_degree];
    const auto& dst = impl_->degrees[to_degree];
    const f2::BitVector ambient = impl_->lift(from_degree, v);
    f2::BitVector acc(dst.labels.size());
    for (std::size_t p = 0; p < ambient.size(); ++p) {
        if (!ambient.get(p))
            continue;
        const auto& label = src.labels[p];
        const int bdeg = from_degree - impl_->pres.generators[label.gen].degree;
        const AlgElem prod = impl_->alg.mul(theta, impl_->alg.element(bdeg, label.basis));
        if (elem_is_zero(prod))
            continue;
        const f2::BitVector coords = impl_->alg.expand(prod, bdeg + *tdeg);
        for (std::size_t c = 0; c < coords.size(); ++c)
            if (coords.get(c))
                acc.flip(dst.position.at({label.gen, c}));
    }
    return impl_->reduce_to_quotient(to_degree, acc);
}

f2::BitMatrix Realization::action_matrix(const AlgElem& theta, int from_degree) const
{
    const int n = dim(from_degree);
    const auto tdeg = elem_degree(theta);
    if (!tdeg)
        throw DomainError("action_matrix needs a homogeneous element");
    const int m = dim(from_degree + *tdeg);
    f2::BitMatrix out(n, m);
    for (int i = 0; i < n; ++i) {
        f2::BitVector e(n);
        e.set(i);
        out.set_row(i, act(theta, from_degree, e));
    }
    return out;
}

std::vector<std::pair<std::string, AlgElem>> Realization::action_generators() const
{
    std::vector<std::pair<std::string, AlgElem>> out;
    const bool tw = is_twisted(impl_->pres.algebra);
    const bool full = impl_->pres.algebra == AlgebraKind::FullA ||
                      impl_->pres.algebra == AlgebraKind::FullTwisted;
    for (int k = 1; k <= impl_->max_degree; k *= 2) {
        if (!full && k > 2)
            break;
        const steenrod::Elem sq = steenrod::Elem::mono({k});
        out.push_back({"Sq" + std::to_string(k),
                       tw ? AlgElem(twisted::Elem::from_steenrod(sq)) : AlgElem(sq)});
    }
    if (tw) {
        for (const auto& g : unstable::generators_up_to(kK, impl_->max_degree)) {
            twisted::Elem e;
            e.toggle(twisted::Term{unstable::Mon{{g, 1}}, {}});
            out.push_back({unstable::render(g), AlgElem(std::move(e))});
        }
    }
    return out;
}

DistinguishedClass unique_class(const Realization& r, const std::string& name, int degree)
{
    if (r.dim(degree) != 1)
        throw DomainError("degree " + std::to_string(degree) + " of the module is " +
                          std::to_string(r.dim(degree)) + "-dimensional, no unique class " +
                          name);
    f2::BitVector v(1);
    v.set(0);
    return DistinguishedClass{name, degree, std::move(v)};
}

TensorRealization::TensorRealization(const Realization& plain, const Realization& tw,
                                     int max_degree)
    : plain_(&plain), tw_(&tw), max_degree_(max_degree)
{
    if (plain.presentation().algebra != AlgebraKind::FullA)
        throw DomainError("tensor: left factor must be a FullA module");
    if (tw.presentation().algebra != AlgebraKind::FullTwisted)
        throw DomainError("tensor: right factor must be a FullTwisted module");
    if (plain.max_degree() < max_degree)
        throw DomainError("tensor: left factor realized to insufficient degree");
    slots_.resize(max_degree + 1);
    index_.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        for (int p = 0; p <= d; ++p) {
            const int np = plain.dim(p);
            // The right factor only matters above the left one's connectivity.
            if (np > 0 && d - p > tw.max_degree())
                throw DomainError("tensor: right factor realized to insufficient degree");
            if (np == 0)
                continue;
            const int nt = tw.dim(d - p);
            for (int i = 0; i < np; ++i)
                for (int j = 0; j < nt; ++j) {
                    index_[d][{p, {static_cast<std::size_t>(i), static_cast<std::size_t>(j)}}] =
                        slots_[d].size();
                    slots_[d].push_back(
                        Slot{p, static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
                }
        }
    }
}

int TensorRealization::dim(int degree) const
{
    if (degree < 0 || degree > max_degree_)
        throw DomainError("degree out of realized range");
    return static_cast<int>(slots_[degree].size());
}

series::PoincareSeries TensorRealization::poincare() const
{
    std::vector<std::int64_t> dims(max_degree_ + 1, 0);
    for (int d = 0; d <= max_degree_; ++d)
        dims[d] = dim(d);
    return series::PoincareSeries(std::move(dims));
}

std::size_t TensorRealization::index_of(int degree, int plain_degree, std::size_t pi,
                                        std::size_t ti) const
{
    return index_[degree].at({plain_degree, {pi, ti}});
}

f2::BitVector TensorRealization::embed(int plain_degree, const f2::BitVector& x, int tw_degree,
                                       const f2::BitVector& y) const
{
    const int d = plain_degree + tw_degree;
    f2::BitVector out(dim(d));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x.get(i))
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y.get(j))
                out.flip(index_of(d, plain_degree, i, j));
    }
    return out;
}

f2::BitVector TensorRealization::act(const twisted::Elem& theta, int from_degree,
                                     const f2::BitVector& v) const
{
    const auto tdeg = theta.degree();
    if (!tdeg)
        throw DomainError("act needs a homogeneous twisted element");
    const int to_degree = from_degree + *tdeg;
    if (to_degree > max_degree_)
        throw DomainError("act out of realized range");
    f2::BitVector out(dim(to_degree));
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (!v.get(s))
            continue;
        const Slot& slot = slots_[from_degree][s];
        const int qdeg = from_degree - slot.plain_degree;
        f2::BitVector ex(plain_->dim(slot.plain_degree));
        ex.set(slot.pi);
        f2::BitVector ey(tw_->dim(qdeg));
        ey.set(slot.ti);
        for (const auto& term : theta.terms()) {
            const int kdeg = unstable::degree(term.poly);
            for (const auto& [ap, app] : steenrod::coproduct(term.sq)) {
                // a'(x) (x) (k (x) a'')(y)
                const int pd = slot.plain_degree + steenrod::degree(ap);
                const f2::BitVector xa =
                    plain_->act(AlgElem(steenrod::Elem::mono(ap)), slot.plain_degree, ex);
                if (xa.is_zero())
                    continue;
                const f2::BitVector yb = tw_->act(
                    AlgElem(twisted::Elem::term(twisted::Term{term.poly, app})), qdeg, ey);
                if (yb.is_zero())
                    continue;
                out ^= embed(pd, xa, qdeg + kdeg + steenrod::degree(app), yb);
            }
        }
    }
    return out;
}

}  // namespace stw::fpmod
