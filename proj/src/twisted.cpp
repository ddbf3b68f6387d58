#include "stw/twisted.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "stw/errors.hpp"
#include "stw/f2.hpp"

namespace stw::twisted {

namespace {
    const unstable::Ambient kK = unstable::Ambient::K();

    unstable::Elem poly_mono_elem(const unstable::Mon& m)
    {
        return unstable::Elem::mono(kK, m);
    }
}  // namespace

Elem Elem::unit()
{
    return term(Term{});
}

Elem Elem::term(Term t)
{
    Elem e;
    e.terms_.insert(std::move(t));
    return e;
}

Elem Elem::from_poly(const unstable::Elem& k)
{
    if (k.ambient().kind != unstable::Ambient::Kind::K)
        throw DomainError("twisted terms take K-type polynomial parts");
    Elem e;
    for (const auto& m : k.terms())
        e.terms_.insert(Term{m, {}});
    return e;
}

Elem Elem::from_steenrod(const steenrod::Elem& a)
{
    Elem e;
    for (const auto& m : a.terms())
        e.terms_.insert(Term{{}, m});
    return e;
}

void Elem::toggle(const Term& t)
{
    auto it = terms_.find(t);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(t);
}

Elem& Elem::operator+=(const Elem& rhs)
{
    for (const auto& t : rhs.terms_)
        toggle(t);
    return *this;
}

std::optional<int> Elem::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = terms_.begin()->degree();
    for (const auto& t : terms_)
        if (t.degree() != d)
            return std::nullopt;
    return d;
}

Elem mul(const Elem& x, const Elem& y)
{
    Elem out;
    for (const auto& xt : x.terms()) {
        for (const auto& [ap, app] : steenrod::coproduct(xt.sq)) {
            for (const auto& yt : y.terms()) {
                // k a'(l) (x) a'' b
                const unstable::Elem acted = unstable::act_word(ap, poly_mono_elem(yt.poly));
                if (acted.is_zero())
                    continue;
                const steenrod::Elem right = steenrod::mul(app, yt.sq);
                if (right.is_zero())
                    continue;
                for (const auto& pm : acted.terms()) {
                    const unstable::Mon poly = unstable::mul(xt.poly, pm);
                    for (const auto& sm : right.terms())
                        out.toggle(Term{poly, sm});
                }
            }
        }
    }
    return out;
}

namespace {

    using PolyTensor = std::set<std::pair<unstable::Mon, unstable::Mon>>;

    void poly_tensor_toggle(PolyTensor& t, std::pair<unstable::Mon, unstable::Mon> p)
    {
        auto it = t.find(p);
        if (it != t.end())
            t.erase(it);
        else
            t.insert(std::move(p));
    }

    PolyTensor poly_tensor_of(const unstable::Elem& a, const unstable::Elem& b)
    {
        PolyTensor out;
        for (const auto& ma : a.terms())
            for (const auto& mb : b.terms())
                poly_tensor_toggle(out, {ma, mb});
        return out;
    }

    // Coproduct of a K generator. iota_1 and iota_2 are fixed by the group
    // structure of K; derived generators get Sq^I applied componentwise.
    PolyTensor k_coproduct_gen(const unstable::Gen& g)
    {
        static std::map<unstable::Gen, PolyTensor> cache;
        static std::mutex cache_mutex;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find(g);
            if (it != cache.end())
                return it->second;
        }

        PolyTensor out;
        const unstable::Elem one = unstable::Elem::one(kK);
        if (g.kind == unstable::Gen::Kind::Iota1) {
            const unstable::Elem i1 = unstable::Elem::gen(kK, g);
            out = poly_tensor_of(i1, one);
            for (const auto& p : poly_tensor_of(one, i1))
                poly_tensor_toggle(out, p);
        }
        else {
            const unstable::Elem i1 = unstable::Elem::gen(kK, unstable::Gen::iota1());
            const unstable::Elem i2 = unstable::Elem::gen(kK, unstable::Gen::iota2());
            // D(iota_2) = iota_2 (x) 1 + iota_1 (x) iota_1 + 1 (x) iota_2,
            // then apply the word componentwise with the Cartan rule.
            std::vector<std::pair<unstable::Elem, unstable::Elem>> base = {
                {i2, one}, {i1, i1}, {one, i2}};
            for (const auto& [u, v] : steenrod::coproduct(g.word)) {
                for (const auto& [x, y] : base) {
                    const unstable::Elem ux = unstable::act_word(u, x);
                    if (ux.is_zero())
                        continue;
                    const unstable::Elem vy = unstable::act_word(v, y);
                    if (vy.is_zero())
                        continue;
                    for (const auto& p : poly_tensor_of(ux, vy))
                        poly_tensor_toggle(out, p);
                }
            }
        }

        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(g, out);
        return out;
    }

    PolyTensor k_coproduct_mono(const unstable::Mon& m)
    {
        static std::map<unstable::Mon, PolyTensor> cache;
        static std::mutex cache_mutex;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find(m);
            if (it != cache.end())
                return it->second;
        }

        PolyTensor out;
        poly_tensor_toggle(out, {unstable::Mon{}, unstable::Mon{}});
        for (const auto& [g, e] : m) {
            const PolyTensor dg = k_coproduct_gen(g);
            for (int k = 0; k < e; ++k) {
                PolyTensor next;
                for (const auto& [a, b] : out)
                    for (const auto& [c, d] : dg)
                        poly_tensor_toggle(next, {unstable::mul(a, c), unstable::mul(b, d)});
                out = std::move(next);
            }
        }

        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(m, out);
        return out;
    }

    void tensor_toggle(TensorElem& t, std::pair<Term, Term> p)
    {
        auto it = t.find(p);
        if (it != t.end())
            t.erase(it);
        else
            t.insert(std::move(p));
    }

}  // namespace

TensorElem coproduct(const Elem& x)
{
    TensorElem out;
    for (const auto& t : x.terms()) {
        const PolyTensor dk = k_coproduct_mono(t.poly);
        const steenrod::TensorElem da = steenrod::coproduct(t.sq);
        for (const auto& [kp, kpp] : dk)
            for (const auto& [ap, app] : da)
                tensor_toggle(out, {Term{kp, ap}, Term{kpp, app}});
    }
    return out;
}

namespace {

    enum class Morphism { Phi, Psi };

    const Elem& generator_image(Morphism which, int letter)
    {
        static const Elem phi1 = [] {
            Elem e;
            e.toggle(Term{{}, {1}});
            e.toggle(Term{{{unstable::Gen::iota1(), 1}}, {}});
            return e;
        }();
        static const Elem phi2 = [] {
            Elem e;
            e.toggle(Term{{}, {2}});
            e.toggle(Term{{{unstable::Gen::iota1(), 1}}, {1}});
            e.toggle(Term{{{unstable::Gen::iota1(), 2}}, {}});
            e.toggle(Term{{{unstable::Gen::iota2(), 1}}, {}});
            return e;
        }();
        static const Elem psi2 = [] {
            Elem e;
            e.toggle(Term{{}, {2}});
            e.toggle(Term{{{unstable::Gen::iota1(), 1}}, {1}});
            e.toggle(Term{{{unstable::Gen::iota2(), 1}}, {}});
            return e;
        }();
        if (letter == 1)
            return phi1;  // psi and phi agree on Sq^1
        if (which == Morphism::Phi)
            return phi2;
        return psi2;
    }

    Elem word_image(Morphism which, const steenrod::Word& w)
    {
        static std::map<std::pair<int, steenrod::Word>, Elem> cache;
        static std::mutex cache_mutex;
        const auto key = std::make_pair(static_cast<int>(which), w);
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find(key);
            if (it != cache.end())
                return it->second;
        }

        Elem out = Elem::unit();
        for (int letter : w)
            out = mul(out, generator_image(which, letter));

        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, out);
        return out;
    }

    Elem steenrod_image(Morphism which, const steenrod::Elem& a)
    {
        const auto words = steenrod::a1_word_expression(a);
        if (!words)
            throw DomainError("element " + steenrod::render(a) +
                              " is not in the subalgebra generated by Sq1 and Sq2");
        Elem out;
        for (const auto& w : *words)
            out += word_image(which, w);
        return out;
    }

    // Splits x into its K-monomial columns: k -> sum of Steenrod parts.
    std::map<unstable::Mon, steenrod::Elem> poly_columns(const Elem& x)
    {
        std::map<unstable::Mon, steenrod::Elem> cols;
        for (const auto& t : x.terms())
            cols[t.poly].toggle(t.sq);
        return cols;
    }

    Elem extended_image(Morphism which, const Elem& x, const char* what)
    {
        Elem out;
        for (const auto& [k, a] : poly_columns(x)) {
            Elem img;
            try {
                img = steenrod_image(which, a);
            }
            catch (const DomainError&) {
                throw DomainError(std::string(what) + ": element is not in the twisted A(1)");
            }
            out += mul(Elem::term(Term{k, {}}), img);
        }
        return out;
    }

}  // namespace

Elem phi(const steenrod::Elem& a)
{
    return steenrod_image(Morphism::Phi, a);
}

Elem psi(const Elem& x)
{
    return extended_image(Morphism::Psi, x, "psi");
}

Elem phi_extended(const Elem& x)
{
    return extended_image(Morphism::Phi, x, "phi_extended");
}

bool in_twisted_a1(const Elem& x)
{
    for (const auto& [k, a] : poly_columns(x))
        if (!steenrod::in_a1(a))
            return false;
    return true;
}

const std::vector<Term>& full_basis(int degree)
{
    if (degree < 0)
        throw DomainError("negative degree");
    static std::map<int, std::vector<Term>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(degree);
        if (it != cache.end())
            return it->second;
    }

    std::vector<Term> basis;
    for (int j = 0; j <= degree; ++j)
        for (const auto& k : unstable::monomials_of_degree(kK, j))
            for (const auto& a : steenrod::admissible_basis(degree - j))
                basis.push_back(Term{k, a});
    std::sort(basis.begin(), basis.end());

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(degree, std::move(basis)).first->second;
}

std::vector<Elem> basis(TwistedSubalgebraId id, int degree)
{
    std::vector<Elem> out;
    if (id == TwistedSubalgebraId::FullTwisted) {
        for (const auto& t : full_basis(degree))
            out.push_back(Elem::term(t));
        return out;
    }
    for (int j = 0; j <= degree; ++j) {
        const auto& a1 = steenrod::a1_basis(j);
        if (a1.empty())
            continue;
        for (const auto& k : unstable::monomials_of_degree(kK, degree - j)) {
            for (const auto& e : a1) {
                Elem prod;
                for (const auto& m : e.terms())
                    prod.toggle(Term{k, m});
                out.push_back(std::move(prod));
            }
        }
    }
    return out;
}

series::PoincareSeries dimension_series(TwistedSubalgebraId id, int max_degree)
{
    std::vector<std::int64_t> dims(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        if (id == TwistedSubalgebraId::FullTwisted) {
            dims[d] = static_cast<std::int64_t>(full_basis(d).size());
        }
        else {
            std::int64_t n = 0;
            for (int j = 0; j <= d; ++j)
                n += static_cast<std::int64_t>(steenrod::a1_basis(j).size()) *
                     static_cast<std::int64_t>(unstable::monomials_of_degree(kK, d - j).size());
            dims[d] = n;
        }
    }
    return series::PoincareSeries(std::move(dims));
}

bool VerifyReport::all_pass() const
{
    for (const auto& id : identities)
        if (!id.pass)
            return false;
    return true;
}

namespace {

    // The element both phi(Sq^2)^2 and phi(Sq^1)phi(Sq^2)phi(Sq^1) reduce to.
    Elem relation_target()
    {
        const unstable::Gen i1 = unstable::Gen::iota1();
        const unstable::Gen sq1i2 = unstable::Gen::iota2({1});
        Elem e;
        e.toggle(Term{{}, {3, 1}});
        e.toggle(Term{{{i1, 1}}, {3}});
        e.toggle(Term{{{i1, 1}}, {2, 1}});
        e.toggle(Term{{{i1, 3}}, {1}});
        e.toggle(Term{{{sq1i2, 1}}, {1}});
        e.toggle(Term{{{i1, 1}, {sq1i2, 1}}, {}});
        return e;
    }

    TensorElem phi_tensor_of_cartan(int n)
    {
        TensorElem out;
        for (const auto& [u, v] : steenrod::coproduct(steenrod::Mono{n})) {
            const Elem pu = phi(steenrod::Elem::mono(u));
            const Elem pv = phi(steenrod::Elem::mono(v));
            for (const auto& tu : pu.terms())
                for (const auto& tv : pv.terms())
                    tensor_toggle(out, {tu, tv});
        }
        return out;
    }

}  // namespace

VerifyReport verify_appendix()
{
    VerifyReport report;
    const Elem phi1 = phi(steenrod::Elem::mono({1}));
    const Elem phi2 = phi(steenrod::Elem::mono({2}));

    {
        IdentityReport id;
        id.name = "phi(Sq1)^2 = 0";
        const Elem square = mul(phi1, phi1);
        id.pass = square.is_zero();
        id.lines.push_back("phi(Sq1) = " + render(phi1));
        id.lines.push_back("phi(Sq1)^2 = " + render(square));
        report.identities.push_back(std::move(id));
    }
    {
        IdentityReport id;
        id.name = "phi(Sq1)phi(Sq2)phi(Sq1) = phi(Sq2)^2";
        const Elem target = relation_target();
        const Elem mid = mul(phi1, phi2);
        const Elem lhs = mul(mid, phi1);
        const Elem rhs = mul(phi2, phi2);
        id.pass = (lhs == rhs) && (lhs == target);
        id.lines.push_back("phi(Sq2) = " + render(phi2));
        id.lines.push_back("phi(Sq1)phi(Sq2) = " + render(mid));
        id.lines.push_back("phi(Sq1)phi(Sq2)phi(Sq1) = " + render(lhs));
        id.lines.push_back("phi(Sq2)^2 = " + render(rhs));
        id.lines.push_back("expected = " + render(target));
        report.identities.push_back(std::move(id));
    }
    for (int n : {1, 2}) {
        IdentityReport id;
        id.name = "Delta phi(Sq" + std::to_string(n) + ") = (phi x phi) Delta(Sq" +
                  std::to_string(n) + ")";
        const TensorElem lhs = coproduct(n == 1 ? phi1 : phi2);
        const TensorElem rhs = phi_tensor_of_cartan(n);
        id.pass = lhs == rhs;
        id.lines.push_back("lhs = " + render(lhs));
        id.lines.push_back("rhs = " + render(rhs));
        report.identities.push_back(std::move(id));
    }
    return report;
}

namespace {

    // Writes Delta(alpha) as a sum of (A(1) basis) x (A(1) basis) pairs.
    // Solvable because A(1) is a sub-Hopf-algebra.
    std::vector<std::pair<steenrod::Elem, steenrod::Elem>> a1_coproduct_pairs(
        const steenrod::Elem& alpha)
    {
        const auto deg = alpha.degree();
        if (!deg)
            throw DomainError("a1_coproduct_pairs needs a homogeneous element");
        const steenrod::TensorElem delta = steenrod::coproduct(alpha);

        std::vector<std::pair<steenrod::Elem, steenrod::Elem>> out;
        for (int i = 0; i <= *deg; ++i) {
            const int j = *deg - i;
            const auto& advi = steenrod::admissible_basis(i);
            const auto& advj = steenrod::admissible_basis(j);
            auto pair_index = [&](const steenrod::Mono& a, const steenrod::Mono& b) {
                const auto ia = std::lower_bound(advi.begin(), advi.end(), a) - advi.begin();
                const auto ib = std::lower_bound(advj.begin(), advj.end(), b) - advj.begin();
                return static_cast<std::size_t>(ia) * advj.size() + static_cast<std::size_t>(ib);
            };

            f2::BitVector target(advi.size() * advj.size());
            bool seen = false;
            for (const auto& [a, b] : delta) {
                if (steenrod::degree(a) != i)
                    continue;
                target.flip(pair_index(a, b));
                seen = true;
            }
            if (!seen || target.is_zero())
                continue;

            const auto& bi = steenrod::a1_basis(i);
            const auto& bj = steenrod::a1_basis(j);
            f2::SpanSolver span(target.size());
            std::vector<std::pair<std::size_t, std::size_t>> labels;
            for (std::size_t p = 0; p < bi.size(); ++p) {
                for (std::size_t q = 0; q < bj.size(); ++q) {
                    f2::BitVector row(target.size());
                    for (const auto& ma : bi[p].terms())
                        for (const auto& mb : bj[q].terms())
                            row.flip(pair_index(ma, mb));
                    span.add(row);
                    labels.push_back({p, q});
                }
            }
            const auto combo = span.express(target);
            if (!combo)
                throw DomainError("coproduct does not lie in A(1) x A(1)");
            for (auto idx : *combo)
                out.push_back({bi[labels[idx].first], bj[labels[idx].second]});
        }
        return out;
    }

}  // namespace

VerifyReport verify_commutation(int max_degree)
{
    VerifyReport report;
    for (int ad = 0; ad <= 6; ++ad) {
        for (const auto& alpha : steenrod::a1_basis(ad)) {
            IdentityReport id;
            id.name = "alpha = " + steenrod::render(alpha);
            const Elem phia = phi(alpha);
            const auto pairs = a1_coproduct_pairs(alpha);
            bool ok = true;
            for (int ld = 0; ld <= max_degree && ok; ++ld) {
                for (const auto& l : unstable::monomials_of_degree(kK, ld)) {
                    const Elem lhs = mul(phia, Elem::term(Term{l, {}}));
                    Elem rhs;
                    for (const auto& [ap, app] : pairs) {
                        const unstable::Elem al = unstable::act(ap, poly_mono_elem(l));
                        if (al.is_zero())
                            continue;
                        rhs += mul(Elem::from_poly(al), phi(app));
                    }
                    if (lhs != rhs) {
                        ok = false;
                        id.lines.push_back("l = " + unstable::render(l));
                        id.lines.push_back("lhs = " + render(lhs));
                        id.lines.push_back("rhs = " + render(rhs));
                        break;
                    }
                }
            }
            id.pass = ok;
            if (ok)
                id.lines.push_back("verified for all K monomials of degree <= " +
                                   std::to_string(max_degree));
            report.identities.push_back(std::move(id));
        }
    }
    return report;
}

std::string render(const Term& t)
{
    return unstable::render(t.poly) + " | " + steenrod::render(t.sq);
}

std::string render(const Elem& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& t : x.terms()) {
        if (!out.empty())
            out += " + ";
        out += render(t);
    }
    return out;
}

std::string render(const TensorElem& t)
{
    if (t.empty())
        return "0";
    std::string out;
    for (const auto& [a, b] : t) {
        if (!out.empty())
            out += " + ";
        out += "(" + render(a) + ") (x) (" + render(b) + ")";
    }
    return out;
}

}  // namespace stw::twisted
