#include "stw/unstable.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <tuple>

#include "stw/errors.hpp"
#include "stw/f2.hpp"

namespace stw::unstable {

Gen Gen::iota1()
{
    return Gen{Kind::Iota1, {}, 0};
}

Gen Gen::iota2(steenrod::Mono word)
{
    if (!steenrod::is_admissible(word) || steenrod::excess(word) > 1)
        throw DomainError("iota_2 generator words must be admissible of excess <= 1");
    return Gen{Kind::Iota2Derived, std::move(word), 0};
}

Gen Gen::sw(int index)
{
    if (index < 1)
        throw DomainError("Stiefel-Whitney index must be >= 1");
    return Gen{Kind::StiefelWhitney, {}, index};
}

int Gen::degree() const
{
    switch (kind) {
    case Kind::Iota1:
        return 1;
    case Kind::Iota2Derived:
        return 2 + steenrod::degree(word);
    case Kind::StiefelWhitney:
        return index;
    }
    return 0;
}

bool Gen::operator<(const Gen& rhs) const
{
    return std::tie(kind, word, index) < std::tie(rhs.kind, rhs.word, rhs.index);
}

int degree(const Mon& m)
{
    int d = 0;
    for (const auto& [g, e] : m)
        d += g.degree() * e;
    return d;
}

Mon mul(const Mon& a, const Mon& b)
{
    Mon out = a;
    for (const auto& [g, e] : b)
        out[g] += e;
    return out;
}

Elem Elem::one(Ambient amb)
{
    Elem e(amb);
    e.terms_.insert(Mon{});
    return e;
}

Elem Elem::gen(Ambient amb, const Gen& g)
{
    Elem e(amb);
    e.terms_.insert(Mon{{g, 1}});
    return e;
}

Elem Elem::mono(Ambient amb, Mon m)
{
    Elem e(amb);
    e.terms_.insert(std::move(m));
    return e;
}

void Elem::toggle(const Mon& m)
{
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(m);
}

Elem& Elem::operator+=(const Elem& rhs)
{
    if (!(amb_ == rhs.amb_) && !rhs.terms_.empty() && !terms_.empty())
        throw DomainError("adding elements of different ambient algebras");
    if (terms_.empty() && !rhs.terms_.empty())
        amb_ = rhs.amb_;
    for (const auto& m : rhs.terms_)
        toggle(m);
    return *this;
}

std::optional<int> Elem::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = unstable::degree(*terms_.begin());
    for (const auto& m : terms_)
        if (unstable::degree(m) != d)
            return std::nullopt;
    return d;
}

Elem mul(const Elem& a, const Elem& b)
{
    if (!(a.ambient() == b.ambient()) && !a.is_zero() && !b.is_zero())
        throw DomainError("multiplying elements of different ambient algebras");
    Elem out(a.ambient());
    for (const auto& ma : a.terms())
        for (const auto& mb : b.terms())
            out.toggle(mul(ma, mb));
    return out;
}

Elem pow(const Elem& a, int n)
{
    Elem out = Elem::one(a.ambient());
    for (int i = 0; i < n; ++i)
        out = mul(out, a);
    return out;
}

namespace {

    using steenrod::Mono;

    // Sq^J iota_2 for admissible J: a generator when excess(J) <= 1, a square
    // when the leading entry equals the degree below it, zero otherwise.
    Elem eval_admissible_on_iota2(const Ambient& amb, const Mono& J)
    {
        if (steenrod::excess(J) <= 1)
            return Elem::gen(amb, Gen::iota2(J));
        const Mono tail(J.begin() + 1, J.end());
        const int below = 2 + steenrod::degree(tail);
        if (J[0] > below)
            return Elem::zero(amb);
        Elem inner = eval_admissible_on_iota2(amb, tail);
        return mul(inner, inner);
    }

    Elem sq_gen(const Ambient& amb, int i, const Gen& g);

    // Cartan expansion over the factors of a monomial.
    Elem sq_mon(const Ambient& amb, int i, const Mon& m)
    {
        if (i == 0)
            return Elem::mono(amb, m);
        if (m.empty())
            return Elem::zero(amb);

        static std::map<std::tuple<Ambient, int, Mon>, Elem> cache;
        static std::mutex cache_mutex;
        const auto key = std::make_tuple(amb, i, m);
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find(key);
            if (it != cache.end())
                return it->second;
        }

        // Split off one copy of the first generator.
        const Gen g = m.begin()->first;
        Mon rest = m;
        if (--rest[g] == 0)
            rest.erase(g);

        Elem out(amb);
        for (int a = 0; a <= i; ++a) {
            if (a > g.degree())
                break;
            Elem left = sq_gen(amb, a, g);
            if (left.is_zero())
                continue;
            Elem right = sq_mon(amb, i - a, rest);
            out += mul(left, right);
        }

        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, out);
        return out;
    }

    Elem sq_gen(const Ambient& amb, int i, const Gen& g)
    {
        assert(i >= 0);
        if (i == 0)
            return Elem::gen(amb, g);
        const int d = g.degree();
        if (i > d)
            return Elem::zero(amb);
        if (i == d) {
            Elem e = Elem::gen(amb, g);
            return mul(e, e);
        }
        switch (g.kind) {
        case Gen::Kind::Iota1:
            return Elem::zero(amb);  // covered by i > d and i == d above
        case Gen::Kind::Iota2Derived: {
            // Straighten Sq^i Sq^I via Adem, then evaluate each admissible
            // word on iota_2.
            steenrod::Word w;
            w.reserve(g.word.size() + 1);
            w.push_back(i);
            w.insert(w.end(), g.word.begin(), g.word.end());
            const steenrod::Elem straightened = steenrod::adem_normalize(w);
            Elem out(amb);
            for (const auto& J : straightened.terms())
                out += eval_admissible_on_iota2(amb, J);
            return out;
        }
        case Gen::Kind::StiefelWhitney: {
            // Wu formula, i < j: Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}.
            const int j = g.index;
            Elem out(amb);
            for (int t = 0; t <= i; ++t) {
                if (!steenrod::binom_mod2(j - i + t - 1, t))
                    continue;
                if (j + t > amb.vars)
                    continue;  // w_k = 0 above the variable bound
                Mon m;
                m[Gen::sw(j + t)] = 1;
                if (i - t > 0) {
                    if (i - t > amb.vars)
                        continue;
                    m[Gen::sw(i - t)] += 1;
                }
                out.toggle(m);
            }
            return out;
        }
        }
        return Elem::zero(amb);
    }

}  // namespace

Elem sq_action(int i, const Elem& x)
{
    if (i < 0)
        throw DomainError("Sq exponent must be nonnegative");
    Elem out(x.ambient());
    for (const auto& m : x.terms())
        out += sq_mon(x.ambient(), i, m);
    return out;
}

Elem act_word(const steenrod::Word& w, const Elem& x)
{
    Elem out = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = sq_action(*it, out);
    return out;
}

Elem act(const steenrod::Elem& a, const Elem& x)
{
    Elem out(x.ambient());
    for (const auto& m : a.terms())
        out += act_word(m, x);
    return out;
}

namespace {

    void serre_words(int max_word_degree, int cap, steenrod::Mono& prefix,
                     std::vector<steenrod::Mono>& out)
    {
        // Admissible words of excess <= 1, any degree up to the bound. The
        // excess condition is checked on the completed word.
        if (steenrod::excess(prefix) <= 1 || prefix.empty())
            out.push_back(prefix);
        for (int i = 1; i <= std::min(cap, max_word_degree); ++i) {
            prefix.push_back(i);
            serre_words(max_word_degree - i, i / 2, prefix, out);
            prefix.pop_back();
        }
    }

}  // namespace

std::vector<Gen> generators_up_to(const Ambient& amb, int max_degree)
{
    std::vector<Gen> out;
    if (amb.kind == Ambient::Kind::BO) {
        for (int i = 1; i <= std::min(max_degree, amb.vars); ++i)
            out.push_back(Gen::sw(i));
        return out;
    }
    if (max_degree >= 1)
        out.push_back(Gen::iota1());
    if (max_degree >= 2) {
        // Sq^I iota_2 of degree 2+|I| <= max_degree, admissible, excess <= 1.
        std::vector<steenrod::Mono> words;
        steenrod::Mono prefix;
        serre_words(max_degree - 2, max_degree, prefix, words);
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        for (const auto& w : words)
            if (steenrod::excess(w) <= 1)
                out.push_back(Gen::iota2(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Mon>& monomials_of_degree(const Ambient& amb, int d)
{
    if (d < 0)
        throw DomainError("negative degree");
    static std::map<std::pair<Ambient, int>, std::vector<Mon>> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(amb, d);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    const std::vector<Gen> gens = generators_up_to(amb, d);
    std::vector<Mon> result;
    // Assign exponents generator by generator.
    struct Frame {
        std::size_t gi;
        int remaining;
        Mon partial;
    };
    std::vector<Frame> stack;
    stack.push_back({0, d, Mon{}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.remaining == 0) {
            result.push_back(std::move(f.partial));
            continue;
        }
        if (f.gi >= gens.size())
            continue;
        const int gd = gens[f.gi].degree();
        for (int e = 0; e * gd <= f.remaining; ++e) {
            Frame next{f.gi + 1, f.remaining - e * gd, f.partial};
            if (e > 0)
                next.partial[gens[f.gi]] = e;
            stack.push_back(std::move(next));
        }
    }
    std::sort(result.begin(), result.end());

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

series::PoincareSeries dimension_series(const Ambient& amb, int max_degree)
{
    std::vector<std::int64_t> dims(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d)
        dims[d] = static_cast<std::int64_t>(monomials_of_degree(amb, d).size());
    return series::PoincareSeries(std::move(dims));
}

Elem classify_iota_to_w(const Elem& x, int vars)
{
    if (x.ambient().kind != Ambient::Kind::K)
        throw DomainError("classify_iota_to_w expects a K-type element");
    const Ambient target = Ambient::BO(vars);
    Elem out(target);
    for (const auto& m : x.terms()) {
        if (degree(m) > vars)
            throw DomainError("variable bound " + std::to_string(vars) +
                              " too small for a degree-" + std::to_string(degree(m)) + " image");
        Elem factor = Elem::one(target);
        for (const auto& [g, e] : m) {
            Elem image(target);
            if (g.kind == Gen::Kind::Iota1) {
                image = Elem::gen(target, Gen::sw(1));
            }
            else {
                Elem w2 = Elem::gen(target, Gen::sw(2));
                image = act_word(g.word, w2);
            }
            for (int k = 0; k < e; ++k)
                factor = mul(factor, image);
        }
        out += factor;
    }
    return out;
}

series::PoincareSeries bspin_series(int max_degree)
{
    if (max_degree > 31)
        throw DomainError("the H*(BSpin) truncation model is invalid from degree 32 on");
    const Ambient amb = Ambient::BO(std::max(max_degree, 2));
    const Elem w1 = Elem::gen(amb, Gen::sw(1));
    const Elem w2 = Elem::gen(amb, Gen::sw(2));

    std::vector<std::int64_t> dims(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        const auto& monos = monomials_of_degree(amb, d);
        std::map<Mon, std::size_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i)
            index[monos[i]] = i;

        // Ideal span in degree d: a(w_i) * x over admissible a and monomials x.
        f2::SpanSolver span(monos.size());
        for (const Elem* w : {&w1, &w2}) {
            const int wd = *(*w).degree();
            for (int ad = 0; ad + wd <= d; ++ad) {
                for (const auto& a : steenrod::admissible_basis(ad)) {
                    const Elem awi = act_word(a, *w);
                    if (awi.is_zero())
                        continue;
                    for (const auto& x : monomials_of_degree(amb, d - wd - ad)) {
                        const Elem v = mul(awi, Elem::mono(amb, x));
                        f2::BitVector row(monos.size());
                        for (const auto& t : v.terms())
                            row.flip(index.at(t));
                        span.add(row);
                    }
                }
            }
        }
        dims[d] = static_cast<std::int64_t>(monos.size() - span.rank());
    }
    return series::PoincareSeries(std::move(dims));
}

std::string render(const Gen& g)
{
    switch (g.kind) {
    case Gen::Kind::Iota1:
        return "i1";
    case Gen::Kind::Iota2Derived:
        return g.word.empty() ? "i2" : steenrod::render(g.word) + " i2";
    case Gen::Kind::StiefelWhitney:
        return "w" + std::to_string(g.index);
    }
    return "?";
}

std::string render(const Mon& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (const auto& [g, e] : m) {
        if (!out.empty())
            out += ' ';
        out += render(g);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string render(const Elem& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& m : e.terms()) {
        if (!out.empty())
            out += " + ";
        out += render(m);
    }
    return out;
}

}  // namespace stw::unstable
