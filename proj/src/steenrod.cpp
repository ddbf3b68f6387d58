#include "stw/steenrod.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "stw/errors.hpp"
#include "stw/f2.hpp"

namespace stw::steenrod {

int degree(const Word& w)
{
    int d = 0;
    for (int i : w)
        d += i;
    return d;
}

int excess(const Mono& m)
{
    if (m.empty())
        return 0;
    int rest = 0;
    for (std::size_t j = 1; j < m.size(); ++j)
        rest += m[j];
    return m[0] - rest;
}

bool is_admissible(const Mono& m)
{
    for (int i : m)
        if (i < 1)
            return false;
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
        if (m[j] < 2 * m[j + 1])
            return false;
    return true;
}

bool binom_mod2(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return false;
    return (n & k) == k;
}

Elem Elem::mono(Mono m)
{
    Elem e;
    e.terms_.insert(std::move(m));
    return e;
}

void Elem::toggle(const Mono& m)
{
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(m);
}

Elem& Elem::operator+=(const Elem& rhs)
{
    for (const auto& m : rhs.terms_)
        toggle(m);
    return *this;
}

std::optional<int> Elem::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = steenrod::degree(*terms_.begin());
    for (const auto& m : terms_)
        if (steenrod::degree(m) != d)
            return std::nullopt;
    return d;
}

namespace {

    // Sq^a applied on the left of an admissible monomial, fully normalized.
    Elem sq_left_mono(int a, const Mono& m);

    Elem sq_left(int a, const Elem& e)
    {
        Elem out;
        for (const auto& m : e.terms())
            out += sq_left_mono(a, m);
        return out;
    }

    Elem sq_left_mono(int a, const Mono& m)
    {
        assert(a >= 1);
        if (m.empty() || a >= 2 * m[0]) {
            Mono res;
            res.reserve(m.size() + 1);
            res.push_back(a);
            res.insert(res.end(), m.begin(), m.end());
            return Elem::mono(std::move(res));
        }

        // Concurrent readers, serialized insertion.
        static std::map<Word, Elem> cache;
        static std::shared_mutex cache_mutex;
        Word key;
        key.reserve(m.size() + 1);
        key.push_back(a);
        key.insert(key.end(), m.begin(), m.end());
        {
            std::shared_lock lock(cache_mutex);
            auto it = cache.find(key);
            if (it != cache.end())
                return it->second;
        }

        // Adem: Sq^a Sq^b = sum_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c for a < 2b.
        const int b = m[0];
        const Mono tail(m.begin() + 1, m.end());
        Elem out;
        for (int c = 0; 2 * c <= a; ++c) {
            if (!binom_mod2(b - c - 1, a - 2 * c))
                continue;
            if (c == 0) {
                out += sq_left_mono(a + b, tail);
            }
            else {
                Elem inner = sq_left_mono(c, tail);
                out += sq_left(a + b - c, inner);
            }
        }

        std::unique_lock lock(cache_mutex);
        cache.emplace(std::move(key), out);
        return out;
    }

}  // namespace

Elem adem_normalize(const Word& w)
{
    Elem result = Elem::unit();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int a = *it;
        if (a < 0)
            throw DomainError("negative Sq exponent");
        if (a == 0)
            continue;  // Sq^0 = 1
        result = sq_left(a, result);
    }
    return result;
}

Elem mul(const Mono& a, const Mono& b)
{
    // The right factor is already admissible, so only the left letters need
    // to be folded in.
    Elem result = Elem::mono(b);
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        result = sq_left(*it, result);
    return result;
}

Elem mul(const Elem& a, const Elem& b)
{
    Elem out;
    for (const auto& ma : a.terms())
        for (const auto& mb : b.terms())
            out += mul(ma, mb);
    return out;
}

namespace {
    void tensor_toggle(TensorElem& t, std::pair<Mono, Mono> p)
    {
        auto it = t.find(p);
        if (it != t.end())
            t.erase(it);
        else
            t.insert(std::move(p));
    }
}  // namespace

TensorElem coproduct(const Mono& m)
{
    static std::map<Mono, TensorElem> cache;
    static std::shared_mutex cache_mutex;
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }

    // Expand multiplicatively over the letters, then normalize both factors.
    std::set<std::pair<Word, Word>> pairs;
    pairs.insert({Word{}, Word{}});
    for (int n : m) {
        std::set<std::pair<Word, Word>> next;
        for (const auto& [u, v] : pairs) {
            for (int i = 0; i <= n; ++i) {
                Word nu = u, nv = v;
                if (i > 0)
                    nu.push_back(i);
                if (n - i > 0)
                    nv.push_back(n - i);
                auto key = std::make_pair(std::move(nu), std::move(nv));
                auto it = next.find(key);
                if (it != next.end())
                    next.erase(it);
                else
                    next.insert(std::move(key));
            }
        }
        pairs = std::move(next);
    }

    TensorElem out;
    for (const auto& [u, v] : pairs) {
        const Elem eu = adem_normalize(u);
        const Elem ev = adem_normalize(v);
        for (const auto& mu : eu.terms())
            for (const auto& mv : ev.terms())
                tensor_toggle(out, {mu, mv});
    }

    std::unique_lock lock(cache_mutex);
    cache.emplace(m, out);
    return out;
}

TensorElem coproduct(const Elem& a)
{
    TensorElem out;
    for (const auto& m : a.terms())
        for (const auto& p : coproduct(m))
            tensor_toggle(out, p);
    return out;
}

namespace {

    void enumerate_admissible(int d, int cap, Mono& prefix, std::vector<Mono>& out)
    {
        if (d == 0) {
            out.push_back(prefix);
            return;
        }
        for (int i = 1; i <= std::min(cap, d); ++i) {
            prefix.push_back(i);
            enumerate_admissible(d - i, i / 2, prefix, out);
            prefix.pop_back();
        }
    }

}  // namespace

const std::vector<Mono>& admissible_basis(int degree)
{
    if (degree < 0)
        throw DomainError("negative degree");
    static std::map<int, std::vector<Mono>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(degree);
        if (it != cache.end())
            return it->second;
    }
    std::vector<Mono> basis;
    Mono prefix;
    enumerate_admissible(degree, degree, prefix, basis);
    std::sort(basis.begin(), basis.end());
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(degree, std::move(basis)).first->second;
}

std::vector<std::size_t> coords(const Elem& a, int degree)
{
    const auto& basis = admissible_basis(degree);
    std::vector<std::size_t> out;
    for (const auto& m : a.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || *it != m)
            throw DomainError("monomial " + render(m) + " is not admissible of degree " +
                              std::to_string(degree));
        out.push_back(static_cast<std::size_t>(it - basis.begin()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

    f2::BitVector elem_vector(const Elem& a, int degree)
    {
        f2::BitVector v(admissible_basis(degree).size());
        for (auto idx : coords(a, degree))
            v.set(idx);
        return v;
    }

    // Degreewise data for the subalgebra generated by Sq^1 and Sq^2: a basis,
    // one {1,2}-word decomposition per basis element, and the echelonized
    // span over admissible coordinates.
    struct A1Data {
        std::vector<Elem> basis;
        std::vector<std::vector<Word>> word_exprs;
        f2::SpanSolver span;
        explicit A1Data(std::size_t dim) : span(dim) {}
    };

    const A1Data& a1_data(int degree)
    {
        static std::map<int, A1Data> cache;
        static std::mutex cache_mutex;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find(degree);
            if (it != cache.end())
                return it->second;
        }

        const std::size_t dim = admissible_basis(degree).size();
        A1Data data(dim);
        if (degree == 0) {
            data.basis.push_back(Elem::unit());
            data.word_exprs.push_back({Word{}});
            data.span.add(elem_vector(Elem::unit(), 0));
        }
        else {
            // Every positive-degree product of the generators factors as
            // Sq^1 or Sq^2 times a shorter product.
            for (int letter : {1, 2}) {
                if (degree - letter < 0)
                    continue;
                const A1Data& prev = a1_data(degree - letter);
                for (std::size_t i = 0; i < prev.basis.size(); ++i) {
                    Elem cand = sq_left(letter, prev.basis[i]);
                    if (cand.is_zero())
                        continue;
                    if (!data.span.add(elem_vector(cand, degree)))
                        continue;
                    std::vector<Word> words;
                    words.reserve(prev.word_exprs[i].size());
                    for (const Word& w : prev.word_exprs[i]) {
                        Word nw;
                        nw.reserve(w.size() + 1);
                        nw.push_back(letter);
                        nw.insert(nw.end(), w.begin(), w.end());
                        words.push_back(std::move(nw));
                    }
                    data.basis.push_back(std::move(cand));
                    data.word_exprs.push_back(std::move(words));
                }
            }
        }

        std::lock_guard<std::mutex> lock(cache_mutex);
        auto [it, inserted] = cache.emplace(degree, std::move(data));
        (void)inserted;
        return it->second;
    }

    // Split an element into homogeneous pieces keyed by degree.
    std::map<int, Elem> homogeneous_parts(const Elem& a)
    {
        std::map<int, Elem> parts;
        for (const auto& m : a.terms())
            parts[degree(m)].toggle(m);
        return parts;
    }

}  // namespace

const std::vector<Elem>& a1_basis(int degree)
{
    return a1_data(degree).basis;
}

std::vector<Elem> basis(AlgebraId alg, int degree)
{
    if (degree < 0)
        throw DomainError("negative degree");
    if (alg == AlgebraId::A1)
        return a1_basis(degree);
    std::vector<Elem> out;
    for (const auto& m : admissible_basis(degree))
        out.push_back(Elem::mono(m));
    return out;
}

series::PoincareSeries dimension_series(AlgebraId alg, int max_degree)
{
    std::vector<std::int64_t> dims(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d)
        dims[d] = static_cast<std::int64_t>(alg == AlgebraId::A1 ? a1_basis(d).size()
                                                                 : admissible_basis(d).size());
    return series::PoincareSeries(std::move(dims));
}

bool in_a1(const Elem& a)
{
    for (const auto& [d, part] : homogeneous_parts(a))
        if (!a1_data(d).span.contains(elem_vector(part, d)))
            return false;
    return true;
}

std::optional<std::vector<Word>> a1_word_expression(const Elem& a)
{
    std::vector<Word> words;
    for (const auto& [d, part] : homogeneous_parts(a)) {
        const A1Data& data = a1_data(d);
        auto combo = data.span.express(elem_vector(part, d));
        if (!combo)
            return std::nullopt;
        for (auto idx : *combo)
            words.insert(words.end(), data.word_exprs[idx].begin(), data.word_exprs[idx].end());
    }
    // Cancel duplicated words mod 2.
    std::sort(words.begin(), words.end());
    std::vector<Word> out;
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(words[i]);
        i = j;
    }
    return out;
}

std::string render(const Mono& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += ' ';
        out += "Sq" + std::to_string(m[i]);
    }
    return out;
}

std::string render(const Elem& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& m : a.terms()) {
        if (!out.empty())
            out += " + ";
        out += render(m);
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
        out += render(a) + " (x) " + render(b);
    }
    return out;
}

}  // namespace stw::steenrod
