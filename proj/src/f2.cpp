#include "stw/f2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace stw::f2 {

namespace {
    constexpr std::size_t kWordBits = 64;

    std::size_t words_for(std::size_t bits)
    {
        return (bits + kWordBits - 1) / kWordBits;
    }
}  // namespace

BitVector::BitVector(std::size_t length) : len_(length), w_(words_for(length), 0) {}

bool BitVector::get(std::size_t i) const
{
    assert(i < len_);
    return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value)
{
    assert(i < len_);
    const std::uint64_t mask = std::uint64_t(1) << (i % kWordBits);
    if (value)
        w_[i / kWordBits] |= mask;
    else
        w_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i)
{
    assert(i < len_);
    w_[i / kWordBits] ^= std::uint64_t(1) << (i % kWordBits);
}

bool BitVector::is_zero() const
{
    for (auto word : w_)
        if (word)
            return false;
    return true;
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (auto word : w_)
        n += std::popcount(word);
    return n;
}

std::optional<std::size_t> BitVector::first_set() const
{
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return k * kWordBits + std::countr_zero(w_[k]);
    return std::nullopt;
}

BitVector& BitVector::operator^=(const BitVector& rhs)
{
    assert(len_ == rhs.len_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        w_[k] ^= rhs.w_[k];
    return *this;
}

bool BitVector::operator<(const BitVector& rhs) const
{
    if (len_ != rhs.len_)
        return len_ < rhs.len_;
    return w_ < rhs.w_;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0)
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const
{
    assert(r < rows_ && c < cols_);
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value)
{
    assert(r < rows_ && c < cols_);
    const std::uint64_t mask = std::uint64_t(1) << (c % kWordBits);
    if (value)
        data_[r * wpr_ + c / kWordBits] |= mask;
    else
        data_[r * wpr_ + c / kWordBits] &= ~mask;
}

BitVector BitMatrix::row(std::size_t r) const
{
    assert(r < rows_);
    BitVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c))
            v.set(c);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    assert(r < rows_ && v.size() == cols_);
    for (std::size_t k = 0; k < wpr_; ++k)
        data_[r * wpr_ + k] = v.words()[k];
}

void BitMatrix::xor_row_into(std::size_t dst, std::size_t src)
{
    for (std::size_t k = 0; k < wpr_; ++k)
        data_[dst * wpr_ + k] ^= data_[src * wpr_ + k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t k = 0; k < wpr_; ++k)
        std::swap(data_[a * wpr_ + k], data_[b * wpr_ + k]);
}

BitVector BitMatrix::mul(const BitVector& x) const
{
    assert(x.size() == cols_);
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < wpr_; ++k)
            acc ^= data_[r * wpr_ + k] & x.words()[k];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

EchelonForm row_reduce(const BitMatrix& m)
{
    EchelonForm e;
    e.reduced = m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (e.reduced.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows)
            continue;
        e.reduced.swap_rows(r, pivot);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && e.reduced.get(i, c))
                e.reduced.xor_row_into(i, r);
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = e.pivots.size();
    return e;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    const EchelonForm e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        BitVector v(cols);
        v.set(free);
        // Back-substitute: pivot row i has its pivot at e.pivots[i].
        for (std::size_t i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, free))
                v.set(e.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> quotient_basis(const std::vector<BitVector>& sub, std::size_t ambient_dim)
{
    SpanSolver span(ambient_dim);
    for (const auto& v : sub)
        span.add(v);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : span.pivots())
        is_pivot[c] = true;
    std::vector<BitVector> reps;
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        if (is_pivot[c])
            continue;
        BitVector v(ambient_dim);
        v.set(c);
        reps.push_back(std::move(v));
    }
    return reps;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    assert(b.size() == m.rows());
    // Row-reduce the transpose augmented with b as an extra column block,
    // realized here by reducing columns of m against b via SpanSolver on rows
    // of the transposed system.
    const std::size_t rows = m.rows(), cols = m.cols();
    // Augmented matrix [m | b], eliminate with standard Gauss.
    BitMatrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(r, c))
                aug.set(r, c);
        if (b.get(r))
            aug.set(r, cols);
    }
    const EchelonForm e = row_reduce(aug);
    BitVector x(cols);
    for (std::size_t i = 0; i < e.rank; ++i) {
        const std::size_t p = e.pivots[i];
        if (p == cols)
            return std::nullopt;  // row (0 … 0 | 1): inconsistent
        if (e.reduced.get(i, cols))
            x.set(p);
    }
    return x;
}

std::size_t rank_of(const std::vector<BitVector>& rows, std::size_t dim)
{
    SpanSolver span(dim);
    for (const auto& v : rows)
        span.add(v);
    return span.rank();
}

void SpanSolver::combo_xor(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src)
{
    if (dst.size() < src.size())
        dst.resize(src.size(), 0);
    for (std::size_t k = 0; k < src.size(); ++k)
        dst[k] ^= src[k];
}

bool SpanSolver::add(const BitVector& v)
{
    assert(v.size() == dim_);
    const std::size_t idx = n_added_++;
    BitVector cur = v;
    std::vector<std::uint64_t> combo(idx / 64 + 1, 0);
    combo[idx / 64] |= std::uint64_t(1) << (idx % 64);
    for (const auto& row : rows_) {
        if (cur.get(row.pivot)) {
            cur ^= row.vec;
            combo_xor(combo, row.combo);
        }
    }
    const auto pivot = cur.first_set();
    if (!pivot)
        return false;
    // Eliminate the new pivot from existing rows to keep rows fully reduced.
    for (auto& row : rows_) {
        if (row.vec.get(*pivot)) {
            row.vec ^= cur;
            combo_xor(row.combo, combo);
        }
    }
    Row nr{*pivot, std::move(cur), std::move(combo)};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), nr.pivot,
                               [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(it, std::move(nr));
    return true;
}

bool SpanSolver::contains(const BitVector& v) const
{
    return reduce(v).is_zero();
}

std::optional<std::vector<std::size_t>> SpanSolver::express(const BitVector& v) const
{
    assert(v.size() == dim_);
    BitVector cur = v;
    std::vector<std::uint64_t> combo;
    for (const auto& row : rows_) {
        if (cur.get(row.pivot)) {
            cur ^= row.vec;
            combo_xor(combo, row.combo);
        }
    }
    if (!cur.is_zero())
        return std::nullopt;
    std::vector<std::size_t> indices;
    for (std::size_t k = 0; k < combo.size(); ++k) {
        std::uint64_t word = combo[k];
        while (word) {
            const int bit = std::countr_zero(word);
            indices.push_back(k * 64 + bit);
            word &= word - 1;
        }
    }
    return indices;
}

std::vector<std::size_t> SpanSolver::pivots() const
{
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_)
        out.push_back(row.pivot);
    return out;
}

BitVector SpanSolver::reduce(BitVector v) const
{
    assert(v.size() == dim_);
    for (const auto& row : rows_)
        if (v.get(row.pivot))
            v ^= row.vec;
    return v;
}

}  // namespace stw::f2
