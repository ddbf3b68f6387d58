#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace stw::f2 {

// Vector over GF(2), bit-packed into 64-bit words. Length is fixed at
// construction; unused trailing bits are kept zero so that equality and
// ordering can work on whole words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool is_zero() const;
    std::size_t popcount() const;
    std::optional<std::size_t> first_set() const;

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs)
    {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const BitVector& rhs) const { return len_ == rhs.len_ && w_ == rhs.w_; }
    bool operator!=(const BitVector& rhs) const { return !(*this == rhs); }
    bool operator<(const BitVector& rhs) const;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense row-major bit matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row_into(std::size_t dst, std::size_t src);  // row[dst] ^= row[src]
    void swap_rows(std::size_t a, std::size_t b);

    // Matrix-vector product m·x with x of length cols(); result has length rows().
    BitVector mul(const BitVector& x) const;

    bool operator==(const BitMatrix& rhs) const
    {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

// Reduced row echelon form. Pivot columns are strictly increasing and the
// first `rank` rows of `reduced` are the nonzero rows.
struct EchelonForm {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

EchelonForm row_reduce(const BitMatrix& m);

// Basis of the right null space {x : m·x = 0}; size cols − rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Coset representatives completing span(sub) to the full space of dimension
// ambient_dim. Representatives are the unit vectors at non-pivot columns of
// the echelon form of `sub`, so results are deterministic.
std::vector<BitVector> quotient_basis(const std::vector<BitVector>& sub, std::size_t ambient_dim);

// Some x with m·x = b, or nullopt when the system is unsolvable.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

std::size_t rank_of(const std::vector<BitVector>& rows, std::size_t dim);

// Incremental row space with provenance. Vectors passed to add() get
// consecutive indices; express() writes any in-span query as a GF(2)
// combination of previously added vectors.
class SpanSolver {
public:
    explicit SpanSolver(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t added() const { return n_added_; }

    // Returns true when v enlarged the span.
    bool add(const BitVector& v);
    bool contains(const BitVector& v) const;
    std::optional<std::vector<std::size_t>> express(const BitVector& v) const;

    // Pivot columns currently held, in increasing order.
    std::vector<std::size_t> pivots() const;

    // Reduces v modulo the span: eliminates all pivot positions. The result
    // is the canonical coset representative of v.
    BitVector reduce(BitVector v) const;

private:
    struct Row {
        std::size_t pivot;
        BitVector vec;
        std::vector<std::uint64_t> combo;  // over add() indices
    };
    static void combo_xor(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src);

    std::size_t dim_;
    std::size_t n_added_ = 0;
    std::vector<Row> rows_;  // kept sorted by pivot
};

}  // namespace stw::f2
