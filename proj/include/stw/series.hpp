#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stw::series {

// Truncated sequence of degreewise dimensions. Entry d is the dimension in
// degree d; entries beyond max_degree are unknown, not zero, so binary
// operations truncate to the smaller bound.
class PoincareSeries {
public:
    PoincareSeries() = default;
    explicit PoincareSeries(std::vector<std::int64_t> dims);
    static PoincareSeries zero(int max_degree);

    int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
    std::int64_t at(int degree) const;
    const std::vector<std::int64_t>& dims() const { return dims_; }

    void set(int degree, std::int64_t value);
    PoincareSeries truncated(int max_degree) const;

    bool operator==(const PoincareSeries& rhs) const { return dims_ == rhs.dims_; }
    bool agrees_with(const PoincareSeries& rhs, int up_to) const;

    std::string str() const;

private:
    std::vector<std::int64_t> dims_;
};

PoincareSeries sum(const PoincareSeries& p, const PoincareSeries& q);
PoincareSeries product(const PoincareSeries& p, const PoincareSeries& q);
PoincareSeries shift(const PoincareSeries& p, int by);

// Throws SeriesError{NegativeCoefficient} when some entry of p − q is negative.
PoincareSeries difference(const PoincareSeries& p, const PoincareSeries& q);

// Exact power-series division p / q up to the common bound. Throws
// SeriesError{InexactDivision} when the quotient fails to be a nonnegative
// integer series.
PoincareSeries divide(const PoincareSeries& p, const PoincareSeries& q);

}  // namespace stw::series
