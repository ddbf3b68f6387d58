#include "stw/series.hpp"

#include <algorithm>

#include "stw/errors.hpp"

namespace stw::series {

PoincareSeries::PoincareSeries(std::vector<std::int64_t> dims) : dims_(std::move(dims))
{
    for (auto d : dims_)
        if (d < 0)
            throw SeriesError(SeriesError::Code::NegativeCoefficient,
                              "Poincare series entries must be nonnegative");
}

PoincareSeries PoincareSeries::zero(int max_degree)
{
    return PoincareSeries(std::vector<std::int64_t>(max_degree + 1, 0));
}

std::int64_t PoincareSeries::at(int degree) const
{
    if (degree < 0 || degree >= static_cast<int>(dims_.size()))
        throw DomainError("series degree " + std::to_string(degree) + " out of range");
    return dims_[degree];
}

void PoincareSeries::set(int degree, std::int64_t value)
{
    if (value < 0)
        throw SeriesError(SeriesError::Code::NegativeCoefficient,
                          "Poincare series entries must be nonnegative");
    if (degree < 0 || degree >= static_cast<int>(dims_.size()))
        throw DomainError("series degree out of range");
    dims_[degree] = value;
}

PoincareSeries PoincareSeries::truncated(int max_degree) const
{
    if (max_degree > this->max_degree())
        throw DomainError("cannot extend a truncated series");
    return PoincareSeries(std::vector<std::int64_t>(dims_.begin(), dims_.begin() + max_degree + 1));
}

bool PoincareSeries::agrees_with(const PoincareSeries& rhs, int up_to) const
{
    if (up_to > max_degree() || up_to > rhs.max_degree())
        return false;
    for (int d = 0; d <= up_to; ++d)
        if (dims_[d] != rhs.dims_[d])
            return false;
    return true;
}

std::string PoincareSeries::str() const
{
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(dims_[i]);
    }
    return out;
}

PoincareSeries sum(const PoincareSeries& p, const PoincareSeries& q)
{
    const int n = std::min(p.max_degree(), q.max_degree());
    std::vector<std::int64_t> out(n + 1, 0);
    for (int d = 0; d <= n; ++d)
        out[d] = p.at(d) + q.at(d);
    return PoincareSeries(std::move(out));
}

PoincareSeries product(const PoincareSeries& p, const PoincareSeries& q)
{
    const int n = std::min(p.max_degree(), q.max_degree());
    std::vector<std::int64_t> out(n + 1, 0);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j)
            out[d] += p.at(j) * q.at(d - j);
    return PoincareSeries(std::move(out));
}

PoincareSeries shift(const PoincareSeries& p, int by)
{
    if (by < 0)
        throw DomainError("negative series shift");
    std::vector<std::int64_t> out(p.max_degree() + by + 1, 0);
    for (int d = 0; d <= p.max_degree(); ++d)
        out[d + by] = p.at(d);
    return PoincareSeries(std::move(out));
}

PoincareSeries difference(const PoincareSeries& p, const PoincareSeries& q)
{
    const int n = std::min(p.max_degree(), q.max_degree());
    std::vector<std::int64_t> out(n + 1, 0);
    for (int d = 0; d <= n; ++d) {
        out[d] = p.at(d) - q.at(d);
        if (out[d] < 0)
            throw SeriesError(SeriesError::Code::NegativeCoefficient,
                              "series difference negative in degree " + std::to_string(d));
    }
    return PoincareSeries(std::move(out));
}

PoincareSeries divide(const PoincareSeries& p, const PoincareSeries& q)
{
    const int n = std::min(p.max_degree(), q.max_degree());
    const std::int64_t lead = q.at(0);
    if (lead == 0)
        throw SeriesError(SeriesError::Code::InexactDivision, "divisor has zero constant term");
    std::vector<std::int64_t> out(n + 1, 0);
    for (int d = 0; d <= n; ++d) {
        std::int64_t acc = p.at(d);
        for (int j = 0; j < d; ++j)
            acc -= out[j] * q.at(d - j);
        if (acc % lead != 0 || acc / lead < 0)
            throw SeriesError(SeriesError::Code::InexactDivision,
                              "series division inexact in degree " + std::to_string(d));
        out[d] = acc / lead;
    }
    return PoincareSeries(std::move(out));
}

}  // namespace stw::series
