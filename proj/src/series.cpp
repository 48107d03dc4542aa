#include "fk3/series.hpp"

#include <stdexcept>

namespace fk3 {

TruncatedSeries::TruncatedSeries(Int cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(cap) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(Int cap) {
    TruncatedSeries s(cap);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(Int period, Int cap) {
    if (period < 1) throw std::invalid_argument("geometric period must be positive");
    TruncatedSeries s(cap);
    for (Int k = 0; k <= cap; k += period) s.coeffs_[static_cast<std::size_t>(k)] = 1;
    return s;
}

Int TruncatedSeries::coeff(Int k) const {
    if (k < 0) return 0;
    if (k > cap_) throw std::out_of_range("coefficient index exceeds series cap");
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries& TruncatedSeries::set_coeff(Int k, Int value) {
    if (k < 0 || k > cap_) throw std::out_of_range("coefficient index exceeds series cap");
    coeffs_[static_cast<std::size_t>(k)] = value;
    return *this;
}

TruncatedSeries& TruncatedSeries::mul_one_minus_power(Int e) {
    if (e < 1) throw std::invalid_argument("exponent must be positive");
    for (Int k = cap_; k >= e; --k)
        coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - e)];
    return *this;
}

TruncatedSeries& TruncatedSeries::div_one_minus_power(Int a) {
    if (a < 1) throw std::invalid_argument("exponent must be positive");
    for (Int k = a; k <= cap_; ++k)
        coeffs_[static_cast<std::size_t>(k)] += coeffs_[static_cast<std::size_t>(k - a)];
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    if (cap_ != other.cap_)
        throw std::invalid_argument("series caps must agree for multiplication");
    TruncatedSeries out(cap_);
    for (Int i = 0; i <= cap_; ++i) {
        Int ci = coeffs_[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        for (Int j = 0; i + j <= cap_; ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] +=
                ci * other.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Int c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("series inverse requires unit constant term");
    TruncatedSeries out(cap_);
    out.coeffs_[0] = c0;
    for (Int k = 1; k <= cap_; ++k) {
        Int acc = 0;
        for (Int j = 1; j <= k; ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] *
                   out.coeffs_[static_cast<std::size_t>(k - j)];
        out.coeffs_[static_cast<std::size_t>(k)] = -c0 * acc;
    }
    return out;
}

}  // namespace fk3
