#pragma once

#include <vector>

#include "fk3/weight_system.hpp"

namespace fk3 {

/// Formal power series with exact integer coefficients, truncated at a fixed
/// degree cap. All arithmetic is exact at or below the cap and never reads
/// above it.
class TruncatedSeries {
public:
    /// Zero series with the given cap.
    explicit TruncatedSeries(Int cap);

    static TruncatedSeries one(Int cap);
    /// 1/(1 - t^period): coefficient 1 exactly at the multiples of period.
    static TruncatedSeries geometric(Int period, Int cap);

    Int cap() const { return cap_; }
    /// Coefficient of t^k; 0 for negative k, throws above the cap.
    Int coeff(Int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    TruncatedSeries& set_coeff(Int k, Int value);

    /// In-place multiplication by the polynomial (1 - t^e), e >= 1.
    TruncatedSeries& mul_one_minus_power(Int e);
    /// In-place division by (1 - t^a), a >= 1 (multiplication by the
    /// geometric series).
    TruncatedSeries& div_one_minus_power(Int a);

    TruncatedSeries operator*(const TruncatedSeries& other) const;
    bool operator==(const TruncatedSeries&) const = default;

    /// Multiplicative inverse; requires constant term +-1 so the inverse stays
    /// integral.
    TruncatedSeries inverse() const;

private:
    Int cap_;
    std::vector<Int> coeffs_;
};

}  // namespace fk3
