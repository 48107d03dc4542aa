#include "fk3/hodge.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fk3 {

TruncatedSeries jacobian_hilbert_series(const WeightSystem& ws, Int cap) {
    const Int d = ws.degree();
    for (Int a : ws.weights()) {
        if (a == d)
            throw std::domain_error("linear cone has no Jacobian-regular sequence form");
        if (a > d)
            throw std::invalid_argument("weight exceeds degree: Jacobian factor is not a polynomial");
    }
    TruncatedSeries s = TruncatedSeries::one(cap);
    for (Int a : ws.weights()) {
        s.mul_one_minus_power(d - a);
        s.div_one_minus_power(a);
    }
    return s;
}

HodgeRow primitive_middle_hodge(const WeightSystem& ws) {
    const std::size_t n = ws.size();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("hypersurface dimension must be even: need 2t+2 weights");
    const Int t = static_cast<Int>(n) / 2 - 1;
    const Int d = ws.degree();
    const Int sum = ws.weight_sum();

    Int cap = 2 * d;
    for (Int j = 0; j <= 2 * t; ++j)
        cap = std::max(cap, (j + 1) * d - sum);
    const TruncatedSeries series = jacobian_hilbert_series(ws, cap);

    HodgeRow row;
    row.dim = 2 * t;
    row.primitive.reserve(static_cast<std::size_t>(2 * t + 1));
    for (Int j = 0; j <= 2 * t; ++j)
        row.primitive.push_back(series.coeff((j + 1) * d - sum));
    row.middle_total = row.primitive[static_cast<std::size_t>(t)] + 1;
    return row;
}

bool is_fano_k3_numerics(const WeightSystem& ws) {
    const std::size_t n = ws.size();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("need 2t+2 weights with t >= 1");
    const Int t = static_cast<Int>(n) / 2 - 1;
    const bool k3_type = ws.weight_sum() == ws.degree() * t;
    if (k3_type && t >= 2) assert(ws.degree() < ws.weight_sum());
    return k3_type;
}

bool hodge_correspondence_holds(const WeightSystem& ws, std::size_t i) {
    if (ws.size() != 6)
        throw std::invalid_argument("correspondence check needs 6 weights");
    if (i > 4)
        throw std::invalid_argument("index must lie in 0..4");
    const Int d = ws.degree();
    if (ws.weight(i) + ws.weight(5) != d)
        throw std::invalid_argument("weights at the index and the last position must sum to the degree");

    const Int lhs = jacobian_hilbert_series(ws, d).coeff(d);

    std::vector<Int> k3_weights;
    for (std::size_t j = 0; j < 5; ++j)
        if (j != i) k3_weights.push_back(ws.weight(j));
    const WeightSystem k3(std::move(k3_weights), d);
    const Int rhs = jacobian_hilbert_series(k3, d).coeff(d);

    return lhs == rhs;
}

}  // namespace fk3
