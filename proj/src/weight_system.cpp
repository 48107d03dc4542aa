#include "fk3/weight_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fk3 {

WeightSystem::WeightSystem(std::vector<Int> weights, Int degree)
    : weights_(std::move(weights)), degree_(degree) {
    if (weights_.empty())
        throw std::invalid_argument("weight system needs at least one weight");
    for (Int a : weights_)
        if (a < 1)
            throw std::invalid_argument("weights must be positive integers");
    if (degree_ < 1)
        throw std::invalid_argument("degree must be a positive integer");
    std::sort(weights_.begin(), weights_.end());
}

Int WeightSystem::weight_sum() const {
    return std::accumulate(weights_.begin(), weights_.end(), Int{0});
}

bool operator<(const WeightSystem& a, const WeightSystem& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.weights() < b.weights();
}

std::string to_string(const WeightSystem& ws) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i)
            out << ',';
        out << ws.weight(i);
    }
    out << ':' << ws.degree();
    return out.str();
}

namespace {

Int gcd_excluding(const std::vector<Int>& v, std::size_t skip) {
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != skip)
            g = std::gcd(g, v[i]);
    return g;
}

}  // namespace

WeightSystem normalize_weight_system(const WeightSystem& ws) {
    std::vector<Int> w = ws.weights();
    Int g = 0;
    for (Int a : w)
        g = std::gcd(g, a);
    for (Int& a : w)
        a /= g;
    // Well-forming reduction: while the weights off index i share a factor q,
    // divide those weights by q. Terminates since the product decreases.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
            Int q = gcd_excluding(w, i);
            if (q > 1) {
                for (std::size_t j = 0; j < w.size(); ++j)
                    if (j != i)
                        w[j] /= q;
                changed = true;
            }
        }
    }
    return WeightSystem(std::move(w), ws.degree());
}

bool is_well_formed_space(const WeightSystem& ws) {
    const auto& w = ws.weights();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (gcd_excluding(w, i) != 1)
            return false;
    return true;
}

bool is_well_formed_hypersurface(const WeightSystem& ws) {
    if (!is_well_formed_space(ws))
        return false;
    const auto& w = ws.weights();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            Int g = 0;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (k != i && k != j)
                    g = std::gcd(g, w[k]);
            if (g != 0 && ws.degree() % g != 0)
                return false;
        }
    }
    return true;
}

bool semigroup_contains(Int target, std::span<const Int> generators) {
    if (target < 0)
        throw std::invalid_argument("semigroup membership needs a nonnegative target");
    if (generators.empty())
        throw std::invalid_argument("semigroup membership needs at least one generator");
    Int g = 0;
    bool has_one = false;
    for (Int gen : generators) {
        if (gen < 1)
            throw std::invalid_argument("semigroup generators must be positive");
        g = std::gcd(g, gen);
        has_one = has_one || gen == 1;
    }
    if (target == 0 || has_one)
        return true;
    // divisibility by the generator gcd is necessary, and sufficient for a
    // single generator; otherwise run the DP on the reduced scale
    if (target % g != 0)
        return false;
    if (generators.size() == 1)
        return true;
    const Int t = target / g;
    std::vector<char> reachable(static_cast<std::size_t>(t) + 1, 0);
    reachable[0] = 1;
    for (Int gen : generators) {
        const Int step = gen / g;
        if (step > t)
            continue;
        for (Int k = step; k <= t; ++k)
            if (reachable[static_cast<std::size_t>(k - step)])
                reachable[static_cast<std::size_t>(k)] = 1;
    }
    return reachable[static_cast<std::size_t>(t)] != 0;
}

bool dim_sing_gcd_conditions(const WeightSystem& ws) {
    if (ws.size() != 6)
        throw std::invalid_argument("singular-locus gcd conditions are stated for 6 weights");
    const auto& w = ws.weights();
    // every 4 of the 6 weights coprime
    for (std::size_t i = 0; i + 1 < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            Int g = 0;
            for (std::size_t k = 0; k < 6; ++k)
                if (k != i && k != j)
                    g = std::gcd(g, w[k]);
            if (g != 1)
                return false;
        }
    }
    // gcd of every 3 of the 6 weights divides d
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k) {
                Int g = std::gcd(w[i], std::gcd(w[j], w[k]));
                if (ws.degree() % g != 0)
                    return false;
            }
    return true;
}

}  // namespace fk3
