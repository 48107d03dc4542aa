#include "fk3/quasismooth.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fk3 {

namespace {

std::vector<Int> gather(const WeightSystem& ws, const std::vector<int>& idx) {
    std::vector<Int> out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(ws.weight(static_cast<std::size_t>(i)));
    return out;
}

}  // namespace

SubsetVerdict subset_condition(const WeightSystem& ws, const std::vector<int>& subset) {
    const int n = static_cast<int>(ws.size());
    if (subset.empty())
        throw std::invalid_argument("subset condition needs a nonempty index set");
    for (int i : subset)
        if (i < 0 || i >= n)
            throw std::invalid_argument("subset index out of range");

    SubsetVerdict verdict;
    verdict.subset = subset;

    const std::vector<Int> gens = gather(ws, subset);
    if (semigroup_contains(ws.degree(), gens)) {
        verdict.branch = SubsetBranch::degree_representable;
        return verdict;
    }

    for (int j = 0; j < n; ++j) {
        if (std::find(subset.begin(), subset.end(), j) != subset.end())
            continue;
        Int rest = ws.degree() - ws.weight(static_cast<std::size_t>(j));
        if (rest >= 0 && semigroup_contains(rest, gens))
            verdict.tangent_indices.push_back(j);
    }
    verdict.branch = verdict.tangent_indices.size() >= subset.size()
                         ? SubsetBranch::tangent_indices
                         : SubsetBranch::fails;
    if (verdict.branch != SubsetBranch::tangent_indices)
        verdict.tangent_indices.clear();
    return verdict;
}

std::vector<std::vector<int>> subset_enumeration_order(int n) {
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        subsets.push_back(std::move(idx));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size())
                             return a.size() < b.size();
                         return a < b;
                     });
    return subsets;
}

QuasiSmoothVerdict is_quasi_smooth_not_cone(const WeightSystem& ws) {
    QuasiSmoothVerdict verdict;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws.weight(i) == ws.degree()) {
            verdict.failure = QuasiSmoothFailure{QuasiSmoothFailure::Kind::linear_cone,
                                                 static_cast<int>(i),
                                                 {}};
            return verdict;
        }
    }
    for (const auto& subset : subset_enumeration_order(static_cast<int>(ws.size()))) {
        if (subset_condition(ws, subset).branch == SubsetBranch::fails) {
            verdict.failure =
                QuasiSmoothFailure{QuasiSmoothFailure::Kind::subset, -1, subset};
            return verdict;
        }
    }
    // quasi-smooth not-cone forces d strictly above every weight
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (ws.degree() <= ws.weight(i))
            throw std::logic_error("quasi-smooth verdict with a weight >= degree");
    verdict.ok = true;
    return verdict;
}

std::string describe(const QuasiSmoothFailure& f) {
    std::ostringstream out;
    if (f.kind == QuasiSmoothFailure::Kind::linear_cone) {
        out << "linear cone: degree equals the weight at index " << f.cone_index;
        return out.str();
    }
    out << "no degree-d monomial in the variables of I={";
    for (std::size_t k = 0; k < f.subset.size(); ++k) {
        if (k)
            out << ' ';
        out << f.subset[k];
    }
    out << "} and fewer than " << f.subset.size() << " tangent monomials";
    return out.str();
}

}  // namespace fk3
