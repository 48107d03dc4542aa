#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fk3/weight_system.hpp"

namespace fk3 {

enum class SubsetBranch {
    degree_representable,  // d lies in the semigroup of the subset weights
    tangent_indices,       // >= |I| outside indices j with d - a_j representable
    fails,
};

struct SubsetVerdict {
    std::vector<int> subset;
    SubsetBranch branch = SubsetBranch::fails;
    std::vector<int> tangent_indices;  // witnesses for the tangent branch
};

/// Evaluates one index subset of the quasi-smoothness criterion: does a
/// degree-d monomial in the subset variables exist, and if not, are there at
/// least |I| outside variables x_j with d - a_j representable? The witnessing
/// indices are reported for diagnostics.
SubsetVerdict subset_condition(const WeightSystem& ws, const std::vector<int>& subset);

struct QuasiSmoothFailure {
    enum class Kind { linear_cone, subset };
    Kind kind = Kind::subset;
    int cone_index = -1;       // linear_cone: the i with d == a_i
    std::vector<int> subset;   // subset: the first failing I
};

struct QuasiSmoothVerdict {
    bool ok = false;
    std::optional<QuasiSmoothFailure> failure;
    explicit operator bool() const { return ok; }
};

/// Numerical test that the general degree-d hypersurface is quasi-smooth and
/// not a linear cone: d != a_i for every i, and every nonempty index subset
/// passes subset_condition. Subsets are visited by size then lexicographically
/// and the first failure is reported as witness.
QuasiSmoothVerdict is_quasi_smooth_not_cone(const WeightSystem& ws);

/// All nonempty subsets of {0,...,n-1}, ordered by size then lexicographically.
std::vector<std::vector<int>> subset_enumeration_order(int n);

/// Human-readable witness, e.g. "no degree-d monomial in the variables of
/// I={4,5} and fewer than 2 tangent monomials".
std::string describe(const QuasiSmoothFailure& f);

}  // namespace fk3
