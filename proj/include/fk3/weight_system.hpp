#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fk3 {

using Int = std::int64_t;

/// A weighted projective hypersurface datum: the grading degrees
/// a0 <= ... <= an of the ambient coordinates together with the degree d of
/// the hypersurface. Weights are kept sorted nondecreasing; no gcd reduction
/// happens implicitly (call normalize_weight_system for that).
class WeightSystem {
public:
    /// Empty placeholder state, only fit for later assignment.
    WeightSystem() = default;

    /// Sorts the weights; throws std::invalid_argument on an empty list,
    /// a weight < 1, or a degree < 1.
    WeightSystem(std::vector<Int> weights, Int degree);

    const std::vector<Int>& weights() const { return weights_; }
    Int weight(std::size_t i) const { return weights_[i]; }
    std::size_t size() const { return weights_.size(); }
    Int degree() const { return degree_; }
    Int weight_sum() const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<Int> weights_;
    Int degree_ = 0;
};

/// Catalog order: by degree, then lexicographically by weights.
bool operator<(const WeightSystem& a, const WeightSystem& b);

/// Canonical rendering "a0,a1,...,an:d".
std::string to_string(const WeightSystem& ws);

/// Reduction to a well-formed space defining an isomorphic Proj: divide all
/// weights by their overall gcd, then as long as the weights off some index i
/// share a factor q > 1, divide them by q. The degree is carried through
/// unchanged; degree semantics stay with the caller.
WeightSystem normalize_weight_system(const WeightSystem& ws);

/// True iff every n of the n+1 weights are coprime.
bool is_well_formed_space(const WeightSystem& ws);

/// Space well-formedness plus: for every pair i < j, the gcd of the remaining
/// weights divides d. Works for any number of weights.
bool is_well_formed_hypersurface(const WeightSystem& ws);

/// Whether target is a nonnegative integer combination of the generators,
/// i.e. whether a monomial of weighted degree target exists in variables of
/// the given weights (variables may be omitted). DP over 0..target.
bool semigroup_contains(Int target, std::span<const Int> generators);

/// gcd-form encoding of "singular locus of dimension <= 1" for 6 weights:
/// every 4-subset of weights is coprime and the gcd of every 3-subset
/// divides d.
bool dim_sing_gcd_conditions(const WeightSystem& ws);

}  // namespace fk3
