#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fk3/hodge.hpp"
#include "fk3/singularity.hpp"
#include "fk3/weight_system.hpp"

namespace fk3 {

/// The K3 surface attached to a fourfold through a_i + a_5 = d: four weights
/// {a_0..a_4} \ {a_i} with the same degree.
struct K3Association {
    std::size_t index = 0;
    WeightSystem k3;

    bool operator==(const K3Association&) const = default;
};

enum class Rationality { Rational, ConjecturalCubic, Unknown };

std::string to_string(Rationality r);

enum class FamilyTag { Cubic, LinearInLastVariable, DoubleSuspension, CyclicDelPezzo };

std::string to_string(FamilyTag t);

/// Anticanonically embedded del Pezzo surface underlying a cyclic family with
/// 2*a_5 = 3*a_4 = d: the ambient weights (a_0..a_3) and k with K = O(-k),
/// k = d/6.
struct DelPezzoData {
    WeightSystem ambient;
    Int k_degree = 0;

    bool operator==(const DelPezzoData&) const = default;
};

struct FamilyRecord {
    WeightSystem ws;
    bool fk3 = false;
    HodgeRow hodge;
    Int sing_dim = -1;
    SingClass sing_class = SingClass::Terminal;
    std::vector<Stratum> strata;
    std::optional<K3Association> association;
    Rationality rationality = Rationality::Unknown;
    std::set<FamilyTag> tags;
    std::optional<DelPezzoData> del_pezzo;
    /// Transverse types on which the all-k and coprime-k readings of the
    /// Reid-Tai criterion disagree; expected empty, surfaced in the catalog
    /// if not.
    std::vector<QuotientType> reid_tai_divergent;
};

/// Raised when an input weight system fails one of the defining conditions.
class PredicateError : public std::runtime_error {
public:
    PredicateError(std::string predicate, const std::string& detail)
        : std::runtime_error(predicate + ": " + detail), predicate_(std::move(predicate)) {}

    const std::string& predicate() const { return predicate_; }

private:
    std::string predicate_;
};

struct PredicateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Sixth census condition: for every weight a_i, d mod a_i is 0 or literally
/// equal to another weight. Strictly stronger than what quasi-smoothness
/// needs at the coordinate points, where any weight congruent to d modulo
/// a_i supplies the monomial: (1,1,3,4,5,6; 10) is quasi-smooth through
/// x_3 x_5 (6 = 2 mod 4) yet fails the screen at a_3 = 4 since no weight
/// equals 10 mod 4 = 2. The fourfold census requires the screen; a handful
/// of quasi-smooth systems are deliberately left out by it.
bool degree_remainder_screen(const WeightSystem& ws);

/// The 95 well-formed quasi-smooth non-cone K3 hypersurface weight systems,
/// found by sweeping all sorted 4-tuples with d = sum a_i up to d = 100 and
/// asserting stabilization at the observed maximum d = 66. Sorted by
/// (d, weights).
std::vector<WeightSystem> enumerate_k3_surfaces();

/// All fourfolds obtained from one K3 by adjoining a partition d = s + t,
/// s <= t, that satisfy the five defining conditions: well-formed
/// hypersurface, all weights below d, sum of weights 2d, quasi-smooth
/// non-cone, the gcd bound on the singular locus; plus the remainder screen.
std::vector<WeightSystem> fourfolds_from_k3(const WeightSystem& k3);

/// The full fourfold census: union of fourfolds_from_k3 over the 95 K3s plus
/// the cubic (1,1,1,1,1,1;3), deduplicated, analyzed, sorted by (d, weights).
std::vector<FamilyRecord> enumerate_fk3_fourfolds(int jobs = 1);

/// Independent oracle: direct sweep over sorted 6-tuples with sum 2d for all
/// d <= d_max, applying the same conditions with no K3 detour.
std::vector<WeightSystem> brute_force_census(Int d_max, int jobs = 1);

/// Smallest i in 0..4 with a_i + a_5 = d, when a_5 > 1 and such an i exists.
std::optional<K3Association> associate_k3(const WeightSystem& ws);

/// Families satisfying the defining conditions except the singular-locus
/// bound, restricted to d = 2*a_5, a_4 | d, a_4 != d/2. Exactly two exist.
std::vector<FamilyRecord> enumerate_extra_families();

/// Full per-family record; validates well-formedness, weights below degree,
/// the K3-type degree sum and quasi-smoothness, raising PredicateError on the
/// first failure.
FamilyRecord analyze_family(const WeightSystem& ws);

/// Predicate-by-predicate report over the five defining conditions and the
/// remainder screen.
std::vector<PredicateCheck> check_family(const WeightSystem& ws);

}  // namespace fk3
