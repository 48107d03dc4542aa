#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fk3/weight_system.hpp"

namespace fk3 {

/// Singularity class of a cyclic quotient, ordered from mildest to worst.
/// Canonical means canonical but not terminal; Klt means strictly klt.
enum class SingClass { Terminal = 0, Canonical = 1, Klt = 2 };

std::string to_string(SingClass c);

/// Cyclic quotient singularity 1/r(c_1,...,c_s) with residues in [1, r-1].
struct QuotientType {
    Int order = 0;
    std::vector<Int> residues;

    /// Free in codimension 1: for each position j, gcd(r, residues without
    /// position j) = 1.
    bool is_well_formed() const;
    std::string to_string() const;

    bool operator==(const QuotientType&) const = default;
};

/// One orbifold stratum of the ambient space and its relation to the general
/// hypersurface.
struct Stratum {
    Int r = 0;
    std::vector<std::size_t> indices;  // maximal I = {i : r | a_i}
    bool contained_in_X = false;
    bool on_X = false;  // whether X meets the open stratum
    std::optional<std::size_t> tangent_index;
    QuotientType transverse;
    Int locus_dim = -1;  // -1 when X misses the open stratum

    bool operator==(const Stratum&) const = default;
};

struct SingularityReport {
    SingClass overall = SingClass::Terminal;
    std::vector<Stratum> strata;
};

/// Strata of the ambient space, one per value r in {gcd of weights over a
/// nonempty subset} \ {1}, with the maximal index set. Relations to X left
/// unfilled. Ordered by increasing r.
std::vector<Stratum> enumerate_strata(const WeightSystem& ws);

/// Fills containment, tangent index, transverse type and locus dimension for
/// one stratum. The general member contains the stratum iff no degree-d
/// monomial in the stratum variables exists.
Stratum stratum_relation(const WeightSystem& ws, Stratum s);

/// Reid - Shepherd-Barron - Tai: for every k = 1..r-1 compare
/// sum_j (k*c_j mod r) against r. Terminal iff always greater, Canonical iff
/// never smaller with equality somewhere, Klt otherwise.
SingClass reid_tai_classify(const QuotientType& q);

/// Variant restricted to k coprime to r, kept for differential testing of the
/// criterion's range convention.
SingClass reid_tai_classify_coprime(const QuotientType& q);

/// Max of locus_dim over all filled strata; -1 means smooth.
Int singular_locus_dimension(const WeightSystem& ws);

/// Fills all strata, classifies every transverse type occurring on X, and
/// aggregates by the worst class. No strata means smooth, reported Terminal.
SingularityReport classify_hypersurface(const WeightSystem& ws);

}  // namespace fk3
