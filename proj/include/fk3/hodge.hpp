#pragma once

#include <cstddef>
#include <vector>

#include "fk3/series.hpp"
#include "fk3/weight_system.hpp"

namespace fk3 {

/// Primitive Hodge numbers of the middle cohomology row of a quasi-smooth
/// hypersurface of even dimension 2t.
struct HodgeRow {
    Int dim = 0;                  // variety dimension 2t
    std::vector<Int> primitive;   // h^{2t-j,j}_prim for j = 0..2t
    Int middle_total = 0;         // h^{t,t}_prim + 1 (hyperplane class squared)

    bool operator==(const HodgeRow&) const = default;
};

/// Hilbert series of the Jacobian ring of a general degree-d member,
/// prod_i (1 - t^{d-a_i}) / (1 - t^{a_i}), truncated at cap. Quasi-smoothness
/// of the general member makes the partials a regular sequence, so this is
/// exact. Rejects d = a_i (linear cone).
TruncatedSeries jacobian_hilbert_series(const WeightSystem& ws, Int cap);

/// Griffiths residue row: primitive[j] = dim (R_f)_{(j+1)d - sum a_i}.
/// Requires an even number of weights and a quasi-smooth non-cone input.
HodgeRow primitive_middle_hodge(const WeightSystem& ws);

/// Numerical K3-type condition in even dimension 2t: sum a_i = d * t.
bool is_fano_k3_numerics(const WeightSystem& ws);

/// With a_i + a_5 = d the factors for indices i and 5 cancel, so the middle
/// primitive Hodge number of the fourfold equals h^{1,1}_prim of the degree-d
/// K3 surface on the remaining four weights. Both sides are computed
/// independently as a cross-check of the series engine.
bool hodge_correspondence_holds(const WeightSystem& ws, std::size_t i);

}  // namespace fk3
