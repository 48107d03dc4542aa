#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "fk3/hodge.hpp"
#include "fk3/quasismooth.hpp"
#include "fk3/series.hpp"
#include "fk3/weight_system.hpp"

using fk3::Int;
using fk3::TruncatedSeries;
using fk3::WeightSystem;

TEST_CASE("series building blocks") {
    const auto one = TruncatedSeries::one(8);
    CHECK(one.coeff(0) == 1);
    CHECK(one.coeff(5) == 0);
    CHECK(one.coeff(-3) == 0);
    CHECK_THROWS_AS(one.coeff(9), std::out_of_range);

    const auto geo = TruncatedSeries::geometric(3, 10);
    for (Int k = 0; k <= 10; ++k)
        CHECK(geo.coeff(k) == (k % 3 == 0 ? 1 : 0));

    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::geometric(0, 5), std::invalid_argument);
}

TEST_CASE("multiplication truncates and squares the geometric series") {
    const auto geo = TruncatedSeries::geometric(1, 6);
    const auto square = geo * geo;
    for (Int k = 0; k <= 6; ++k)
        CHECK(square.coeff(k) == k + 1);

    TruncatedSeries other(5);
    CHECK_THROWS_AS(geo * other, std::invalid_argument);
}

TEST_CASE("multiplying and dividing by (1 - t^e) round-trips") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Int> coeff(-9, 9);
    std::uniform_int_distribution<Int> expo(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        TruncatedSeries s(20);
        for (Int k = 0; k <= 20; ++k)
            s.set_coeff(k, coeff(rng));
        const TruncatedSeries before = s;
        const Int e = expo(rng);
        s.mul_one_minus_power(e);
        s.div_one_minus_power(e);
        CHECK(s == before);
    }
}

TEST_CASE("inverse works for unit constant term and refuses otherwise") {
    TruncatedSeries s(12);
    s.set_coeff(0, 1).set_coeff(1, -4).set_coeff(3, 2).set_coeff(7, 5);
    CHECK(s * s.inverse() == TruncatedSeries::one(12));

    TruncatedSeries nonunit(4);
    nonunit.set_coeff(0, 2);
    CHECK_THROWS_AS(nonunit.inverse(), std::domain_error);
}

TEST_CASE("Jacobian series rejects linear cones and starts with 1") {
    CHECK_THROWS_AS(fk3::jacobian_hilbert_series(WeightSystem({1, 1, 1, 4}, 4), 8),
                    std::domain_error);
    const auto series = fk3::jacobian_hilbert_series(WeightSystem({1, 1, 1, 1}, 4), 8);
    CHECK(series.coeff(0) == 1);
    CHECK(series.coeff(1) == 4);  // four independent linear forms
}

TEST_CASE("quartic K3 and cubic fourfold Hodge rows") {
    const auto k3 = fk3::primitive_middle_hodge(WeightSystem({1, 1, 1, 1}, 4));
    CHECK(k3.dim == 2);
    CHECK(k3.primitive == std::vector<Int>{1, 19, 1});
    CHECK(k3.middle_total == 20);

    const auto cubic = fk3::primitive_middle_hodge(WeightSystem({1, 1, 1, 1, 1, 1}, 3));
    CHECK(cubic.dim == 4);
    CHECK(cubic.primitive == std::vector<Int>{0, 1, 20, 1, 0});
    CHECK(cubic.middle_total == 21);
}

TEST_CASE("worked-example fourfold has a K3-type middle row") {
    const auto row = fk3::primitive_middle_hodge(WeightSystem({1, 1, 1, 2, 3, 4}, 6));
    CHECK(row.primitive[0] == 0);   // h^{4,0}
    CHECK(row.primitive[1] == 1);   // h^{3,1}
    CHECK(row.primitive[2] == 19);  // h^{2,2}_prim
    CHECK(row.middle_total == 20);
    // mirror symmetry of the residue row
    CHECK(row.primitive[3] == 1);
    CHECK(row.primitive[4] == 0);
}

TEST_CASE("K3-type numerics is the weight-sum test") {
    CHECK(fk3::is_fano_k3_numerics(WeightSystem({1, 1, 1, 2, 3, 4}, 6)));
    CHECK_FALSE(fk3::is_fano_k3_numerics(WeightSystem({1, 1, 1, 1, 1, 2}, 3)));
}

TEST_CASE("series correspondence with the associated K3") {
    // a_3 + a_5 = 2 + 4 = 6: factors cancel pairwise
    CHECK(fk3::hodge_correspondence_holds(WeightSystem({1, 1, 1, 2, 3, 4}, 6), 3));
    // double suspension: both positions with a_i = d/2 work
    CHECK(fk3::hodge_correspondence_holds(WeightSystem({1, 1, 1, 3, 3, 3}, 6), 3));
    CHECK(fk3::hodge_correspondence_holds(WeightSystem({1, 1, 1, 3, 3, 3}, 6), 4));
    CHECK_THROWS_AS(fk3::hodge_correspondence_holds(WeightSystem({1, 1, 1, 2, 3, 4}, 6), 0),
                    std::invalid_argument);
}

TEST_CASE("Jacobian ring coefficients are symmetric about the degree") {
    // Gorenstein socle degree is sum (d - a_i) - sum a_i = 2d for these weights
    for (const auto& ws : {WeightSystem({1, 1, 1, 2, 3, 4}, 6), WeightSystem({1, 2, 2, 3, 5, 7}, 10),
                           WeightSystem({1, 1, 1, 1, 1, 1}, 3)}) {
        const Int d = ws.degree();
        const auto series = fk3::jacobian_hilbert_series(ws, 2 * d);
        for (Int m = 0; m <= 2 * d; ++m)
            CHECK(series.coeff(m) == series.coeff(2 * d - m));
    }
}

TEST_CASE("random quasi-smooth K3 weight systems keep the palindrome") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<Int> weight(1, 10);
    int found = 0;
    for (int trial = 0; trial < 3000 && found < 60; ++trial) {
        std::vector<Int> w(4);
        for (Int& a : w)
            a = weight(rng);
        Int d = w[0] + w[1] + w[2] + w[3];
        WeightSystem ws(w, d);
        if (!fk3::is_well_formed_hypersurface(ws) || !fk3::is_quasi_smooth_not_cone(ws).ok)
            continue;
        ++found;
        const auto series = fk3::jacobian_hilbert_series(ws, 2 * d);
        for (Int m = 0; m <= 2 * d; ++m)
            CHECK(series.coeff(m) == series.coeff(2 * d - m));
    }
    CHECK(found >= 40);  // the sweep really exercised the property
}
