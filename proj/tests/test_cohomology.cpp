#include <doctest.h>

#include "symcover/catalog.hpp"
#include "symcover/cohomology.hpp"

using namespace symcover;

TEST_CASE("Hochster profile of the moment-angle surface over the pentagon") {
    SimplicialComplex pentagon = SimplicialComplex::polygon_dual(5);
    HochsterProfile profile = hochster_profile(pentagon, Gf2Matrix::identity(5));
    // genus g(5) = 5, so b_1 = 10
    CHECK(profile.manifold_betti == std::array<long long, 5>{1, 10, 1, 0, 0});
}

TEST_CASE("Hochster profile of Example 5.5") {
    SimplicialComplex k = catalog_get("polygon-product-5-4").complex;
    HochsterProfile profile = hochster_profile(k, catalog_matrix("example-5.5"));
    CHECK(profile.manifold_betti[0] == 1);
    CHECK(profile.manifold_betti[2] >= 1);
    bool witness_present = false;
    for (const auto& [omega, betti] : profile.nonzero_entries())
        if (omega.bits() == Gf2Vector::from_support(9, {0, 2, 5, 7}).bits())
            witness_present = betti[2] == 1;
    CHECK(witness_present);
}

TEST_CASE("Hochster profile of the adjunction example") {
    SimplicialComplex k = catalog_get("lutz_m10_247880").complex;
    HochsterProfile profile = hochster_profile(k, catalog_matrix("lambda-A.2"));
    CHECK(profile.manifold_betti[2] == 2);
    // Poincare duality for the orientable small cover
    for (int i = 0; i <= 4; ++i)
        CHECK(profile.manifold_betti[i] == profile.manifold_betti[4 - i]);
    // b_2 is even: the intersection form is a sum of hyperbolic pairs
    CHECK(profile.manifold_betti[2] % 2 == 0);
}

TEST_CASE("hochster_profile rejects non-characteristic input") {
    SimplicialComplex k = catalog_get("polygon-product-5-4").complex;
    CHECK_THROWS_AS(hochster_profile(k, Gf2Matrix(4, 9)), InvalidCharMapError);
}

TEST_CASE("real moment-angle Betti numbers") {
    CHECK(rz_betti(SimplicialComplex::polygon_dual(3)) ==
          std::array<long long, 5>{1, 0, 1, 0, 0});
    CHECK(rz_betti(SimplicialComplex::polygon_dual(4))[1] == 2);
    CHECK(rz_b1(catalog_get("lutz_m10_247880").complex) == 32);
    CHECK(rz_betti(catalog_get("lutz_m10_247880").complex)[1] == 32);
    CHECK_THROWS_AS(rz_betti(SimplicialComplex::polygon_dual(15)), CapacityError);
}

TEST_CASE("mod 2 Betti numbers via the h-vector") {
    CHECK(mod2_betti(catalog_get("polygon-product-4-4").complex) ==
          std::vector<long long>{1, 4, 6, 4, 1});
    CHECK(mod2_betti(SimplicialComplex::boundary_of_simplex(4)) ==
          std::vector<long long>{1, 1, 1, 1, 1});

    // chi over the 4-cube dual: alternating h-sum is zero
    std::vector<long long> h = mod2_betti(catalog_get("polygon-product-4-4").complex);
    long long chi = 0;
    for (size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * h[i];
    CHECK(chi == 0);

    // rational Betti numbers never exceed the mod 2 ones
    HochsterProfile profile = hochster_profile(catalog_get("polygon-product-5-4").complex,
                                               catalog_matrix("example-5.5"));
    std::vector<long long> h54 = mod2_betti(catalog_get("polygon-product-5-4").complex);
    for (int i = 0; i <= 4; ++i) CHECK(profile.manifold_betti[i] <= h54[i]);
}

TEST_CASE("Euler characteristic formulas agree") {
    CHECK(euler_characteristic(catalog_get("lutz_m10_247882").complex) == 1);
    CHECK(euler_characteristic(catalog_get("polygon-product-4-6").complex) == 0);
    CHECK(euler_characteristic(SimplicialComplex::boundary_of_simplex(4)) == 1);
    // f_3 = chi + 4f_0 - 16 gives back the facet counts
    for (const char* id : {"lutz_m10_247880", "lutz_m10_247882", "IxQ-fig1"}) {
        SimplicialComplex k = catalog_get(id).complex;
        long long chi = euler_characteristic(k);
        CHECK(chi + 4 * k.m() - 16 == static_cast<long long>(k.facets().size()));
    }
}

TEST_CASE("the two Euler formulas disagree on non-sphere input") {
    // a solid tetrahedron is pure 3-dimensional but not a closed 3-manifold
    SimplicialComplex solid = SimplicialComplex::from_masks(4, {0b1111});
    CHECK_THROWS_AS(euler_characteristic(solid), InternalInconsistencyError);
}

TEST_CASE("squaring rank of the normal forms") {
    SimplicialComplex cube = catalog_get("polygon-product-4-4").complex;
    SquaringRank zero = squaring_rank(cube, normal_form_lambda_beta(4, 4, Gf2Vector(4)));
    CHECK(zero.rank == 0);
    CHECK(zero.dim_h1 == 4);
    CHECK(zero.dim_h2 == 6);

    SquaringRank nonzero = squaring_rank(cube, normal_form_lambda_beta(4, 4, Gf2Vector::unit(4, 0)));
    CHECK(nonzero.rank == 2);

    SimplicialComplex p46 = catalog_get("polygon-product-4-6").complex;
    CHECK(squaring_rank(p46, normal_form_lambda_beta(4, 6, Gf2Vector::unit(4, 0))).rank == 4);

    SimplicialComplex p64 = SimplicialComplex::polygon_product_dual(6, 4);
    CHECK(squaring_rank(p64, normal_form_lambda_beta(6, 4, Gf2Vector::unit(6, 0))).rank == 2);
}

TEST_CASE("squaring rank distinguishes base and fiber when sizes differ") {
    // rank(x -> x^2) = m_fiber - 2 for the nonzero classes
    SimplicialComplex p46 = catalog_get("polygon-product-4-6").complex;
    int fiber6 = squaring_rank(p46, normal_form_lambda_beta(4, 6, Gf2Vector::unit(4, 1))).rank;
    SimplicialComplex p64 = SimplicialComplex::polygon_product_dual(6, 4);
    int fiber4 = squaring_rank(p64, normal_form_lambda_beta(6, 4, Gf2Vector::unit(6, 1))).rank;
    CHECK(fiber6 == 4);
    CHECK(fiber4 == 2);
    CHECK(fiber6 != fiber4);
}

TEST_CASE("betti cache is shared between computations") {
    SimplicialComplex k = catalog_get("polygon-product-5-4").complex;
    SubcomplexBettiCache cache(k);
    HochsterProfile first = hochster_profile(k, catalog_matrix("example-5.5"), &cache);
    HochsterProfile second = hochster_profile(k, catalog_matrix("example-5.5"), &cache);
    CHECK(first.manifold_betti == second.manifold_betti);
    CHECK(cache.get(Gf2Vector::from_support(9, {0, 2, 5, 7}).bits())[2] == 1);
}
