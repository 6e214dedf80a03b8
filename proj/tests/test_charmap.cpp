#include <doctest.h>

#include "symcover/catalog.hpp"
#include "symcover/charmap.hpp"

using namespace symcover;

TEST_CASE("characteristic condition") {
    SimplicialComplex p54 = catalog_get("polygon-product-5-4").complex;
    CHECK(is_characteristic(p54, catalog_matrix("example-5.5")).ok);

    SimplicialComplex l = catalog_get("L-fig1").complex;
    CHECK(is_characteristic(l, catalog_matrix("mu-sec6")).ok);

    Gf2Matrix with_zero_column = catalog_matrix("example-5.5");
    for (int i = 0; i < 4; ++i) with_zero_column.set(i, 3, false);
    CharCheck failed = is_characteristic(p54, with_zero_column);
    CHECK_FALSE(failed.ok);
    CHECK(failed.failing_face == (1ULL << 3));

    CHECK_THROWS_AS(is_characteristic(p54, catalog_matrix("mu-sec6")), DimensionError);
}

TEST_CASE("characteristic condition flags a dependent facet") {
    // two adjacent vertices of the pentagon block with the same column
    Gf2Matrix broken = Gf2Matrix::from_column_codes(
        4, std::vector<std::uint32_t>{1, 1, 1, 2, 7, 4, 8, 4, 8});
    SimplicialComplex k = catalog_get("polygon-product-5-4").complex;
    CharCheck check = is_characteristic(k, broken);
    CHECK_FALSE(check.ok);
    REQUIRE(check.failing_face.has_value());
    CHECK_FALSE(columns_independent(broken, *check.failing_face));
}

TEST_CASE("D-J canonical form") {
    Gf2Matrix ex = catalog_matrix("example-5.5");
    Gf2Matrix canon = dj_canonical(ex);
    CHECK(canon.column_codes() == std::vector<std::uint32_t>{1, 2, 1, 2, 4, 7, 8, 7, 8});
    CHECK(dj_canonical(canon) == canon);

    // already in the form (I_4 | A): fixed point
    Gf2Matrix ia = Gf2Matrix::from_column_codes(4, std::vector<std::uint32_t>{1, 2, 4, 8, 7, 11});
    CHECK(dj_canonical(ia) == ia);

    // row permutations do not change the class
    std::vector<Gf2Vector> rows = ex.rows();
    std::swap(rows[0], rows[2]);
    std::swap(rows[1], rows[3]);
    CHECK(dj_canonical(Gf2Matrix(rows)) == canon);

    // characteristic-ness is a column property, invariant under row ops
    SimplicialComplex k = catalog_get("polygon-product-5-4").complex;
    CHECK(is_characteristic(k, canon).ok);

    Gf2Matrix deficient(4, 6);
    deficient.set(0, 0, true);
    CHECK_THROWS_AS(dj_canonical(deficient), InvalidCharMapError);
}

TEST_CASE("orientability") {
    CHECK(is_orientable(catalog_get("polygon-product-5-4").complex, catalog_matrix("example-5.5")));
    CHECK(is_orientable(catalog_get("L-fig1").complex, catalog_matrix("mu-sec6")));
    CHECK(is_orientable(catalog_get("lutz_m10_247880").complex, catalog_matrix("lambda-A.2")));
    // the unique class over the 4-simplex boundary is RP^4: not orientable
    SimplicialComplex simplex = SimplicialComplex::boundary_of_simplex(4);
    Gf2Matrix rp4 = Gf2Matrix::from_column_codes(4, std::vector<std::uint32_t>{1, 2, 4, 8, 15});
    CHECK(is_characteristic(simplex, rp4).ok);
    CHECK_FALSE(is_orientable(simplex, rp4));
}

TEST_CASE("block products") {
    Gf2Matrix interval = Gf2Matrix::from_column_codes(1, std::vector<std::uint32_t>{1, 1});
    Gf2Matrix mu = catalog_matrix("mu-sec6");
    Gf2Matrix lambda = block_product(interval, mu);
    CHECK(lambda.nrows() == 4);
    CHECK(lambda.ncols() == 12);
    CHECK(lambda == catalog_matrix("lambda-IxQ"));
    CHECK(lambda.column_code(0) == 1);
    CHECK(lambda.column_code(2) == 2 * mu.column_code(0));

    BlockProductResult verified = block_product_over(
        SimplicialComplex::two_points(), interval, catalog_get("L-fig1").complex, mu);
    CHECK(verified.complex == catalog_get("IxQ-fig1").complex);
    CHECK(is_orientable(verified.complex, verified.matrix));

    // orientable x orientable stays orientable for polygon blocks too
    Gf2Matrix square = Gf2Matrix::from_column_codes(2, std::vector<std::uint32_t>{1, 2, 1, 2});
    Gf2Matrix prod = block_product(square, square);
    CHECK(in_row_space(prod, Gf2Vector::ones(8)));
}

TEST_CASE("normal form lambda_beta") {
    Gf2Matrix diag = normal_form_lambda_beta(4, 4, Gf2Vector(4));
    SimplicialComplex cube = catalog_get("polygon-product-4-4").complex;
    CHECK(is_characteristic(cube, diag).ok);
    CHECK(in_row_space(diag, Gf2Vector::ones(8)));

    Gf2Matrix e1 = normal_form_lambda_beta(4, 6, Gf2Vector::unit(4, 0));
    SimplicialComplex p46 = catalog_get("polygon-product-4-6").complex;
    CHECK(is_characteristic(p46, e1).ok);
    CHECK(dj_canonical(e1).column_codes() ==
          std::vector<std::uint32_t>{1, 2, 4, 2, 8, 13, 8, 13, 8, 13});
    CHECK(in_row_space(e1, Gf2Vector::ones(10)));

    // beta acts through Z_2^{m1} / <1, eps>: beta = 1 is the product class
    CHECK(dj_canonical(normal_form_lambda_beta(4, 6, Gf2Vector::ones(4))) ==
          dj_canonical(normal_form_lambda_beta(4, 6, Gf2Vector(4))));
    CHECK(dj_canonical(normal_form_lambda_beta(4, 6, Gf2Vector::alternating(4))) ==
          dj_canonical(normal_form_lambda_beta(4, 6, Gf2Vector(4))));

    CHECK_THROWS_AS(normal_form_lambda_beta(5, 4, Gf2Vector(5)), InvalidCharMapError);
    CHECK_THROWS_AS(normal_form_lambda_beta(4, 7, Gf2Vector(4)), InvalidCharMapError);
    CHECK_THROWS_AS(normal_form_lambda_beta(4, 6, Gf2Vector(6)), DimensionError);
}

TEST_CASE("all normal forms over even polygon products are characteristic") {
    for (auto [m1, m2] : {std::pair{4, 4}, std::pair{4, 6}, std::pair{6, 4}}) {
        SimplicialComplex k = SimplicialComplex::polygon_product_dual(m1, m2);
        for (std::uint64_t bits = 0; bits < (1ULL << m1); ++bits) {
            Gf2Matrix lambda = normal_form_lambda_beta(m1, m2, Gf2Vector(m1, bits));
            CHECK(is_characteristic(k, lambda).ok);
            CHECK(in_row_space(lambda, Gf2Vector::ones(m1 + m2)));
        }
    }
}
