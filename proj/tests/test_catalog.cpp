#include <doctest.h>

#include "symcover/catalog.hpp"

using namespace symcover;

TEST_CASE("catalog entries load and validate") {
    for (const std::string& id : catalog_complex_ids()) {
        CatalogEntry entry = catalog_get(id);
        CHECK(entry.id == id);
        CHECK_FALSE(entry.provenance.empty());
    }
    CHECK_THROWS_AS(catalog_get("no-such-complex"), UnknownIdError);
    CHECK_THROWS_AS(catalog_matrix("no-such-matrix"), UnknownIdError);
    CHECK_THROWS_AS(catalog_get("polygon-product-2-9"), UnknownIdError);
}

TEST_CASE("pinned facet lists") {
    SimplicialComplex l882 = catalog_get("lutz_m10_247882").complex;
    CHECK(l882.facets().size() == 25);
    CHECK(l882.facets()[0] == 0b0000001111);  // 0123
    CHECK(l882.has_face(std::vector<int>{0, 1, 2, 4}));

    SimplicialComplex l = catalog_get("L-fig1").complex;
    CHECK(l.facets().size() == 16);
    CHECK(l.has_face(std::vector<int>{0, 6, 8}));

    CHECK(catalog_matrix("lambda-A.2").column_codes() ==
          std::vector<std::uint32_t>{1, 2, 4, 8, 14, 14, 4, 2, 8, 1});
    CHECK(catalog_matrix("example-5.5").column_codes() ==
          std::vector<std::uint32_t>{1, 2, 1, 2, 7, 4, 8, 4, 8});
    CHECK(catalog_matrix("mu-sec6").column_codes() ==
          std::vector<std::uint32_t>{1, 1, 4, 4, 1, 2, 2, 2, 4, 4});
}

TEST_CASE("startup self-test pairings hold") {
    CHECK(is_characteristic(catalog_get("L-fig1").complex, catalog_matrix("mu-sec6")).ok);
    CHECK(is_characteristic(catalog_get("polygon-product-5-4").complex,
                            catalog_matrix("example-5.5")).ok);
    CHECK(is_characteristic(catalog_get("IxQ-fig1").complex, catalog_matrix("lambda-IxQ")).ok);
    CHECK(is_characteristic(catalog_get("lutz_m10_247880").complex,
                            catalog_matrix("lambda-A.2")).ok);
}

TEST_CASE("facet-list parsing") {
    ParsedComplex simplex = parse_complex("0 1 2 3\n0 1 2 4\n0 1 3 4\n0 2 3 4\n1 2 3 4\n");
    CHECK(simplex.complex == SimplicialComplex::boundary_of_simplex(4));
    CHECK(simplex.warnings.empty());

    ParsedComplex with_header = parse_complex("# a triangle with a spare vertex\nm=4\n0 1 2\n");
    CHECK(with_header.complex.m() == 4);
    CHECK(with_header.complex.facets().size() == 1);

    ParsedComplex json_form = parse_complex(R"({"m": 3, "facets": [[0,1],[1,2],[2,0]]})");
    CHECK(json_form.complex == SimplicialComplex::polygon_dual(3));

    ParsedComplex contained = parse_complex("0 1 2\n0 1\n");
    CHECK(contained.complex.facets().size() == 1);
    CHECK(contained.warnings.size() == 1);

    CHECK_THROWS_AS(parse_complex("0 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("m=2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_complex("{\"m\": bad json"), ParseError);
}

TEST_CASE("matrix parsing") {
    Gf2Matrix ex55 = parse_matrix("1,2,1,2,7,4,8,4,8", 4);
    CHECK(ex55 == catalog_matrix("example-5.5"));

    Gf2Matrix grid = parse_matrix("1 0 1\n0 1 1\n", 2);
    CHECK(grid.column_codes() == std::vector<std::uint32_t>{1, 2, 3});

    CHECK_THROWS_AS(parse_matrix("1,2,99", 4), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 0\n", 2), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 0\n0 2\n", 2), ParseError);
    CHECK_THROWS_AS(parse_matrix("", 4), ParseError);
}

TEST_CASE("serialize and parse round-trip on every catalog entry") {
    for (const std::string& id : catalog_complex_ids()) {
        SimplicialComplex k = catalog_get(id).complex;
        std::string text = serialize_complex(k);
        CHECK(parse_complex(text).complex == k);
        CHECK(serialize_complex(parse_complex(text).complex) == text);
    }
    for (const std::string& id : catalog_matrix_ids()) {
        Gf2Matrix m = catalog_matrix(id);
        std::string text = serialize_matrix(m);
        CHECK(parse_matrix(text, m.nrows()) == m);
        CHECK(serialize_matrix(parse_matrix(text, m.nrows())) == text);
    }
}

TEST_CASE("resolution prefers catalog ids over paths") {
    CHECK(resolve_complex("boundary-simplex-4") == SimplicialComplex::boundary_of_simplex(4));
    CHECK(resolve_matrix("mu-sec6", 3) == catalog_matrix("mu-sec6"));
    CHECK_THROWS_AS(resolve_complex("/nonexistent/path"), ParseError);
}
